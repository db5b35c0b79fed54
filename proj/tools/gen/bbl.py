#!/usr/bin/env python3
"""Writes the grounded Big Brother Logic domain file.

Two stationary cameras on a 4x4 grid turn in 45 degree steps. Turning is
grounded per current heading so the effect can wrap from 180 to -135.
"""

import argparse

HEADINGS = [-135, -90, -45, 0, 45, 90, 135, 180]
CAMERAS = {"a": (3, 3), "b": (1, 1)}
OBJECTS = {"o1": (0, 0), "o2": (2, 2), "o3": (3, 3)}


def label(h):
    return f"m{-h}" if h < 0 else str(h)


def wrap(h):
    return (h + 180) % 360 - 180 if (h + 180) % 360 != 0 else 180


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--output", default="-")
    args = parser.parse_args()

    values = " ".join(str(h) for h in HEADINGS)
    out = ["# Generated by tools/gen/bbl.py; edit the script, not this file.", "domain bbl", ""]
    out += [f"agent {c} : int {values}" for c in CAMERAS]
    out += [f"var {o} : int 1..3" for o in OBJECTS]
    out += ["", "observation bbl"]
    out += [f"param camera {c} {x} {y}" for c, (x, y) in CAMERAS.items()]
    out += [f"param object {o} {x} {y}" for o, (x, y) in OBJECTS.items()]
    for c in CAMERAS:
        for h in HEADINGS:
            for direction, delta in (("left", 45), ("right", -45)):
                out += [
                    "",
                    f"action turn_{c}_{direction}_from_{label(h)}",
                    f"  pre (= {c} {h})",
                    f"  eff {c} := {wrap(h + delta)}",
                    "end",
                ]
    text = "\n".join(out) + "\n"
    if args.output == "-":
        print(text, end="")
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
