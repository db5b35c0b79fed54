#!/usr/bin/env python3
"""Writes the grounded Grapevine domain file.

Four agents in two rooms. Each agent owns a secret; sharing or lying sets the
secret's channel to the speaker's room for that step only, so exactly the
agents in that room observe the claimed value. Actions are generated for the
secrets named with --speak-about (default: a's secret, the only one the shipped
goals mention).
"""

import argparse

AGENTS = ["a", "b", "c", "d"]
ROOMS = ["room1", "room2"]
VALUES = ["true", "false"]


def negate(v):
    return "false" if v == "true" else "true"


def reset_channels(keep=None):
    return [f"  eff shared_{x} := none" for x in AGENTS if x != keep]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--speak-about", nargs="+", default=["a"], choices=AGENTS)
    parser.add_argument("-o", "--output", default="-")
    args = parser.parse_args()

    out = ["# Generated by tools/gen/grapevine.py; edit the script, not this file.", "domain grapevine", ""]
    out += [f"agent {x} : enum {' '.join(ROOMS)}" for x in AGENTS]
    out += [f"var sct_{x} : bool" for x in AGENTS]
    out += [f"var shared_{x} : enum none {' '.join(ROOMS)}" for x in AGENTS]
    out += ["", "observation grapevine"]
    out += [f"param secret sct_{x} shared_{x} {x}" for x in AGENTS]

    for x in AGENTS:
        for room in ROOMS:
            other = ROOMS[1 - ROOMS.index(room)]
            out += ["", f"action move_{x}_{room}", f"  pre (= {x} {other})", f"  eff {x} := {room}"]
            out += reset_channels()
            out.append("end")

    for owner in args.speak_about:
        for speaker in AGENTS:
            for value in VALUES:
                for kind, believed in (("share", value), ("lie", negate(value))):
                    out += [
                        "",
                        f"action {kind}_{speaker}_{owner}_{value}",
                        f"  pre (B {speaker} (= sct_{owner} {believed}))",
                        f"  eff sct_{owner} := {value}",
                        f"  eff shared_{owner} := {speaker}",
                    ]
                    out += reset_channels(keep=owner)
                    out.append("end")

    text = "\n".join(out) + "\n"
    if args.output == "-":
        print(text, end="")
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
