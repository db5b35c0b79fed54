#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gjp/observation.hpp"

namespace gjp {

/// Box domain: agent variables are "peeking" flags. Every agent sees every
/// agent variable; all other variables are inside the box and visible to an
/// agent exactly while its own flag is true.
class NumberModel final : public ObservationModel {
 public:
  explicit NumberModel(const Signature& signature);

  std::string_view name() const override { return "number"; }
  bool sees(AgentId agent, const State& state, VarId var) const override;

 private:
  const Signature* signature_;
};

/// Grapevine: agent variables hold rooms and are public. Each secret has a
/// channel that holds the room of the current share, or the symbol `none`.
/// A quiet channel is visible to everyone; an active one only to agents in
/// that room. A secret is visible to its owner, and to anyone in earshot of
/// its channel.
class GrapevineModel final : public ObservationModel {
 public:
  struct Secret {
    VarId value;
    VarId channel;
    AgentId owner;
  };

  GrapevineModel(const Signature& signature, std::vector<Secret> secrets);

  std::string_view name() const override { return "grapevine"; }
  bool sees(AgentId agent, const State& state, VarId var) const override;

 private:
  const Signature* signature_;
  std::vector<Secret> secrets_;
  std::optional<Value> quiet_;
};

/// Big Brother Logic: stationary cameras whose agent variable is a heading in
/// degrees. A camera sees an object variable iff the object lies strictly
/// within 45 degrees of its heading (or on the camera's own grid point).
/// Headings are public.
class BblModel final : public ObservationModel {
 public:
  struct Point {
    int x = 0;
    int y = 0;
  };

  BblModel(const Signature& signature, std::map<std::uint32_t, Point> cameras,
           std::map<std::uint32_t, Point> objects);

  std::string_view name() const override { return "bbl"; }
  bool sees(AgentId agent, const State& state, VarId var) const override;

  static constexpr double kHalfFieldOfView = 45.0;

 private:
  const Signature* signature_;
  std::map<std::uint32_t, Point> cameras_;  // agent index -> position
  std::map<std::uint32_t, Point> objects_;  // variable index -> position
};

/// Smallest absolute angle in degrees between a heading and the vector from
/// `from` to `to`.
double relative_angle(double heading_degrees, BblModel::Point from, BblModel::Point to);

std::unique_ptr<ObservationModel> make_number_model(const Signature& signature, const ModelParams& params);
std::unique_ptr<ObservationModel> make_grapevine_model(const Signature& signature, const ModelParams& params);
std::unique_ptr<ObservationModel> make_bbl_model(const Signature& signature, const ModelParams& params);

void register_builtin_models(ModelRegistry& registry);

}  // namespace gjp
