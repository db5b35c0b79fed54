#include "gjp/domains.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gjp/error.hpp"

namespace gjp {

namespace {

int to_int(const std::string& token) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw ValidationError("expected an integer model parameter, got '" + token + "'");
}

void expect_args(const ModelParam& p, std::size_t n) {
  if (p.args.size() != n) {
    throw ValidationError("model parameter '" + p.key + "' expects " + std::to_string(n) + " arguments");
  }
}

}  // namespace

NumberModel::NumberModel(const Signature& signature) : signature_(&signature) {
  for (auto agent : signature.agents()) {
    if (signature.domain(signature.agent_variable(agent)).kind() != ValueKind::Boolean) {
      throw ValidationError("number model needs boolean agent variables");
    }
  }
}

bool NumberModel::sees(AgentId agent, const State& state, VarId var) const {
  if (signature_->agent_of(var)) {
    return true;
  }
  const auto& flag = state.get(signature_->agent_variable(agent));
  return flag && flag->as_boolean();
}

GrapevineModel::GrapevineModel(const Signature& signature, std::vector<Secret> secrets)
    : signature_(&signature), secrets_(std::move(secrets)) {
  if (auto none = signature.find_symbol("none")) {
    quiet_ = Value::symbol(*none);
  }
}

bool GrapevineModel::sees(AgentId agent, const State& state, VarId var) const {
  const auto& room = state.get(signature_->agent_variable(agent));
  for (const auto& secret : secrets_) {
    const auto& channel = state.get(secret.channel);
    const bool in_earshot = channel && room && *channel == *room;
    if (secret.channel == var) {
      // "none" is the quiet channel; a share is heard only in its own room.
      return in_earshot || (channel && quiet_ && *channel == *quiet_);
    }
    if (secret.value == var) {
      return secret.owner == agent || in_earshot;
    }
  }
  return true;
}

BblModel::BblModel(const Signature& signature, std::map<std::uint32_t, Point> cameras,
                   std::map<std::uint32_t, Point> objects)
    : signature_(&signature), cameras_(std::move(cameras)), objects_(std::move(objects)) {}

bool BblModel::sees(AgentId agent, const State& state, VarId var) const {
  const auto object = objects_.find(var.index);
  if (object == objects_.end()) {
    return true;
  }
  const auto camera = cameras_.find(agent.index);
  if (camera == cameras_.end()) {
    return false;
  }
  const Point from = camera->second;
  const Point to = object->second;
  if (from.x == to.x && from.y == to.y) {
    return true;
  }
  const auto& heading = state.get(signature_->agent_variable(agent));
  if (!heading) {
    return false;
  }
  // Benchmark geometry lies on 45 degree rays, so the tolerance only absorbs
  // atan2 rounding at the exact boundary.
  return relative_angle(static_cast<double>(heading->as_integer()), from, to) < kHalfFieldOfView - 1e-9;
}

double relative_angle(double heading_degrees, BblModel::Point from, BblModel::Point to) {
  const double bearing =
      std::atan2(static_cast<double>(to.y - from.y), static_cast<double>(to.x - from.x)) * 180.0 / std::numbers::pi;
  double diff = std::fmod(std::fabs(bearing - heading_degrees), 360.0);
  return diff > 180.0 ? 360.0 - diff : diff;
}

std::unique_ptr<ObservationModel> make_number_model(const Signature& signature, const ModelParams& params) {
  if (!params.empty()) {
    throw ValidationError("number model takes no parameters");
  }
  return std::make_unique<NumberModel>(signature);
}

std::unique_ptr<ObservationModel> make_grapevine_model(const Signature& signature, const ModelParams& params) {
  std::vector<GrapevineModel::Secret> secrets;
  for (const auto& p : params) {
    if (p.key != "secret") {
      throw ValidationError("unknown grapevine parameter '" + p.key + "'");
    }
    expect_args(p, 3);
    secrets.push_back({signature.variable_or_throw(p.args[0]), signature.variable_or_throw(p.args[1]),
                       signature.agent_or_throw(p.args[2])});
  }
  return std::make_unique<GrapevineModel>(signature, std::move(secrets));
}

std::unique_ptr<ObservationModel> make_bbl_model(const Signature& signature, const ModelParams& params) {
  std::map<std::uint32_t, BblModel::Point> cameras;
  std::map<std::uint32_t, BblModel::Point> objects;
  for (const auto& p : params) {
    expect_args(p, 3);
    const BblModel::Point at{to_int(p.args[1]), to_int(p.args[2])};
    if (p.key == "camera") {
      const auto agent = signature.agent_or_throw(p.args[0]);
      if (signature.domain(signature.agent_variable(agent)).kind() != ValueKind::Integer) {
        throw ValidationError("camera heading '" + p.args[0] + "' must be an integer variable");
      }
      cameras[agent.index] = at;
    } else if (p.key == "object") {
      objects[signature.variable_or_throw(p.args[0]).index] = at;
    } else {
      throw ValidationError("unknown bbl parameter '" + p.key + "'");
    }
  }
  return std::make_unique<BblModel>(signature, std::move(cameras), std::move(objects));
}

void register_builtin_models(ModelRegistry& registry) {
  registry.add("number", make_number_model);
  registry.add("grapevine", make_grapevine_model);
  registry.add("bbl", make_bbl_model);
}

const ModelRegistry& ModelRegistry::builtin() {
  static const ModelRegistry registry = [] {
    ModelRegistry r;
    register_builtin_models(r);
    return r;
  }();
  return registry;
}

}  // namespace gjp
