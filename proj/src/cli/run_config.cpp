#include "afshar/cli/run_config.hpp"

#include <cmath>

namespace afshar::cli {

std::string_view to_string(Command command) {
  switch (command) {
    case Command::coeffs: return "coeffs";
    case Command::orders: return "orders";
    case Command::pattern: return "pattern";
    case Command::sweep: return "sweep";
    case Command::verify: return "verify";
  }
  return "unknown";
}

int effective_order(const RunConfig& config, Command command) {
  if (config.order) return *config.order;
  switch (command) {
    case Command::orders: return kSpectrumOrder;
    case Command::verify: return 2000;
    default: return kGridFunctionOrder;
  }
}

ChannelSelection effective_channel(const RunConfig& config, Command command) {
  if (config.channel) return *config.channel;
  return command == Command::orders ? ChannelSelection::both : ChannelSelection::transmitted;
}

int effective_points(const RunConfig& config) { return config.points.value_or(1001); }

std::vector<Channel> expand(ChannelSelection selection) {
  switch (selection) {
    case ChannelSelection::transmitted: return {Channel::transmitted};
    case ChannelSelection::reflected: return {Channel::reflected};
    case ChannelSelection::both: return {Channel::transmitted, Channel::reflected};
  }
  return {};
}

void validate(const RunConfig& config, Command command) {
  if (!(config.a >= 0.0 && config.a <= 1.0)) {
    throw UsageError("--a must lie in [0, 1]");
  }
  if (config.order && *config.order < 1) throw UsageError("--order must be at least 1");
  if (!std::isfinite(config.phase)) throw UsageError("--phase must be finite");
  if (command == Command::sweep && effective_points(config) < 2) {
    throw UsageError("--points must be at least 2");
  }
  if (!config.perturb.empty() && command != Command::verify) {
    throw UsageError("--perturb only applies to verify");
  }
}

}  // namespace afshar::cli
