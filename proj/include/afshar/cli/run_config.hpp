#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "afshar/grating.hpp"

namespace afshar::cli {

enum class Command { coeffs, orders, pattern, sweep, verify };

enum class ChannelSelection { transmitted, reflected, both };

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2, kIoError = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Settings shared by all commands. Unset optionals take the per-command
/// default (truncation 50 for coeffs/pattern, 30 for orders, 2000 for
/// verify; channel both for orders, transmitted for sweep; 1001 sweep
/// points).
struct RunConfig {
  double a = 0.06;
  bool a_given = false;
  std::optional<int> order;
  double phase = 0.0;
  std::optional<ChannelSelection> channel;
  std::optional<int> points;
  std::string out;
  std::string perturb;
};

std::string_view to_string(Command command);

/// Throws UsageError when a field is outside the domain the command feeds.
void validate(const RunConfig& config, Command command);

int effective_order(const RunConfig& config, Command command);
ChannelSelection effective_channel(const RunConfig& config, Command command);
int effective_points(const RunConfig& config);

std::vector<Channel> expand(ChannelSelection selection);

}  // namespace afshar::cli
