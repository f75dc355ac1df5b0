#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afshar::cli {

/// Deliberate amplitude faults for exercising the verification suite.
enum class Perturbation { none, r0, t0, r1, t1 };

std::optional<Perturbation> parse_perturbation(std::string_view symbol);

/// Size of the offset added to the perturbed amplitude.
inline constexpr double kPerturbationSize = 1e-3;

struct VerifyOptions {
  int order = 2000;
  /// Extra covering ratio for the power-bookkeeping check.
  std::optional<double> extra_covering;
  Perturbation perturbation = Perturbation::none;
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string relation;  ///< how measured is compared with tolerance
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace afshar::cli
