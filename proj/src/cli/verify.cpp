#include "afshar/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "afshar/complementarity.hpp"
#include "afshar/grating.hpp"
#include "afshar/numeric.hpp"
#include "afshar/scattering.hpp"

namespace afshar::cli {

std::optional<Perturbation> parse_perturbation(std::string_view symbol) {
  if (symbol.empty() || symbol == "none") return Perturbation::none;
  if (symbol == "r0") return Perturbation::r0;
  if (symbol == "t0") return Perturbation::t0;
  if (symbol == "r1") return Perturbation::r1;
  if (symbol == "t1") return Perturbation::t1;
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Reference value of D_t(0.06), evaluated in 40-digit arithmetic.
constexpr double kDistinguishabilityAt006 = 0.880042435215336611;

AmplitudeTable make_table(double a, int order, Perturbation perturbation) {
  AmplitudeTable table(GratingSpec(a, 1.0, order));
  switch (perturbation) {
    case Perturbation::none: return table;
    case Perturbation::r0:
      return table.with_override(Channel::reflected, 0, table.reflected(0) + kPerturbationSize);
    case Perturbation::t0:
      return table.with_override(Channel::transmitted, 0,
                                 table.transmitted(0) + kPerturbationSize);
    case Perturbation::r1:
      return table.with_override(Channel::reflected, 1, table.reflected(1) + kPerturbationSize);
    case Perturbation::t1:
      return table.with_override(Channel::transmitted, 1,
                                 table.transmitted(1) + kPerturbationSize);
  }
  return table;
}

CheckResult at_most(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, "<=", measured <= tolerance};
}

CheckResult below(std::string name, double measured, double limit) {
  return {std::move(name), measured, limit, "<", measured < limit};
}

std::string with_covering(std::string_view label, double a) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.*s (a=%g)", static_cast<int>(label.size()), label.data(),
                a);
  return buffer;
}

bool all_finite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

// Runs every library operation at a degenerate covering ratio; returns the
// number of non-finite results.
int degenerate_faults(double a) {
  int faults = 0;
  const GratingSpec spec(a, 1.0, kGridFunctionOrder);
  const AmplitudeTable table(spec);
  for (Channel channel : {Channel::transmitted, Channel::reflected}) {
    const VisibilityResult closed = visibility_closed(a, channel);
    const VisibilityResult quad = visibility_quadrature(a, channel);
    const ComplementarityRecord record = complementarity_record(a, channel);
    const OrderSpectrum single = single_slit_spectrum(table, channel);
    const OrderSpectrum twin = two_slit_spectrum(table, 0.0, channel);
    if (!all_finite({closed.v, closed.i_max, closed.i_min, quad.v, quad.i_max, quad.i_min,
                     record.duality, distinguishability_from_amplitudes(table, channel),
                     single.total(), twin.total()})) {
      ++faults;
    }
  }
  const DetectorSignal two = detector_signal(two_slit_spectrum(table, 0.0, Channel::transmitted));
  const DetectorSignal one = single_slit_detector_signal(spec);
  if (!all_finite({two.total(), one.total(), normalization_defect(table),
                   grid_function(0.5, spec), grid_function(0.0, spec)})) {
    ++faults;
  }
  return faults;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  auto& checks = report.checks;
  const int order = options.order;
  const double tail = truncation_tail_bound(order);
  const std::vector<double> grid = uniform_covering_grid(101);

  double worst_defect = 0.0;
  double worst_identity = 0.0;
  double worst_dual_t = 0.0;
  double worst_dual_r = 0.0;
  for (double a : grid) {
    const AmplitudeTable table = make_table(a, order, options.perturbation);
    worst_defect = std::max(worst_defect, std::fabs(normalization_defect(table)));
    const double r0 = table.reflected(0);
    const double t0 = table.transmitted(0);
    worst_identity =
        std::max(worst_identity, std::fabs(r0 * r0 + t0 * t0 + 2.0 * (a - a * a) - 1.0));
    worst_dual_t = std::max(
        worst_dual_t, std::fabs(distinguishability_from_amplitudes(table, Channel::transmitted) -
                                distinguishability_closed(a, Channel::transmitted)));
    worst_dual_r = std::max(
        worst_dual_r, std::fabs(distinguishability_from_amplitudes(table, Channel::reflected) -
                                distinguishability_closed(a, Channel::reflected)));
  }
  checks.push_back(at_most("normalization defect, 101 covering ratios", worst_defect, tail));
  checks.push_back(at_most("normalization identity r0^2+t0^2+2(a-a^2)=1", worst_identity, 1e-14));

  for (Channel channel : {Channel::transmitted, Channel::reflected}) {
    double worst = 0.0;
    for (double a : grid) {
      worst = std::max(worst, std::fabs(visibility_closed(a, channel).v -
                                        visibility_quadrature(a, channel, {4096}).v));
    }
    checks.push_back(
        at_most("visibility closed form vs quadrature, " + std::string(to_string(channel)), worst,
                1e-9));
  }
  checks.push_back(at_most("visibility V_t(0.5) = 2/pi",
                           std::fabs(visibility_closed(0.5, Channel::transmitted).v - 2.0 / kPi),
                           1e-12));

  checks.push_back(at_most("distinguishability amplitudes vs closed form, transmitted",
                           worst_dual_t, 1e-14));
  checks.push_back(at_most("distinguishability amplitudes vs closed form, reflected",
                           worst_dual_r, 1e-14));
  checks.push_back(at_most(
      "distinguishability D_t(0.06)",
      std::fabs(distinguishability_from_amplitudes(make_table(0.06, 1, options.perturbation),
                                                   Channel::transmitted) -
                kDistinguishabilityAt006),
      1e-6));

  const std::vector<double> sweep_grid = uniform_covering_grid(1001);
  for (Channel channel : {Channel::transmitted, Channel::reflected}) {
    const auto records = complementarity_sweep(sweep_grid, channel);
    double highest = 0.0;
    double lowest = 1.0;
    for (const auto& record : records) {
      highest = std::max(highest, record.duality);
      lowest = std::min(lowest, record.duality);
    }
    const std::string suffix = ", " + std::string(to_string(channel));
    checks.push_back(at_most("duality bound max(V^2+D^2) - 1" + suffix, highest - 1.0, 1e-12));
    checks.push_back(at_most("duality endpoints |V^2+D^2 - 1|" + suffix,
                             std::max(std::fabs(records.front().duality - 1.0),
                                      std::fabs(records.back().duality - 1.0)),
                             0.0));
    checks.push_back(below("duality interior minimum" + suffix, lowest, 0.5));
  }

  std::vector<double> parseval_coverings = {0.06, 0.25, 0.5, 0.75};
  if (options.extra_covering &&
      std::find(parseval_coverings.begin(), parseval_coverings.end(), *options.extra_covering) ==
          parseval_coverings.end()) {
    parseval_coverings.push_back(*options.extra_covering);
  }
  for (double a : parseval_coverings) {
    const AmplitudeTable table = make_table(a, order, options.perturbation);
    const double fringe = sin_pi(a) / kPi;
    const double transmitted = two_slit_spectrum(table, 0.0, Channel::transmitted).total();
    const double reflected = two_slit_spectrum(table, 0.0, Channel::reflected).total();
    checks.push_back(at_most(with_covering("two-slit transmitted power vs 1-a+sin(a pi)/pi", a),
                             std::fabs(transmitted - (1.0 - a + fringe)), tail));
    checks.push_back(at_most(with_covering("two-slit reflected power vs a-sin(a pi)/pi", a),
                             std::fabs(reflected - (a - fringe)), tail));
    checks.push_back(at_most(with_covering("two-slit total power vs 1", a),
                             std::fabs(transmitted + reflected - 1.0), tail));
  }

  checks.push_back(at_most("degenerate gratings a=0 and a=1, non-finite results",
                           degenerate_faults(0.0) + degenerate_faults(1.0), 0.0));
  checks.push_back(at_most("limit branch |V_t(1) - 1|",
                           std::fabs(visibility_closed(1.0, Channel::transmitted).v - 1.0), 0.0));
  checks.push_back(at_most("limit branch |V_r(0) - 1|",
                           std::fabs(visibility_closed(0.0, Channel::reflected).v - 1.0), 0.0));
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  char line[256];
  for (const auto& check : report.checks) {
    std::snprintf(line, sizeof line, "[%s] %-60s measured=%.6e %s %.6e\n",
                  check.passed ? "PASS" : "FAIL", check.name.c_str(), check.measured,
                  check.relation.c_str(), check.tolerance);
    out << line;
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  out << (failed == 0 ? "all " : "") << report.checks.size() - failed << " of "
      << report.checks.size() << " checks passed\n";
}

}  // namespace afshar::cli
