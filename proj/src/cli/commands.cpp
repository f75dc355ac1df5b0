#include "afshar/cli/commands.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <stdexcept>

#include "afshar/cli/verify.hpp"
#include "afshar/complementarity.hpp"
#include "afshar/grating.hpp"
#include "afshar/scattering.hpp"

namespace afshar::cli {

namespace {

std::string channel_suffix(Channel channel) {
  return channel == Channel::reflected ? "r" : "t";
}

}  // namespace

CsvTable coefficient_table(const RunConfig& config) {
  const int order = effective_order(config, Command::coeffs);
  CsvTable table{"coeffs", {"n", "c_n", "r_n", "t_n"}, {}};
  table.rows.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    table.rows.push_back({static_cast<double>(n), fourier_coefficient(n, config.a),
                          reflection_amplitude(n, config.a), transmission_amplitude(n, config.a)});
  }
  return table;
}

CsvTable pattern_table(const RunConfig& config) {
  const GratingSpec spec(config.a, 1.0, effective_order(config, Command::pattern));
  CsvTable table{"pattern", {"x", "G(x)", "I(x)"}, {}};
  table.rows.reserve(kPatternSamples);
  const int half = (kPatternSamples - 1) / 2;
  for (int i = 0; i < kPatternSamples; ++i) {
    // x = 2 (i - half) / half periods, kept exact on the quarter-period marks.
    const double x = 2.0 * static_cast<double>(i - half) / static_cast<double>(half);
    table.rows.push_back(
        {x, grid_function(x, spec), interference_intensity(x, config.phase, spec.period())});
  }
  return table;
}

std::vector<CsvTable> order_tables(const RunConfig& config) {
  const AmplitudeTable amplitudes(GratingSpec(config.a, 1.0, effective_order(config, Command::orders)));
  std::vector<CsvTable> tables;
  for (Channel channel : expand(effective_channel(config, Command::orders))) {
    CsvTable single{"single_" + channel_suffix(channel), {"n", "P"}, {}};
    const OrderSpectrum single_spectrum = single_slit_spectrum(amplitudes, channel);
    for (const auto& entry : single_spectrum.entries()) {
      single.rows.push_back({entry.order(), entry.probability});
    }
    CsvTable twin{"two_" + channel_suffix(channel), {"m", "P"}, {}};
    const OrderSpectrum two_spectrum = two_slit_spectrum(amplitudes, config.phase, channel);
    for (const auto& entry : two_spectrum.entries()) {
      twin.rows.push_back({entry.order(), entry.probability});
    }
    tables.push_back(std::move(single));
    tables.push_back(std::move(twin));
  }
  return tables;
}

std::vector<CsvTable> sweep_tables(const RunConfig& config) {
  const std::vector<double> grid = uniform_covering_grid(effective_points(config));
  std::vector<CsvTable> tables;
  for (Channel channel : expand(effective_channel(config, Command::sweep))) {
    CsvTable table{"sweep_" + channel_suffix(channel), {"a", "V", "D", "duality"}, {}};
    for (const auto& record : complementarity_sweep(grid, channel)) {
      table.rows.push_back({record.a, record.v, record.d, record.duality});
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

std::vector<CsvTable> tables_for(Command command, const RunConfig& config) {
  switch (command) {
    case Command::coeffs: return {coefficient_table(config), pattern_table(config)};
    case Command::pattern: return {pattern_table(config)};
    case Command::orders: return order_tables(config);
    case Command::sweep: return sweep_tables(config);
    case Command::verify: break;
  }
  return {};
}

int run_command(Command command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config, command);
    if (command == Command::verify) {
      const auto perturbation = parse_perturbation(config.perturb);
      if (!perturbation) throw UsageError("unknown --perturb symbol '" + config.perturb + "'");
      VerifyOptions options;
      options.order = effective_order(config, command);
      if (config.a_given) options.extra_covering = config.a;
      options.perturbation = *perturbation;
      const VerifyReport report = run_verification(options);
      print_report(report, out);
      return report.passed() ? kSuccess : kVerificationFailure;
    }
    const std::vector<CsvTable> tables = tables_for(command, config);
    write_tables(tables, config.out, out);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Afshar double-slit/grating simulator: diffraction orders, visibility, "
               "distinguishability"};
  app.name("afshar");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags given on the command line win");

  RunConfig config;
  int order = 0;
  int points = 0;
  ChannelSelection channel = ChannelSelection::both;
  const std::map<std::string, ChannelSelection> channel_names{
      {"t", ChannelSelection::transmitted}, {"transmitted", ChannelSelection::transmitted},
      {"r", ChannelSelection::reflected},   {"reflected", ChannelSelection::reflected},
      {"both", ChannelSelection::both}};

  auto* a_option = app.add_option("--a", config.a, "covering ratio in [0, 1]");
  auto* order_option = app.add_option("--order", order, "Fourier truncation order N");
  app.add_option("--phase", config.phase, "relative slit phase in radians");
  auto* channel_option = app.add_option("--channel", channel, "channel: transmitted, reflected or both")
                             ->transform(CLI::CheckedTransformer(channel_names))
                             ->option_text("t|r|both");
  auto* points_option = app.add_option("--points", points, "covering-ratio sweep points");
  app.add_option("--out", config.out, "output CSV path (stdout when omitted)");
  app.add_option("--perturb", config.perturb, "verify only: inject an amplitude fault (r0, t0, r1, t1)");

  struct Entry {
    Command command;
    const char* description;
  };
  const Entry entries[] = {
      {Command::coeffs, "Fourier coefficients, amplitudes and the grid-function table"},
      {Command::orders, "single- and two-slit diffraction-order spectra"},
      {Command::pattern, "grid function and fringe intensity over four periods"},
      {Command::sweep, "visibility, distinguishability and V^2+D^2 over covering ratios"},
      {Command::verify, "run the invariant and oracle checks"}};
  std::vector<std::pair<CLI::App*, Command>> subcommands;
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(entry.command)), entry.description);
    subcommands.emplace_back(sub, entry.command);
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  config.a_given = a_option->count() > 0;
  if (order_option->count() > 0) config.order = order;
  if (points_option->count() > 0) config.points = points;
  if (channel_option->count() > 0) config.channel = channel;

  for (const auto& [sub, command] : subcommands) {
    if (sub->parsed()) return run_command(command, config, out, err);
  }
  err << "error: no command given\n";
  return kUsageError;
}

}  // namespace afshar::cli
