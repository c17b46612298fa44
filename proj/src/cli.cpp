#include "hsdt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hsdt/scenario.hpp"
#include "hsdt/svg.hpp"
#include "hsdt/version.hpp"

namespace hsdt::cli {

namespace {

std::string fmt_full(double v) {  // round-trip exact, for CSV
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {  // human-readable output
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header() {
  return "command,parameters,ratio,error,evaluations,method,seed,version";
}

std::string tool_tag() {
  return std::string(kToolName) + "/" + std::string(kToolVersion);
}

std::string csv_row(const std::string& command, const std::string& parameters,
                    const RegionEstimate& est) {
  std::ostringstream row;
  row << command << ',' << parameters << ',' << fmt_full(est.ratio) << ','
      << fmt_full(est.error_estimate) << ',' << est.evaluations << ','
      << method_name(est.method) << ','
      << (est.seed ? std::to_string(*est.seed) : std::string("-")) << ','
      << tool_tag();
  return row.str();
}

std::string region_parameters(double d, int grid, const EllsbergRegionOptions& o) {
  std::ostringstream p;
  p << "d=" << fmt_full(d) << ";grid=" << grid << ";u0=" << fmt_full(o.u0)
    << ";u100=" << fmt_full(o.u100) << ";discrete_urn="
    << (o.discrete_urn ? std::to_string(*o.discrete_urn) : std::string("-"));
  return p.str();
}

std::string volume_parameters(int grid, const EllsbergRegionOptions& o) {
  std::ostringstream p;
  p << "grid=" << grid << ";u0=" << fmt_full(o.u0) << ";u100=" << fmt_full(o.u100)
    << ";discrete_urn="
    << (o.discrete_urn ? std::to_string(*o.discrete_urn) : std::string("-"));
  return p.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

// Exception-to-exit-code mapping shared by all commands.
int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse failure at line " << e.line << ", column " << e.column
        << ": " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidAmplitude& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {  // DomainError, DimMismatch, ...
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

std::string svg_for_region(double d, int grid, const EllsbergRegionOptions& options) {
  const int n = std::min(grid, kSvgCellCap);
  const std::vector<double> ticks = detail::midpoints(n, 0.0, 1.0);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) *
                                 static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const EllsbergPoint p{ticks[static_cast<std::size_t>(i)],
                            ticks[static_cast<std::size_t>(j)], d, options.u0,
                            options.u100};
      mask[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(i)] = ellsberg_predicate(p) ? 1 : 0;
    }
  }
  PlotSpec plot;
  plot.d = d;
  return render_region_svg(plot, n, mask);
}

void print_mc_comparison(std::ostream& out, const RegionEstimate& grid_est,
                         const RegionEstimate& mc_est) {
  const double delta = std::abs(grid_est.ratio - mc_est.ratio);
  const double three_sigma = 3.0 * mc_est.error_estimate;
  out << "monte carlo cross-check: ratio = " << fmt_short(mc_est.ratio)
      << " (seed " << *mc_est.seed << ", " << mc_est.evaluations
      << " samples, std error " << fmt_short(mc_est.error_estimate) << ")\n"
      << "  |grid - mc| = " << fmt_short(delta) << ", 3 sigma = "
      << fmt_short(three_sigma) << (delta <= three_sigma ? " [ok]" : " [DISAGREES]")
      << "\n";
}

EllsbergRegionOptions options_from(double u0, double u100,
                                   const std::optional<int>& discrete_urn) {
  EllsbergRegionOptions o;
  o.u0 = u0;
  o.u100 = u100;
  o.discrete_urn = discrete_urn;
  return o;
}

}  // namespace

std::vector<double> default_sweep_grid() {
  return {0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi};
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    ParsedScenario scenario = load_scenario_file(args.scenario_path);
    for (const std::string& w : scenario.warnings) err << "warning: " << w << "\n";

    const DecisionProblem& problem = scenario.problem;
    std::vector<double> utilities;
    utilities.reserve(problem.actions.size());
    for (const PayoffAction& action : problem.actions) {
      utilities.push_back(scenario.mind
                              ? moderated_expected_utility(
                                    *scenario.mind, problem.world_state, action)
                              : expected_utility(action, problem.world_state));
    }
    const ChoiceResult choice = choose_from_utilities(utilities);

    out << "scenario: " << args.scenario_path << "\n";
    if (scenario.mind) {
      const double c2 = std::norm(
          overlap_coefficient(*scenario.mind, problem.world_state));
      out << "mind state present; overlap |c|^2 = " << fmt_short(c2) << "\n";
      out << "action,moderated_utility\n";
    } else {
      out << "action,expected_utility\n";
    }
    for (std::size_t i = 0; i < problem.actions.size(); ++i)
      out << problem.actions[i].label << ',' << fmt_short(utilities[i]) << "\n";
    out << "choice: " << problem.actions[static_cast<std::size_t>(
                             choice.reported_choice)].label << "\n";
    if (choice.best_indices.size() > 1) {
      out << "tie among:";
      for (int i : choice.best_indices)
        out << ' ' << problem.actions[static_cast<std::size_t>(i)].label;
      out << "\n";
    }
    return 0;
  });
}

int cmd_region(const RegionArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const double d = args.pi_units ? args.d * kPi : args.d;
    const EllsbergRegionOptions options =
        options_from(args.u0, args.u100, args.discrete_urn);
    const GridSpec grid{args.grid, 0};
    const RegionEstimate est = area_ratio_fixed_d(d, grid, options);

    out << "region d = " << fmt_short(d) << ", grid " << args.grid
        << ": ratio = " << fmt_short(est.ratio) << " (refinement error "
        << fmt_short(est.error_estimate) << ", " << est.evaluations
        << " evaluations)\n";

    std::optional<RegionEstimate> mc;
    if (args.mc_samples) {
      mc = monte_carlo_area_fixed_d(d, *args.mc_samples, args.seed, options);
      print_mc_comparison(out, est, *mc);
    }

    if (args.csv_path) {
      std::ostringstream csv;
      csv << csv_header() << "\n"
          << csv_row("region", region_parameters(d, args.grid, options), est)
          << "\n";
      if (mc)
        csv << csv_row("region-mc", region_parameters(d, args.grid, options), *mc)
            << "\n";
      write_text_file(*args.csv_path, csv.str());
    }
    if (args.svg_path)
      write_text_file(*args.svg_path, svg_for_region(d, args.grid, options));
    return 0;
  });
}

int cmd_volume(const VolumeArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const EllsbergRegionOptions options =
        options_from(args.u0, args.u100, args.discrete_urn);
    const GridSpec grid{args.grid, 0};
    const VolumeResult result = volume_ratio_detailed(grid, options);
    const RegionEstimate& est = result.estimate;

    out << "r_quant = " << fmt_short(est.ratio) << " (grid " << args.grid
        << " per axis, refinement error " << fmt_short(est.error_estimate)
        << ", " << est.evaluations << " evaluations)\n";
    out << "r_emp in [" << fmt_short(kEmpiricalBandLow * 100.0) << "%, "
        << fmt_short(kEmpiricalBandHigh * 100.0)
        << "%] (survey comparison only, not a reproducibility target)\n";

    std::optional<RegionEstimate> mc;
    if (args.mc_samples) {
      mc = monte_carlo_volume(*args.mc_samples, args.seed, options);
      print_mc_comparison(out, est, *mc);
    }

    if (args.csv_path) {
      std::ostringstream csv;
      csv << csv_header() << "\n"
          << csv_row("volume", volume_parameters(args.grid, options), est) << "\n";
      if (mc)
        csv << csv_row("volume-mc", volume_parameters(args.grid, options), *mc)
            << "\n";
      // Numeric d-slices of the 3D region, one 2D area ratio per row, so the
      // surface can be plotted externally.
      for (const auto& [d_k, slice_ratio] : result.slices) {
        RegionEstimate slice{slice_ratio, 0.0, EstimateMethod::grid, 0,
                             std::nullopt};
        csv << csv_row("volume-slice",
                       region_parameters(d_k, args.grid, options), slice)
            << "\n";
      }
      write_text_file(*args.csv_path, csv.str());
    }
    return 0;
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    std::vector<double> ds;
    if (args.step) {
      const double step = args.pi_units ? *args.step * kPi : *args.step;
      if (!(step > 0.0)) throw DomainError("sweep: step must be positive");
      for (double d = 0.0; d <= kPi + 1e-12; d += step)
        ds.push_back(std::min(d, kPi));
    } else if (!args.d_values.empty()) {
      ds = args.d_values;
      if (args.pi_units)
        for (double& d : ds) d *= kPi;
    } else {
      ds = default_sweep_grid();
    }

    const EllsbergRegionOptions options =
        options_from(args.u0, args.u100, args.discrete_urn);
    const GridSpec grid{args.grid, 0};
    const auto rows = sweep_d(ds, grid, options);

    out << "d,ratio,error\n";
    for (const auto& [d, est] : rows)
      out << fmt_short(d) << ',' << fmt_short(est.ratio) << ','
          << fmt_short(est.error_estimate) << "\n";

    // Advisory on the reference five-point grid: the region grows with d.
    const std::vector<double> reference = default_sweep_grid();
    bool is_reference = rows.size() == reference.size();
    for (std::size_t i = 0; is_reference && i < reference.size(); ++i)
      is_reference = std::abs(ds[i] - reference[i]) <= 1e-12;
    if (is_reference) {
      bool increasing = true;
      for (std::size_t i = 1; i < rows.size(); ++i)
        increasing = increasing && rows[i].second.ratio > rows[i - 1].second.ratio;
      out << "advisory: ratios strictly increasing in d: "
          << (increasing ? "yes" : "NO") << "\n";
    }

    if (args.csv_path) {
      std::ostringstream csv;
      csv << csv_header() << "\n";
      for (const auto& [d, est] : rows)
        csv << csv_row("sweep", region_parameters(d, args.grid, options), est)
            << "\n";
      write_text_file(*args.csv_path, csv.str());
    }
    return 0;
  });
}

}  // namespace hsdt::cli
