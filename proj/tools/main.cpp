// hsdt — decision models on a Hilbert possibility space.
//
// Subcommands:
//   eval    evaluate a scenario file (expected or mind-moderated utilities)
//   region  Ellsberg region area at fixed phase d, optional CSV/SVG/MC check
//   volume  Ellsberg region volume over the full (x, y, d) box
//   sweep   region areas across a list of phase values

#include <iostream>

#include "CLI11.hpp"
#include "hsdt/cli.hpp"
#include "hsdt/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decision models on a Hilbert possibility space"};
  app.set_version_flag("--version", std::string(hsdt::kToolName) + " " +
                                        std::string(hsdt::kToolVersion));
  app.require_subcommand(1);

  hsdt::cli::EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a scenario file");
  eval->add_option("scenario", eval_args.scenario_path, "Scenario JSON file")
      ->required();

  hsdt::cli::RegionArgs region_args;
  CLI::App* region =
      app.add_subcommand("region", "Region area ratio at fixed phase d");
  region->add_option("--d", region_args.d, "Phase d in radians")->required();
  region->add_flag("--pi-units", region_args.pi_units,
                   "Interpret --d as a multiple of pi");
  region->add_option("--grid", region_args.grid, "Grid points per axis")
      ->capture_default_str();
  region->add_option("--u0", region_args.u0, "Utility of the losing payoff")
      ->capture_default_str();
  region->add_option("--u100", region_args.u100, "Utility of the winning payoff")
      ->capture_default_str();
  region->add_option("--discrete-urn", region_args.discrete_urn,
                     "Restrict x to an N-ball urn's compositions");
  region->add_option("--csv", region_args.csv_path, "Write results as CSV");
  region->add_option("--svg", region_args.svg_path, "Write a region raster plot");
  region->add_option("--mc", region_args.mc_samples,
                     "Monte Carlo cross-check with this many samples");
  region->add_option("--seed", region_args.seed, "Monte Carlo seed")
      ->capture_default_str();

  hsdt::cli::VolumeArgs volume_args;
  CLI::App* volume =
      app.add_subcommand("volume", "Region volume ratio over the (x, y, d) box");
  volume->add_option("--grid", volume_args.grid, "Grid points per axis")
      ->capture_default_str();
  volume->add_option("--u0", volume_args.u0, "Utility of the losing payoff")
      ->capture_default_str();
  volume->add_option("--u100", volume_args.u100, "Utility of the winning payoff")
      ->capture_default_str();
  volume->add_option("--discrete-urn", volume_args.discrete_urn,
                     "Restrict x to an N-ball urn's compositions");
  volume->add_option("--csv", volume_args.csv_path,
                     "Write results (plus per-d slices) as CSV");
  volume->add_option("--mc", volume_args.mc_samples,
                     "Monte Carlo cross-check with this many samples");
  volume->add_option("--seed", volume_args.seed, "Monte Carlo seed")
      ->capture_default_str();

  hsdt::cli::SweepArgs sweep_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Region areas across phase values");
  sweep->add_option("--d", sweep_args.d_values,
                    "Phase values (default: 0, pi/4, pi/2, 3pi/4, pi)");
  sweep->add_option("--step", sweep_args.step, "Sweep 0..pi in steps of this size")
      ->excludes("--d");
  sweep->add_flag("--pi-units", sweep_args.pi_units,
                  "Interpret --d/--step as multiples of pi");
  sweep->add_option("--grid", sweep_args.grid, "Grid points per axis")
      ->capture_default_str();
  sweep->add_option("--u0", sweep_args.u0, "Utility of the losing payoff")
      ->capture_default_str();
  sweep->add_option("--u100", sweep_args.u100, "Utility of the winning payoff")
      ->capture_default_str();
  sweep->add_option("--discrete-urn", sweep_args.discrete_urn,
                    "Restrict x to an N-ball urn's compositions");
  sweep->add_option("--csv", sweep_args.csv_path, "Write results as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (eval->parsed()) return hsdt::cli::cmd_eval(eval_args, std::cout, std::cerr);
  if (region->parsed())
    return hsdt::cli::cmd_region(region_args, std::cout, std::cerr);
  if (volume->parsed())
    return hsdt::cli::cmd_volume(volume_args, std::cout, std::cerr);
  if (sweep->parsed()) return hsdt::cli::cmd_sweep(sweep_args, std::cout, std::cerr);
  return 1;
}
