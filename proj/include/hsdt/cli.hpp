#pragma once
//
// Command implementations behind the hsdt tool. Each cmd_* captures its
// output on the given streams and returns a process exit status:
//
//   0  success
//   1  usage
//   2  scenario parse/schema/budget/normalization failure
//   3  numeric domain failure (parameters outside their ranges, dimension
//      mismatches and the like)
//   4  I/O failure
//
// All file writes happen after computation succeeds.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hsdt/quadrature.hpp"

namespace hsdt::cli {

// Published share of ambiguity-averse subjects across two-urn experiment
// surveys; printed next to the computed volume ratio for comparison only,
// never used as a pass/fail target.
inline constexpr double kEmpiricalBandLow = 0.572;
inline constexpr double kEmpiricalBandHigh = 0.579;

// Region plots rasterize on their own grid so files stay small; the plot
// grid is min(quadrature grid, this cap) cells per axis.
inline constexpr int kSvgCellCap = 200;

struct EvalArgs {
  std::string scenario_path;
};

struct RegionArgs {
  double d = 0.0;
  bool pi_units = false;
  int grid = kDefaultAreaGrid;
  double u0 = 0.0;
  double u100 = 1.0;
  std::optional<int> discrete_urn;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 0;
};

struct VolumeArgs {
  int grid = kDefaultVolumeGrid;
  double u0 = 0.0;
  double u100 = 1.0;
  std::optional<int> discrete_urn;
  std::optional<std::string> csv_path;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 0;
};

struct SweepArgs {
  std::vector<double> d_values;     // explicit grid; empty = default
  std::optional<double> step;      // alternative: 0, step, 2*step, ... <= pi
  bool pi_units = false;
  int grid = kDefaultAreaGrid;
  double u0 = 0.0;
  double u100 = 1.0;
  std::optional<int> discrete_urn;
  std::optional<std::string> csv_path;
};

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_region(const RegionArgs& args, std::ostream& out, std::ostream& err);
int cmd_volume(const VolumeArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

// The five reference phase values {0, pi/4, pi/2, 3pi/4, pi}.
std::vector<double> default_sweep_grid();

}  // namespace hsdt::cli
