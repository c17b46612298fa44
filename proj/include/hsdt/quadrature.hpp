#pragma once
//
// Region-measure estimation over the Ellsberg parameter box: deterministic
// midpoint-grid quadrature with an independent Monte Carlo cross-check.
//
// Determinism contract:
//   * Grid: cells are counted as integers and divided once at the end, so
//     the ratio is bit-identical for any worker count or partitioning.
//   * Monte Carlo: sample i draws its coordinates from the counter-indexed
//     generator in rng.hpp at counters {dims*i, ..., dims*i + dims-1}; a
//     fixed seed therefore gives identical results for any partitioning.
//
// Grid error estimates come from one refinement step (|ratio(n) -
// ratio(n/2)|); Monte Carlo reports the binomial standard error
// sqrt(p(1-p)/samples).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsdt/ellsberg.hpp"
#include "hsdt/rng.hpp"

namespace hsdt {

inline constexpr int kDefaultAreaGrid = 1000;    // 2D points per axis
inline constexpr int kDefaultVolumeGrid = 300;   // 3D points per axis

struct GridSpec {
  int points_per_axis = kDefaultAreaGrid;  // >= 2
  int threads = 0;                         // 0 = hardware concurrency
};

enum class EstimateMethod { grid, monte_carlo };

// Method tag written to CSV output; the Monte Carlo tag pins the generator.
std::string method_name(EstimateMethod method);

struct RegionEstimate {
  double ratio = 0.0;
  double error_estimate = 0.0;
  EstimateMethod method = EstimateMethod::grid;
  std::uint64_t evaluations = 0;                // predicate calls, refinement included
  std::optional<std::uint64_t> seed;            // Monte Carlo only
};

struct EllsbergRegionOptions {
  double u0 = 0.0;
  double u100 = 1.0;
  // When set, the x axis runs over discrete_compositions(N) with equal
  // weights instead of midpoints (an urn of N balls).
  std::optional<int> discrete_urn;
};

namespace detail {

// Runs jobs [0, job_count) on `threads` workers and returns the sum of the
// per-job counts. Partitioning never changes the result: counts are exact
// integers and the jobs are independent.
std::uint64_t parallel_count(int job_count, int threads,
                             const std::function<std::uint64_t(int)>& job);

std::vector<double> midpoints(int n, double lo, double hi);
int resolve_threads(int threads);

}  // namespace detail

// Fraction of the n x n midpoint grid over [0,1]^2 whose cell center
// satisfies pred(x, y).
template <class Pred2>
double midpoint_fraction_2d(int n, int threads, Pred2&& pred) {
  const std::vector<double> ticks = detail::midpoints(n, 0.0, 1.0);
  const std::uint64_t hits =
      detail::parallel_count(n, threads, [&](int i) {
        std::uint64_t h = 0;
        const double x = ticks[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
          if (pred(x, ticks[static_cast<std::size_t>(j)])) ++h;
        return h;
      });
  return static_cast<double>(hits) / (static_cast<double>(n) * static_cast<double>(n));
}

// Same over [0,1]^2 x [0,d_hi] with pred(x, y, d); jobs are d-slices.
// slice_hits, when given, receives the per-slice hit count (size n).
template <class Pred3>
double midpoint_fraction_3d(int n, int threads, double d_hi, Pred3&& pred,
                            std::vector<std::uint64_t>* slice_hits = nullptr) {
  const std::vector<double> ticks = detail::midpoints(n, 0.0, 1.0);
  const std::vector<double> d_ticks = detail::midpoints(n, 0.0, d_hi);
  if (slice_hits) slice_hits->assign(static_cast<std::size_t>(n), 0);
  const std::uint64_t hits =
      detail::parallel_count(n, threads, [&](int k) {
        std::uint64_t h = 0;
        const double d = d_ticks[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
          const double x = ticks[static_cast<std::size_t>(i)];
          for (int j = 0; j < n; ++j)
            if (pred(x, ticks[static_cast<std::size_t>(j)], d)) ++h;
        }
        if (slice_hits) (*slice_hits)[static_cast<std::size_t>(k)] = h;
        return h;
      });
  return static_cast<double>(hits) /
         (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n));
}

// Hit fraction of `samples` uniform draws over [0,1]^2; sample i uses
// counters (2i, 2i+1).
template <class Pred2>
double mc_fraction_2d(std::uint64_t samples, std::uint64_t seed, int threads,
                      Pred2&& pred) {
  constexpr std::uint64_t kChunk = 1u << 16;
  const int jobs = static_cast<int>((samples + kChunk - 1) / kChunk);
  const std::uint64_t hits =
      detail::parallel_count(jobs, threads, [&](int job) {
        std::uint64_t h = 0;
        const std::uint64_t lo = static_cast<std::uint64_t>(job) * kChunk;
        const std::uint64_t hi = std::min(samples, lo + kChunk);
        for (std::uint64_t s = lo; s < hi; ++s) {
          if (pred(uniform01_at(seed, 2 * s), uniform01_at(seed, 2 * s + 1))) ++h;
        }
        return h;
      });
  return static_cast<double>(hits) / static_cast<double>(samples);
}

// Hit fraction over [0,1]^2 x [0,d_hi]; sample i uses counters
// (3i, 3i+1, 3i+2).
template <class Pred3>
double mc_fraction_3d(std::uint64_t samples, std::uint64_t seed, double d_hi,
                      int threads, Pred3&& pred) {
  constexpr std::uint64_t kChunk = 1u << 16;
  const int jobs = static_cast<int>((samples + kChunk - 1) / kChunk);
  const std::uint64_t hits =
      detail::parallel_count(jobs, threads, [&](int job) {
        std::uint64_t h = 0;
        const std::uint64_t lo = static_cast<std::uint64_t>(job) * kChunk;
        const std::uint64_t hi = std::min(samples, lo + kChunk);
        for (std::uint64_t s = lo; s < hi; ++s) {
          const double x = uniform01_at(seed, 3 * s);
          const double y = uniform01_at(seed, 3 * s + 1);
          const double d = d_hi * uniform01_at(seed, 3 * s + 2);
          if (pred(x, y, d)) ++h;
        }
        return h;
      });
  return static_cast<double>(hits) / static_cast<double>(samples);
}

// Fraction of [0,1]^2 (at fixed phase d) showing Ellsberg behavior.
RegionEstimate area_ratio_fixed_d(double d, const GridSpec& grid = {},
                                  const EllsbergRegionOptions& options = {});

// Fraction of the full box [0,1]^2 x [0,pi], d weighted uniformly. The
// detailed variant also returns (d_k, slice area ratio) rows from the main
// grid pass.
struct VolumeResult {
  RegionEstimate estimate;
  std::vector<std::pair<double, double>> slices;
};
VolumeResult volume_ratio_detailed(
    const GridSpec& grid = {kDefaultVolumeGrid, 0},
    const EllsbergRegionOptions& options = {});
RegionEstimate volume_ratio(const GridSpec& grid = {kDefaultVolumeGrid, 0},
                            const EllsbergRegionOptions& options = {});

// Independent Monte Carlo oracles for the two ratios above. samples >= 1000.
RegionEstimate monte_carlo_area_fixed_d(double d, std::uint64_t samples,
                                        std::uint64_t seed,
                                        const EllsbergRegionOptions& options = {},
                                        int threads = 0);
RegionEstimate monte_carlo_volume(std::uint64_t samples, std::uint64_t seed,
                                  const EllsbergRegionOptions& options = {},
                                  int threads = 0);

// area_ratio_fixed_d per phase value, in input order.
std::vector<std::pair<double, RegionEstimate>> sweep_d(
    std::span<const double> d_values, const GridSpec& grid = {},
    const EllsbergRegionOptions& options = {});

}  // namespace hsdt
