#include "hsdt/quadrature.hpp"

#include <cmath>
#include <thread>

namespace hsdt {

namespace detail {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<double> midpoints(int n, double lo, double hi) {
  std::vector<double> ticks(static_cast<std::size_t>(n));
  const double step = (hi - lo) / static_cast<double>(n);
  for (int i = 0; i < n; ++i)
    ticks[static_cast<std::size_t>(i)] = lo + step * (static_cast<double>(i) + 0.5);
  return ticks;
}

std::uint64_t parallel_count(int job_count, int threads,
                             const std::function<std::uint64_t(int)>& job) {
  const int workers = std::min(resolve_threads(threads), std::max(job_count, 1));
  if (workers <= 1) {
    std::uint64_t total = 0;
    for (int j = 0; j < job_count; ++j) total += job(j);
    return total;
  }
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::uint64_t h = 0;
      for (int j = w; j < job_count; j += workers) h += job(j);
      partial[static_cast<std::size_t>(w)] = h;
    });
  }
  for (std::thread& t : pool) t.join();
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total += p;
  return total;
}

}  // namespace detail

namespace {

void validate_grid(const GridSpec& grid) {
  if (grid.points_per_axis < 2)
    throw DomainError("grid: points_per_axis must be >= 2");
  if (grid.threads < 0) throw DomainError("grid: threads must be >= 0");
}

void validate_options(const EllsbergRegionOptions& options) {
  if (!(options.u100 > options.u0))
    throw DomainError("region: payoff utilities must satisfy u100 > u0");
  if (options.discrete_urn && *options.discrete_urn < 1)
    throw DomainError("region: discrete urn size must be >= 1");
}

bool region_point(double x, double y, double d, const EllsbergRegionOptions& o) {
  return ellsberg_predicate(EllsbergPoint{x, y, d, o.u0, o.u100});
}

// Hit count over explicit x nodes crossed with ny midpoints in y.
std::uint64_t count_nodes_2d(std::span<const double> xs, int ny, double d,
                             int threads, const EllsbergRegionOptions& options) {
  const std::vector<double> ys = detail::midpoints(ny, 0.0, 1.0);
  return detail::parallel_count(
      static_cast<int>(xs.size()), threads, [&](int i) {
        std::uint64_t h = 0;
        const double x = xs[static_cast<std::size_t>(i)];
        for (int j = 0; j < ny; ++j)
          if (region_point(x, ys[static_cast<std::size_t>(j)], d, options)) ++h;
        return h;
      });
}

// One fixed-d pass; returns the hit fraction and accumulates evaluations.
double area_pass(double d, int n, int threads, const EllsbergRegionOptions& options,
                 std::uint64_t* evaluations) {
  if (options.discrete_urn) {
    const std::vector<double> xs = discrete_compositions(*options.discrete_urn);
    const std::uint64_t cells =
        static_cast<std::uint64_t>(xs.size()) * static_cast<std::uint64_t>(n);
    *evaluations += cells;
    return static_cast<double>(count_nodes_2d(xs, n, d, threads, options)) /
           static_cast<double>(cells);
  }
  *evaluations += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return midpoint_fraction_2d(n, threads, [&](double x, double y) {
    return region_point(x, y, d, options);
  });
}

// One 3D pass; d-slices are jobs. slice_hits (optional) gets per-slice counts.
double volume_pass(int n, int threads, const EllsbergRegionOptions& options,
                   std::uint64_t* evaluations,
                   std::vector<std::uint64_t>* slice_hits) {
  if (options.discrete_urn) {
    const std::vector<double> xs = discrete_compositions(*options.discrete_urn);
    const std::vector<double> ds = detail::midpoints(n, 0.0, kPi);
    if (slice_hits) slice_hits->assign(static_cast<std::size_t>(n), 0);
    const std::uint64_t per_slice =
        static_cast<std::uint64_t>(xs.size()) * static_cast<std::uint64_t>(n);
    *evaluations += per_slice * static_cast<std::uint64_t>(n);
    const std::uint64_t hits = detail::parallel_count(n, threads, [&](int k) {
      const std::uint64_t h =
          count_nodes_2d(xs, n, ds[static_cast<std::size_t>(k)], 1, options);
      if (slice_hits) (*slice_hits)[static_cast<std::size_t>(k)] = h;
      return h;
    });
    return static_cast<double>(hits) /
           (static_cast<double>(per_slice) * static_cast<double>(n));
  }
  *evaluations += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                  static_cast<std::uint64_t>(n);
  return midpoint_fraction_3d(
      n, threads, kPi,
      [&](double x, double y, double d) { return region_point(x, y, d, options); },
      slice_hits);
}

void validate_phase_arg(double d) {
  if (!std::isfinite(d) || d < 0.0 || d > kPi)
    throw DomainError("phase d must lie in [0, pi], got " + std::to_string(d));
}

void validate_samples(std::uint64_t samples) {
  if (samples < 1000)
    throw DomainError("monte carlo: need at least 1000 samples");
}

double binomial_error(double p, std::uint64_t samples) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
}

// Maps a uniform draw to one of the N+1 urn compositions.
double composition_from_uniform(double u, const std::vector<double>& xs) {
  const std::size_t k = std::min(
      xs.size() - 1, static_cast<std::size_t>(u * static_cast<double>(xs.size())));
  return xs[k];
}

}  // namespace

std::string method_name(EstimateMethod method) {
  switch (method) {
    case EstimateMethod::grid:
      return "grid-midpoint";
    case EstimateMethod::monte_carlo:
      return std::string("monte-carlo/") + std::string(kRngVersion);
  }
  return "unknown";
}

RegionEstimate area_ratio_fixed_d(double d, const GridSpec& grid,
                                  const EllsbergRegionOptions& options) {
  validate_phase_arg(d);
  validate_grid(grid);
  validate_options(options);
  const int n = grid.points_per_axis;
  std::uint64_t evaluations = 0;
  const double ratio = area_pass(d, n, grid.threads, options, &evaluations);
  const double coarse =
      area_pass(d, std::max(1, n / 2), grid.threads, options, &evaluations);
  return RegionEstimate{ratio, std::abs(ratio - coarse), EstimateMethod::grid,
                        evaluations, std::nullopt};
}

VolumeResult volume_ratio_detailed(const GridSpec& grid,
                                   const EllsbergRegionOptions& options) {
  validate_grid(grid);
  validate_options(options);
  const int n = grid.points_per_axis;
  std::uint64_t evaluations = 0;
  std::vector<std::uint64_t> slice_hits;
  const double ratio =
      volume_pass(n, grid.threads, options, &evaluations, &slice_hits);
  const double coarse =
      volume_pass(std::max(1, n / 2), grid.threads, options, &evaluations, nullptr);

  VolumeResult result;
  result.estimate = RegionEstimate{ratio, std::abs(ratio - coarse),
                                   EstimateMethod::grid, evaluations, std::nullopt};
  const std::vector<double> ds = detail::midpoints(n, 0.0, kPi);
  const double cells_per_slice =
      options.discrete_urn
          ? static_cast<double>(options.discrete_urn.value() + 1) * n
          : static_cast<double>(n) * static_cast<double>(n);
  result.slices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    result.slices.emplace_back(
        ds[static_cast<std::size_t>(k)],
        static_cast<double>(slice_hits[static_cast<std::size_t>(k)]) /
            cells_per_slice);
  }
  return result;
}

RegionEstimate volume_ratio(const GridSpec& grid,
                            const EllsbergRegionOptions& options) {
  return volume_ratio_detailed(grid, options).estimate;
}

RegionEstimate monte_carlo_area_fixed_d(double d, std::uint64_t samples,
                                        std::uint64_t seed,
                                        const EllsbergRegionOptions& options,
                                        int threads) {
  validate_phase_arg(d);
  validate_samples(samples);
  validate_options(options);
  double ratio = 0.0;
  if (options.discrete_urn) {
    const std::vector<double> xs = discrete_compositions(*options.discrete_urn);
    ratio = mc_fraction_2d(samples, seed, threads, [&](double u, double y) {
      return region_point(composition_from_uniform(u, xs), y, d, options);
    });
  } else {
    ratio = mc_fraction_2d(samples, seed, threads, [&](double x, double y) {
      return region_point(x, y, d, options);
    });
  }
  return RegionEstimate{ratio, binomial_error(ratio, samples),
                        EstimateMethod::monte_carlo, samples, seed};
}

RegionEstimate monte_carlo_volume(std::uint64_t samples, std::uint64_t seed,
                                  const EllsbergRegionOptions& options,
                                  int threads) {
  validate_samples(samples);
  validate_options(options);
  double ratio = 0.0;
  if (options.discrete_urn) {
    const std::vector<double> xs = discrete_compositions(*options.discrete_urn);
    ratio = mc_fraction_3d(samples, seed, kPi, threads,
                           [&](double u, double y, double d) {
                             return region_point(composition_from_uniform(u, xs),
                                                 y, d, options);
                           });
  } else {
    ratio = mc_fraction_3d(samples, seed, kPi, threads,
                           [&](double x, double y, double d) {
                             return region_point(x, y, d, options);
                           });
  }
  return RegionEstimate{ratio, binomial_error(ratio, samples),
                        EstimateMethod::monte_carlo, samples, seed};
}

std::vector<std::pair<double, RegionEstimate>> sweep_d(
    std::span<const double> d_values, const GridSpec& grid,
    const EllsbergRegionOptions& options) {
  std::vector<std::pair<double, RegionEstimate>> rows;
  rows.reserve(d_values.size());
  for (double d : d_values)
    rows.emplace_back(d, area_ratio_fixed_d(d, grid, options));
  return rows;
}

}  // namespace hsdt
