#pragma once

// Data-parallel kernels. Every kernel has a serial path producing identical
// results; the OpenMP path only changes the schedule.

#include <cstdint>
#include <exception>
#include <functional>
#include <vector>

#include "wtrv/distributions.hpp"
#include "wtrv/weights.hpp"

namespace wtrv::parallel {

enum class Mode { serial, openmp };

/// Runs f(i) for i in [0, n). The first exception by index is rethrown after
/// all iterations finish.
void for_each_index(std::size_t n, Mode mode, const std::function<void(std::size_t)>& f);

/// Seed for work item `index` of a job seeded with `seed` (splitmix64).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct MonteCarloMean {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t n = 0;
};

/// Mean of w(X) over n inverse-transform draws, split into fixed chunks so the
/// result does not depend on the thread count.
MonteCarloMean mc_weight_mean(const Distribution& dist, const WeightFunction& w, std::size_t n, std::uint64_t seed,
                              Mode mode = Mode::openmp);

/// f evaluated at each point.
std::vector<double> evaluate_grid(const std::function<double(double)>& f, const std::vector<double>& xs,
                                  Mode mode = Mode::openmp);

int max_threads();

}  // namespace wtrv::parallel
