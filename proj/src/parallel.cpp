#include "wtrv/parallel.hpp"

#include <cmath>
#include <random>

#include <omp.h>

namespace wtrv::parallel {

void for_each_index(std::size_t n, Mode mode, const std::function<void(std::size_t)>& f) {
  std::vector<std::exception_ptr> errors(n);
  if (mode == Mode::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MonteCarloMean mc_weight_mean(const Distribution& dist, const WeightFunction& w, std::size_t n, std::uint64_t seed,
                              Mode mode) {
  if (n < 2) throw DomainError("mc_weight_mean: n must be at least 2");
  constexpr std::size_t kChunks = 64;
  std::vector<double> sums(kChunks, 0.0), squares(kChunks, 0.0);
  for_each_index(kChunks, mode, [&](std::size_t c) {
    const std::size_t begin = n * c / kChunks;
    const std::size_t end = n * (c + 1) / kChunks;
    std::mt19937_64 engine(substream_seed(seed, c));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double s = 0.0, q = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      double u = unit(engine);
      while (u <= 0.0) u = unit(engine);
      const double v = w.w(dist.quantile(u));
      s += v;
      q += v * v;
    }
    sums[c] = s;
    squares[c] = q;
  });
  double s = 0.0, q = 0.0;
  for (std::size_t c = 0; c < kChunks; ++c) {
    s += sums[c];
    q += squares[c];
  }
  MonteCarloMean out;
  out.n = n;
  out.mean = s / static_cast<double>(n);
  const double var = (q - s * out.mean) / static_cast<double>(n - 1);
  out.standard_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  return out;
}

std::vector<double> evaluate_grid(const std::function<double(double)>& f, const std::vector<double>& xs, Mode mode) {
  std::vector<double> out(xs.size());
  for_each_index(xs.size(), mode, [&](std::size_t i) { out[i] = f(xs[i]); });
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace wtrv::parallel
