#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

// splitmix64: cheap bijective mixer used to derive decorrelated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable random stream. All draws go through explicit algorithms (Lemire
// bounded ints, inverse-CDF discrete) so results depend only on the seed and
// this code, not on standard-library distribution internals.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::out_of_range, "RngStream::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = u64();
    } while (x >= limit);
    return x % bound;
  }

  // Exponential with the given rate.
  double exponential(double rate) {
    if (!(rate > 0)) fail(Errc::out_of_range, "RngStream::exponential: rate must be positive");
    double u;
    do {
      u = unit();
    } while (u == 0.0);
    return -std::log(u) / rate;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Stream for one worker or one sample, derived from a master seed. Any
// partition of samples across workers yields identical per-sample results.
inline RngStream substream(std::uint64_t master, std::uint64_t index) {
  return RngStream(splitmix64(master ^ (0x632be59bd9b4e019ULL * (index + 1))));
}

// Discrete distribution over arbitrary integer values, sampled by inverse-CDF
// binary search. Deterministic given the stream.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;
  DiscreteSampler(std::vector<int> values, const std::vector<double>& weights) : values_(std::move(values)) {
    if (values_.size() != weights.size() || values_.empty())
      fail(Errc::out_of_range, "DiscreteSampler: bad value/weight lists");
    cdf_.resize(weights.size());
    double acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!(weights[i] >= 0)) fail(Errc::out_of_range, "DiscreteSampler: negative weight");
      acc += weights[i];
      cdf_[i] = acc;
    }
    if (!(acc > 0)) fail(Errc::out_of_range, "DiscreteSampler: zero total weight");
    for (double& c : cdf_) c /= acc;
    cdf_.back() = 1.0;
  }

  int operator()(RngStream& rng) const {
    const double u = rng.unit();
    std::size_t lo = 0, hi = cdf_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cdf_[mid] <= u)
        lo = mid + 1;
      else
        hi = mid;
    }
    return values_[lo];
  }

 private:
  std::vector<int> values_;
  std::vector<double> cdf_;
};

}  // namespace degseq
