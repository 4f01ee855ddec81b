#include "degseq/families.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

void require_unit_interval(double p, double q, const char* who) {
  if (!(p > 0) || !(p < 1) || !(q > 0) || !(q < 1))
    fail(Errc::out_of_range, std::string(who) + ": p and q must lie in (0, 1)");
}

}  // namespace

WeightSequence binary_offspring() { return WeightSequence({0.5, 0.0, 0.5}); }

WeightSequence ternary_offspring() { return WeightSequence({2.0 / 3.0, 0.0, 0.0, 1.0 / 3.0}); }

WeightSequence quaternary_offspring() { return WeightSequence({0.75, 0.0, 0.0, 0.0, 0.25}); }

WeightSequence two_parameter_offspring(double p, double q) {
  require_unit_interval(p, q, "two_parameter_offspring");
  return WeightSequence({q * (1.0 - p), (1.0 - q) * (1.0 - p), p});
}

double two_parameter_unary_share(double p, double q) {
  require_unit_interval(p, q, "two_parameter_unary_share");
  const double a = (1.0 - q) * std::sqrt(1.0 - p);
  return a / (a + 2.0 * std::sqrt(p * q));
}

WeightSequence truncated_powerlaw_offspring(int horizon, double exponent) {
  if (horizon < 1) fail(Errc::out_of_range, "truncated_powerlaw_offspring: horizon must be at least 1");
  if (!(exponent > 2.0)) fail(Errc::out_of_range, "truncated_powerlaw_offspring: exponent must exceed 2");
  const double c = 1.0 / boost::math::zeta(exponent - 1.0);
  std::vector<double> w(static_cast<std::size_t>(horizon) + 1, 0.0);
  double mass = 0.0;
  for (int k = 1; k <= horizon; ++k) {
    w[static_cast<std::size_t>(k)] = c * std::pow(static_cast<double>(k), -exponent);
    mass += w[static_cast<std::size_t>(k)];
  }
  w[0] = 1.0 - mass;
  const double tail = std::max(c * boost::math::zeta(exponent) - mass, 0.0);
  return WeightSequence(std::move(w), std::nullopt, tail);
}

WeightSequence stretched_exponential_offspring(int horizon, double mean) {
  if (horizon < 1) fail(Errc::out_of_range, "stretched_exponential_offspring: horizon must be at least 1");
  if (!(mean > 0)) fail(Errc::out_of_range, "stretched_exponential_offspring: mean must be positive");
  std::vector<double> w(static_cast<std::size_t>(horizon) + 1, 0.0);
  double child_slots = 0.0;
  for (int k = 1; k <= horizon; ++k) {
    w[static_cast<std::size_t>(k)] = std::exp(-std::sqrt(static_cast<double>(k)));
    child_slots += k * w[static_cast<std::size_t>(k)];
  }
  const double scale = mean / child_slots;
  double mass = 0.0;
  for (int k = 1; k <= horizon; ++k) {
    w[static_cast<std::size_t>(k)] *= scale;
    mass += w[static_cast<std::size_t>(k)];
  }
  if (!(mass < 1.0))
    fail(Errc::out_of_range, "stretched_exponential_offspring: mean too large for a probability law");
  w[0] = 1.0 - mass;
  double tail = 0.0;
  for (int k = horizon + 1;; ++k) {
    const double term = scale * std::exp(-std::sqrt(static_cast<double>(k)));
    if (term < 1e-19) break;
    tail += term;
  }
  return WeightSequence(std::move(w), std::nullopt, tail);
}

DegreeSequence binary_degrees(int n) {
  if (n < 1 || n % 2 == 0) fail(Errc::precondition, "binary_degrees: n must be odd and positive");
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < (n - 1) / 2; ++i) entries[static_cast<std::size_t>(i)] = 2;
  return DegreeSequence(std::move(entries));
}

DegreeSequence star_heavy_degrees(int n) {
  if (n < 2) fail(Errc::out_of_range, "star_heavy_degrees: n must be at least 2");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n));
  const int hub = n / 2;
  entries.push_back(hub);
  int rest = n - 1 - hub;
  while (rest >= 2) {
    entries.push_back(2);
    rest -= 2;
  }
  if (rest == 1) entries.push_back(1);
  entries.resize(static_cast<std::size_t>(n), 0);
  return DegreeSequence(std::move(entries));
}

DegreeSequence powerlaw_degrees(int n, double exponent) {
  if (n < 2) fail(Errc::out_of_range, "powerlaw_degrees: n must be at least 2");
  const WeightSequence mu = truncated_powerlaw_offspring(n, exponent);
  std::vector<double> cdf(mu.w().size());
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    acc += mu.w()[k];
    cdf[k] = acc;
  }
  cdf.back() = 1.0;

  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    while (cdf[k] < u) ++k;
    entries[static_cast<std::size_t>(i)] = static_cast<int>(k);
  }
  std::sort(entries.begin(), entries.end(), std::greater<int>());

  // The quantile profile undershoots (or overshoots) the child-slot total by
  // a few units; spread the correction one unit at a time across the
  // non-leaf entries, largest first for surplus, smallest first for excess.
  long long sum = 0;
  for (int e : entries) sum += e;
  const long long target = n - 1;
  if (sum < target && entries[0] == 0) {
    entries[0] = 1;
    ++sum;
  }
  while (sum < target) {
    for (std::size_t i = 0; i < entries.size() && sum < target; ++i) {
      if (entries[i] >= 1) {
        ++entries[i];
        ++sum;
      }
    }
  }
  while (sum > target) {
    for (std::size_t i = entries.size(); i-- > 0 && sum > target;) {
      if (entries[i] >= 1) {
        --entries[i];
        --sum;
      }
    }
  }
  std::sort(entries.begin(), entries.end(), std::greater<int>());
  return DegreeSequence(std::move(entries));
}

DegreeSequence path_degrees(int n) {
  if (n < 1) fail(Errc::out_of_range, "path_degrees: n must be positive");
  std::vector<int> entries(static_cast<std::size_t>(n), 1);
  entries.back() = 0;
  return DegreeSequence(std::move(entries));
}

DegreeSequence star_degrees(int n) {
  if (n < 1) fail(Errc::out_of_range, "star_degrees: n must be positive");
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  entries[0] = n - 1;
  return DegreeSequence(std::move(entries));
}

}  // namespace degseq
