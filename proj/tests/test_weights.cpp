#include "degseq/weights.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "degseq/errors.hpp"

using namespace degseq;

namespace {

bool throws_errc(Errc want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

WeightSequence heavy_tail(int horizon) {
  std::vector<double> w(horizon + 1);
  w[0] = 1.0;
  for (int k = 1; k <= horizon; ++k) w[k] = std::pow(static_cast<double>(k), -2.5);
  return WeightSequence(std::move(w));
}

}  // namespace

TEST_CASE("weight sequence validation") {
  CHECK(throws_errc(Errc::bad_weights, [] { WeightSequence({}); }));
  CHECK(throws_errc(Errc::bad_weights, [] { WeightSequence({0.5, 0.2, -0.1}); }));
  CHECK(throws_errc(Errc::bad_weights, [] { WeightSequence({0.0, 0.5, 0.5}); }));
  CHECK(throws_errc(Errc::radius_zero, [] { WeightSequence({0.5, 0, 0.5}, 0.0); }));
  // Support {0, 1} is a valid offspring law for conditioning, but cannot be tilted.
  CHECK_NOTHROW(WeightSequence({0.5, 0.5}));
  CHECK(throws_errc(Errc::bad_weights, [] { tilt(WeightSequence({0.5, 0.5})); }));
  CHECK_NOTHROW(WeightSequence({0.5, 0, 0.5}));
  CHECK(WeightSequence({0.5, 0, 0.5}).is_probability());
  CHECK_FALSE(WeightSequence({1.0, 0, 1.0}).is_probability());
}

TEST_CASE("psi fixtures") {
  const WeightSequence binary({0.5, 0, 0.5});
  // psi(s) = 2 s^2 / (1 + s^2)
  CHECK(binary.psi(0) == 0);
  CHECK(binary.psi(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binary.psi(2) == doctest::Approx(8.0 / 5.0).epsilon(1e-12));
  CHECK(std::exp(binary.log_phi(2)) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("tilt of a critical distribution is the identity") {
  const TiltResult r = tilt(WeightSequence({0.5, 0, 0.5}));
  CHECK(r.tau == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.nu == 2.0);
  CHECK(r.mu_hat[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.mu_hat[1] == 0.0);
  CHECK(r.mu_hat[2] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(mean_of(r.mu_hat) == doctest::Approx(1.0).epsilon(1e-9));
  // Var = E k^2 - 1 = 1; the derivative route must agree.
  CHECK(variance_of(r.mu_hat) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.sigma_hat_sq == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tilt of a supercritical distribution") {
  const TiltResult r = tilt(WeightSequence({0.2, 0, 0.8}));
  CHECK(r.tau == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.mu_hat[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.mu_hat[2] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(mean_of(r.mu_hat) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tilt of the two-parameter near-unary family") {
  const double p = 0.3, q = 0.3;
  const TiltResult r = tilt(WeightSequence({q * (1 - p), (1 - q) * (1 - p), p}));
  CHECK(r.tau == doctest::Approx(std::sqrt(q * (1 - p) / p)).epsilon(1e-9));
  const double expect1 =
      (1 - q) * std::sqrt(1 - p) / ((1 - q) * std::sqrt(1 - p) + 2 * std::sqrt(p) * std::sqrt(q));
  CHECK(r.mu_hat[1] == doctest::Approx(expect1).epsilon(1e-9));
  CHECK(r.mu_hat[0] == doctest::Approx((1 - expect1) / 2).epsilon(1e-9));
  CHECK(r.mu_hat[2] == doctest::Approx((1 - expect1) / 2).epsilon(1e-9));
  CHECK(mean_of(r.mu_hat) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tilt with a declared radius and subcritical limit") {
  // w_k = 2^k / k^3 up to the horizon: at the radius 1/2 the series for psi
  // converges to a value below 1, so tau sticks at the radius.
  std::vector<double> w(61);
  w[0] = 1.0;
  for (int k = 1; k <= 60; ++k) w[k] = std::pow(2.0, k) / std::pow(static_cast<double>(k), 3.0);
  const WeightSequence ws(std::move(w), 0.5);
  const TiltResult r = tilt(ws);
  CHECK(r.tau == 0.5);
  CHECK(r.nu < 1.0);
  CHECK(r.nu == doctest::Approx(0.7395).epsilon(1e-3));
  CHECK(mean_of(r.mu_hat) == doctest::Approx(r.nu).epsilon(1e-9));
}

TEST_CASE("tilt of a truncated heavy tail") {
  const TiltResult r = tilt(heavy_tail(1000));
  CHECK(r.tau < 1.0);
  CHECK(r.tau > 0.5);
  CHECK(mean_of(r.mu_hat) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(variance_of(r.mu_hat) == doctest::Approx(r.sigma_hat_sq).epsilon(1e-6));
}

TEST_CASE("tilted distribution invariants across families") {
  const std::vector<WeightSequence> families = {
      WeightSequence({0.5, 0, 0.5}),
      WeightSequence({0.2, 0, 0.8}),
      WeightSequence({0.21, 0.49, 0.3}),
      WeightSequence({1.0, 0.5, 0.25, 0.125, 0.0625}),
      heavy_tail(1000),
  };
  for (const WeightSequence& w : families) {
    const TiltResult r = tilt(w);
    double sum = 0;
    for (double v : r.mu_hat) {
      CHECK(v >= 0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean_of(r.mu_hat) == doctest::Approx(std::min(1.0, r.nu)).epsilon(1e-9));
    CHECK(mean_of(r.mu_hat) == doctest::Approx(w.psi(r.tau)).epsilon(1e-12));
    CHECK(variance_of(r.mu_hat) == doctest::Approx(r.sigma_hat_sq).epsilon(1e-6));
  }
}
