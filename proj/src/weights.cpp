#include "degseq/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(sum_k k^p w_k s^k), factored around the largest term so large horizons
// and s > 1 cannot overflow.
double log_power_sum(const std::vector<double>& w, double s, int p) {
  if (s < 0) fail(Errc::precondition, "negative evaluation point");
  const double log_s = std::log(s);  // -inf at s = 0 is fine below
  double peak = -kInf;
  const int K = static_cast<int>(w.size()) - 1;
  for (int k = 0; k <= K; ++k) {
    if (w[k] <= 0 || (p >= 1 && k == 0)) continue;
    const double term =
        std::log(w[k]) + k * log_s + (p >= 1 ? p * std::log(static_cast<double>(k)) : 0.0);
    peak = std::max(peak, term);
  }
  if (peak == -kInf) return -kInf;
  double acc = 0;
  for (int k = 0; k <= K; ++k) {
    if (w[k] <= 0 || (p >= 1 && k == 0)) continue;
    const double term =
        std::log(w[k]) + k * log_s + (p >= 1 ? p * std::log(static_cast<double>(k)) : 0.0);
    acc += std::exp(term - peak);
  }
  return peak + std::log(acc);
}

}  // namespace

WeightSequence::WeightSequence(std::vector<double> w, std::optional<double> declared_radius,
                               std::optional<double> tail_mass)
    : w_(std::move(w)), declared_radius_(declared_radius), tail_mass_(tail_mass) {
  if (w_.empty()) fail(Errc::bad_weights, "weights: empty");
  for (double v : w_) {
    if (!(v >= 0) || !std::isfinite(v)) fail(Errc::bad_weights, "weights: entries must be finite and nonnegative");
  }
  if (!(w_[0] > 0)) fail(Errc::bad_weights, "weights: need positive weight at degree 0");
  if (declared_radius_ && !(*declared_radius_ > 0))
    fail(Errc::radius_zero, "weights: declared radius must be positive");
  if (tail_mass_ && (!(*tail_mass_ >= 0) || !std::isfinite(*tail_mass_)))
    fail(Errc::bad_weights, "weights: tail mass must be finite and nonnegative");
}

bool WeightSequence::is_probability(double tol) const {
  double sum = 0;
  for (double v : w_) sum += v;
  return std::abs(sum - 1.0) <= tol;
}

double WeightSequence::log_phi(double s) const { return log_power_sum(w_, s, 0); }

double WeightSequence::psi(double s) const {
  const double num = log_power_sum(w_, s, 1);
  if (num == -kInf) return 0;
  return std::exp(num - log_phi(s));
}

TiltResult tilt(const WeightSequence& w, double tol) {
  if (!(tol > 0)) fail(Errc::precondition, "tilt: tolerance must be positive");
  // With no mass above degree 1 the tilted mean can never reach 1 and the
  // analytics below lose their meaning.
  bool branching = false;
  for (int k = 2; k <= w.max_degree(); ++k)
    if (w.w()[k] > 0) branching = true;
  if (!branching) fail(Errc::bad_weights, "tilt: need positive weight at some degree >= 2");

  TiltResult result;
  double tau = 0;
  if (w.declared_radius()) {
    const double rho = *w.declared_radius();
    const double nu = w.psi(rho);
    result.nu = nu;
    if (nu <= 1) {
      tau = rho;
    } else {
      // Bisect psi(s) = 1 on [0, rho]; psi(0) = 0 and psi is nondecreasing.
      double lo = 0, hi = rho;
      int steps = 0;
      while (hi - lo > tol) {
        if (++steps > 10000) fail(Errc::no_convergence, "tilt: bisection stalled");
        const double mid = lo + (hi - lo) / 2;
        (w.psi(mid) < 1 ? lo : hi) = mid;
      }
      tau = lo + (hi - lo) / 2;
    }
  } else {
    // Finite support without a declared radius: psi climbs to the top degree,
    // which is at least 2, so psi(s) = 1 always has a solution.
    result.nu = static_cast<double>(w.max_degree());
    double hi = 1;
    int grow = 0;
    while (w.psi(hi) < 1) {
      hi *= 2;
      if (++grow > 1000) fail(Errc::no_convergence, "tilt: no bracket for psi = 1");
    }
    double lo = 0;
    int steps = 0;
    while (hi - lo > tol) {
      if (++steps > 10000) fail(Errc::no_convergence, "tilt: bisection stalled");
      const double mid = lo + (hi - lo) / 2;
      (w.psi(mid) < 1 ? lo : hi) = mid;
    }
    tau = lo + (hi - lo) / 2;
  }
  result.tau = tau;

  const double log_phi_tau = w.log_phi(tau);
  result.mu_hat.resize(w.w().size(), 0.0);
  for (std::size_t k = 0; k < w.w().size(); ++k) {
    if (w.w()[k] <= 0) continue;
    result.mu_hat[k] = std::exp(std::log(w.w()[k]) + static_cast<double>(k) * std::log(tau) - log_phi_tau);
  }
  // tau psi'(tau) collapses to the tilted law's variance: with
  // S_p = sum_k k^p w_k tau^k it equals S_2/S_0 - (S_1/S_0)^2.
  const double m1 = std::exp(log_power_sum(w.w(), tau, 1) - log_phi_tau);
  const double m2 = std::exp(log_power_sum(w.w(), tau, 2) - log_phi_tau);
  result.sigma_hat_sq = m2 - m1 * m1;
  return result;
}

double mean_of(const std::vector<double>& dist) {
  double m = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) m += static_cast<double>(k) * dist[k];
  return m;
}

double variance_of(const std::vector<double>& dist) {
  const double m = mean_of(dist);
  double v = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double dk = static_cast<double>(k) - m;
    v += dk * dk * dist[k];
  }
  return v;
}

}  // namespace degseq
