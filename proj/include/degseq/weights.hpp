#pragma once

#include <optional>
#include <vector>

namespace degseq {

// Nonnegative offspring weights (w_0, ..., w_K) over degrees 0..K, with
// w_0 > 0. Families with no mass at degrees >= 2 are representable here;
// operations that need branching (tilting) reject them. Infinite-support
// families enter as a truncation: the horizon K is the vector length minus
// one, and the caller may record the truncated tail mass and the
// untruncated family's radius of convergence. All analytics are computed on
// the truncation.
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<double> w,
                          std::optional<double> declared_radius = std::nullopt,
                          std::optional<double> tail_mass = std::nullopt);

  const std::vector<double>& w() const { return w_; }
  int max_degree() const { return static_cast<int>(w_.size()) - 1; }
  std::optional<double> declared_radius() const { return declared_radius_; }
  std::optional<double> tail_mass() const { return tail_mass_; }

  bool is_probability(double tol = 1e-9) const;

  // Phi(s) = sum_k w_k s^k, evaluated in log space.
  double log_phi(double s) const;
  // Psi(s) = sum_k k w_k s^k / sum_k w_k s^k, nondecreasing in s.
  double psi(double s) const;

 private:
  std::vector<double> w_;
  std::optional<double> declared_radius_;
  std::optional<double> tail_mass_;
};

struct TiltResult {
  double tau = 0;
  double nu = 0;            // +infinity when the weights grow without bound
  double sigma_hat_sq = 0;  // tau * Psi'(tau), by central finite difference
  std::vector<double> mu_hat;
};

// Exponential tilting to an equivalent offspring probability distribution
// mu_hat_k = w_k tau^k / Phi(tau) with mean min(1, nu). tau is the declared
// radius when psi stays at or below 1 there, and otherwise solves
// psi(tau) = 1 by bisection to within tol.
TiltResult tilt(const WeightSequence& w, double tol = 1e-12);

double mean_of(const std::vector<double>& dist);
double variance_of(const std::vector<double>& dist);

}  // namespace degseq
