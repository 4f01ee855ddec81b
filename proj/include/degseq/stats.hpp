#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace degseq {

// z for a 99% upper one-sided confidence bound (Phi^{-1}(0.995)).
inline constexpr double kZ99Upper = 2.5758293035489004;

// Wilson score upper bound for a binomial proportion.
double wilson_upper(std::int64_t successes, std::int64_t trials, double z = kZ99Upper);

// Survival function of the chi-square distribution (regularized upper gamma).
double chi_square_pvalue(double statistic, double dof);

// Pearson goodness-of-fit p-value for observed counts against expected
// probabilities (cells with zero expectation must have zero counts).
double chi_square_gof_pvalue(const std::vector<std::int64_t>& observed, const std::vector<double>& expected_probs);

// Total variation distance between two probability vectors over a shared index.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

// One-sided two-sample deviation threshold: with samples m and n, the
// probability that sup_t (F_m(t) - G_n(t)) exceeds its population value by
// more than the returned epsilon is at most alpha.
double one_sided_ks_epsilon(std::int64_t m, std::int64_t n, double alpha);

// Empirical CDF evaluated at every integer key of a count map.
std::map<int, double> counts_to_cdf(const std::map<int, std::int64_t>& counts);

}  // namespace degseq
