#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/weights.hpp"

namespace degseq {

// Monte-Carlo experiment drivers that measure height statistics and compare
// them against the closed-form ceilings the library is built around. Every
// driver derives one rng substream per sample index, so results depend only
// on (seed, sample count), not on how a runner partitions the loop.

// Survival curve of ht / sqrt(n) over a fixed grid from one batch of iid
// samples. The whole grid is evaluated on the same sample set, which makes
// the survival estimates non-increasing in x by construction.
struct EmpiricalTail {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> grid;       // ascending multiples of sqrt(n)
  std::vector<long long> exceed;  // samples with ht > grid[i] * sqrt(n)
  std::vector<double> survival;   // exceed[i] / samples
  std::vector<double> upper;      // Wilson 99% upper confidence bounds
};

// x in {0.5, 1.0, ..., 8.0}.
std::vector<double> default_grid();

// Heights of uniform trees with the given degrees. An empty grid requests
// the default grid; otherwise grid entries must be positive.
EmpiricalTail tail_experiment(const DegreeSequence& d, long long samples, std::vector<double> grid,
                              std::uint64_t seed);
// Heights of size-n trees with iid offspring mu conditioned on the total.
EmpiricalTail tail_experiment_offspring(const WeightSequence& mu, int n, long long samples,
                                        std::vector<double> grid, std::uint64_t seed);
// Heights of size-n trees weighted by w, realized through the equivalent
// tilted offspring law.
EmpiricalTail tail_experiment_weights(const WeightSequence& w, int n, long long samples,
                                      std::vector<double> grid, std::uint64_t seed);

// One grid point of a bound check. theorem_x restates the grid value in the
// bound's own scale; points outside the bound's stated range are marked
// inapplicable and never fail.
struct BoundPoint {
  double x = 0;
  double theorem_x = 0;
  double upper_ci = 0;
  double bound = 0;
  bool applicable = true;
  bool holds = true;
};

struct BoundVerdict {
  std::vector<BoundPoint> points;
  bool pass = true;  // every point holds
};

// A point holds when its bound is at least 1 (vacuous) or the measured
// upper confidence bound stays below it.

// Ceiling 5 exp(-delta x^2 / 8192) per grid x; delta = (n - n1) / n of the
// measured degree sequence, in (0, 1].
BoundVerdict check_gaussian_bound(const EmpiricalTail& tail, double delta);

// Ceiling 4 exp(-x log(sigma_prime + 1) / 16384) in the rescaled units
// x = g sigma_d / log(sigma_prime + 1); grid points whose x falls below
// 16384 are inapplicable.
BoundVerdict check_logsigma_bound(const EmpiricalTail& tail, double sigma_d, double sigma_prime);

// One monte-carlo event frequency against one closed-form ceiling.
struct EventBound {
  long long samples = 0;
  long long exceed = 0;
  double estimate = 0;
  double upper_ci = 0;
  double bound = 0;
  bool holds = false;
};

// The same event measured exactly by enumerating every code of d.
struct ExactEvent {
  long long favorable = 0;
  long long total = 0;
  double probability = 0;
};

// P(dist(vertex arriving at step rho(y), prefix tree at step rho(x)) > b)
// against (1 - x/(n-1))^b. Requires compressed d, 0 <= x <= y <= n0 - 1,
// b >= 1.
EventBound geometric_attachment_experiment(const DegreeSequence& d, int x, int y, int b,
                                           long long samples, std::uint64_t seed);
ExactEvent attachment_probability_exact(const DegreeSequence& d, int x, int y, int b);

// P(ht of the prefix at rho(alpha sigma sqrt(n)) > b sqrt(n) / (2 sigma))
// against exp(-(3/32) b sqrt(n) / sigma) + exp(-alpha b / 2), where
// alpha = (1 - e^{-2}) / 24 and sigma^2 is the average of d_i(d_i - 1).
EventBound first_segment_experiment(const DegreeSequence& d, double b, long long samples,
                                    std::uint64_t seed);

// Ceiling for prefix height increments over a window of the leaf scale:
// (y - x) / ((1 - p) b) * (1 - x/(n-1))^{floor(pb)}.
double height_increment_bound(int n, int x, int y, int b, double p);

// P(ht(prefix at rho(y)) - ht(prefix at rho(x)) > b + 1) against the
// ceiling above. Requires d without degree-one entries and x < y; the exact
// variant allows x = y.
EventBound height_increment_experiment(const DegreeSequence& d, int x, int y, int b, double p,
                                       long long samples, std::uint64_t seed);
ExactEvent height_increment_exact(const DegreeSequence& d, int x, int y, int b);

// E S for S = sum_i x_i 1{E_i <= t} with independent E_i ~ Exp(x_i):
// sum_i x_i (1 - e^{-x_i t}).
double exp_sum_mean(const std::vector<double>& xs, double t);

// P(S < E S / 2) against exp(-t E S / 4).
EventBound exp_sum_experiment(const std::vector<double>& xs, double t, long long samples,
                              std::uint64_t seed);

// One row of a scaling table: mean of ht^r / n^{r/2} with standard error.
struct ScalingRow {
  int n = 0;
  double ratio = 0;
  double std_error = 0;
};

struct MomentTable {
  double r = 1;
  bool degenerate_support = false;  // no offspring mass at degrees >= 2
  std::vector<ScalingRow> rows;
};

// E[ht^r] / n^{r/2} for conditioned trees of mu at each listed n. Offspring
// with all mass on degrees {0, 1} force the path and the ratio grows; the
// table is still produced, flagged by degenerate_support.
MomentTable moment_scaling(const WeightSequence& mu, double r, const std::vector<int>& n_list,
                           long long samples, std::uint64_t seed);

// E[ht] / sqrt(n) rows for a size-indexed offspring family (conditioned
// trees of family(n)) or degree family (uniform trees of family(n)).
std::vector<ScalingRow> vanishing_height_experiment(const std::function<WeightSequence(int)>& family,
                                                    const std::vector<int>& n_list, long long samples,
                                                    std::uint64_t seed);
std::vector<ScalingRow> vanishing_height_experiment(const std::function<DegreeSequence(int)>& family,
                                                    const std::vector<int>& n_list, long long samples,
                                                    std::uint64_t seed);

}  // namespace degseq
