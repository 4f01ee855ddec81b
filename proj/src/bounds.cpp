#include "degseq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "degseq/codec.hpp"
#include "degseq/errors.hpp"
#include "degseq/rng.hpp"
#include "degseq/samplers.hpp"
#include "degseq/stats.hpp"

namespace degseq {

namespace {

// Shared preamble for the rho-window experiments. Returns n0.
int require_window(const DegreeSequence& d, int x, int y, int b, const char* who) {
  if (!is_compressed(d)) fail(Errc::not_compressed, std::string(who) + ": degree entries must keep zeros last");
  if (d.n() < 2) fail(Errc::out_of_range, std::string(who) + ": need at least one internal vertex");
  const int n0 = d.num_leaves();
  if (x < 0 || y > n0 - 1) fail(Errc::out_of_range, std::string(who) + ": x and y must lie in [0, n0 - 1]");
  if (x > y) fail(Errc::parameter_order, std::string(who) + ": x must not exceed y");
  if (b < 1) fail(Errc::out_of_range, std::string(who) + ": b must be at least 1");
  return n0;
}

void require_samples(long long samples, const char* who) {
  if (samples < 1) fail(Errc::out_of_range, std::string(who) + ": need at least one sample");
}

// Edges from the vertex arriving at step rho(y) up to the prefix grown
// through step rho(x).
int attachment_distance(const ConstructionTrace& trace, int x, int y) {
  const int ky = trace_k_of(trace, static_cast<double>(y));
  const int step_x = rho(trace, static_cast<double>(x));
  int cur = trace.nonleaf_order[static_cast<std::size_t>(ky - 1)];
  int dist = 0;
  while (trace.pi[static_cast<std::size_t>(cur)] > step_x) {
    cur = trace.parent[static_cast<std::size_t>(cur)];
    ++dist;
  }
  return dist;
}

int prefix_height_at(const ConstructionTrace& trace, double x) {
  return trace.prefix_heights[static_cast<std::size_t>(rho(trace, x))];
}

EventBound finish_event(long long samples, long long exceed, double bound) {
  EventBound out;
  out.samples = samples;
  out.exceed = exceed;
  out.estimate = static_cast<double>(exceed) / static_cast<double>(samples);
  out.upper_ci = wilson_upper(exceed, samples);
  out.bound = bound;
  out.holds = bound >= 1.0 || out.upper_ci <= bound;
  return out;
}

ExactEvent finish_exact(long long favorable, long long total) {
  ExactEvent out;
  out.favorable = favorable;
  out.total = total;
  out.probability = total > 0 ? static_cast<double>(favorable) / static_cast<double>(total) : 0.0;
  return out;
}

EmpiricalTail run_tail(int n, long long samples, std::vector<double> grid, std::uint64_t seed,
                       const std::function<int(RngStream&)>& draw_height) {
  require_samples(samples, "tail_experiment");
  if (grid.empty()) grid = default_grid();
  for (double g : grid)
    if (!(g > 0) || !std::isfinite(g)) fail(Errc::out_of_range, "tail_experiment: grid values must be positive");
  std::sort(grid.begin(), grid.end());

  EmpiricalTail tail;
  tail.n = n;
  tail.samples = samples;
  tail.seed = seed;
  tail.grid = std::move(grid);
  tail.exceed.assign(tail.grid.size(), 0);

  const double root = std::sqrt(static_cast<double>(n));
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(seed, static_cast<std::uint64_t>(s));
    const double h = static_cast<double>(draw_height(sub));
    for (std::size_t i = 0; i < tail.grid.size(); ++i) {
      if (h <= tail.grid[i] * root) break;  // grid ascends, so later points fail too
      ++tail.exceed[i];
    }
  }
  tail.survival.resize(tail.grid.size());
  tail.upper.resize(tail.grid.size());
  for (std::size_t i = 0; i < tail.grid.size(); ++i) {
    tail.survival[i] = static_cast<double>(tail.exceed[i]) / static_cast<double>(samples);
    tail.upper[i] = wilson_upper(tail.exceed[i], samples);
  }
  return tail;
}

std::uint64_t row_seed(std::uint64_t seed, int n) {
  return splitmix64(seed ^ (0xa24baed4963ee407ULL * static_cast<std::uint64_t>(n)));
}

ScalingRow scaling_row(int n, double r, long long samples, std::uint64_t master,
                       const std::function<int(RngStream&)>& draw_height) {
  const double scale = std::pow(static_cast<double>(n), r / 2.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(master, static_cast<std::uint64_t>(s));
    const double v = std::pow(static_cast<double>(draw_height(sub)), r) / scale;
    sum += v;
    sum_sq += v * v;
  }
  ScalingRow row;
  row.n = n;
  row.ratio = sum / static_cast<double>(samples);
  const double var = std::max(0.0, (sum_sq - sum * row.ratio) / static_cast<double>(samples - 1));
  row.std_error = std::sqrt(var / static_cast<double>(samples));
  return row;
}

}  // namespace

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 16; ++i) grid.push_back(0.5 * i);
  return grid;
}

EmpiricalTail tail_experiment(const DegreeSequence& d, long long samples, std::vector<double> grid,
                              std::uint64_t seed) {
  return run_tail(d.n(), samples, std::move(grid), seed,
                  [&d](RngStream& rng) { return sample_uniform_height(d, rng); });
}

EmpiricalTail tail_experiment_offspring(const WeightSequence& mu, int n, long long samples,
                                        std::vector<double> grid, std::uint64_t seed) {
  BienaymeSampler sampler(mu, n);
  return run_tail(n, samples, std::move(grid), seed,
                  [&sampler](RngStream& rng) { return sampler.draw_height(rng); });
}

EmpiricalTail tail_experiment_weights(const WeightSequence& w, int n, long long samples,
                                      std::vector<double> grid, std::uint64_t seed) {
  const TiltResult tilted = tilt(w);
  BienaymeSampler sampler(WeightSequence(tilted.mu_hat), n);
  return run_tail(n, samples, std::move(grid), seed,
                  [&sampler](RngStream& rng) { return sampler.draw_height(rng); });
}

BoundVerdict check_gaussian_bound(const EmpiricalTail& tail, double delta) {
  if (!(delta > 0) || delta > 1.0) fail(Errc::out_of_range, "check_gaussian_bound: delta must lie in (0, 1]");
  BoundVerdict verdict;
  for (std::size_t i = 0; i < tail.grid.size(); ++i) {
    BoundPoint pt;
    pt.x = tail.grid[i];
    pt.theorem_x = pt.x;
    pt.upper_ci = tail.upper[i];
    pt.bound = 5.0 * std::exp(-delta * pt.x * pt.x / 8192.0);
    pt.applicable = true;
    pt.holds = pt.bound >= 1.0 || pt.upper_ci <= pt.bound;
    verdict.pass = verdict.pass && pt.holds;
    verdict.points.push_back(pt);
  }
  return verdict;
}

BoundVerdict check_logsigma_bound(const EmpiricalTail& tail, double sigma_d, double sigma_prime) {
  if (!(sigma_d > 0)) fail(Errc::sigma_zero, "check_logsigma_bound: sigma_d must be positive");
  if (!(sigma_prime > 0)) fail(Errc::out_of_range, "check_logsigma_bound: sigma_prime must be positive");
  const double log_scale = std::log(sigma_prime + 1.0);
  BoundVerdict verdict;
  for (std::size_t i = 0; i < tail.grid.size(); ++i) {
    BoundPoint pt;
    pt.x = tail.grid[i];
    pt.theorem_x = pt.x * sigma_d / log_scale;
    pt.upper_ci = tail.upper[i];
    pt.bound = 4.0 * std::exp(-pt.x * sigma_d / 16384.0);
    pt.applicable = pt.theorem_x >= 16384.0;
    pt.holds = !pt.applicable || pt.bound >= 1.0 || pt.upper_ci <= pt.bound;
    verdict.pass = verdict.pass && pt.holds;
    verdict.points.push_back(pt);
  }
  return verdict;
}

EventBound geometric_attachment_experiment(const DegreeSequence& d, int x, int y, int b,
                                           long long samples, std::uint64_t seed) {
  require_window(d, x, y, b, "geometric_attachment_experiment");
  require_samples(samples, "geometric_attachment_experiment");
  const double bound = std::pow(1.0 - static_cast<double>(x) / (d.n() - 1), b);
  long long exceed = 0;
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(seed, static_cast<std::uint64_t>(s));
    const ConstructionTrace trace = build_trace(sample_uniform_code(d, sub));
    if (attachment_distance(trace, x, y) > b) ++exceed;
  }
  return finish_event(samples, exceed, bound);
}

ExactEvent attachment_probability_exact(const DegreeSequence& d, int x, int y, int b) {
  require_window(d, x, y, b, "attachment_probability_exact");
  long long favorable = 0;
  long long total = 0;
  for_each_code(d, [&](const std::vector<int>& values) {
    const ConstructionTrace trace = build_trace(SequenceCode(values, d));
    ++total;
    if (attachment_distance(trace, x, y) > b) ++favorable;
  });
  return finish_exact(favorable, total);
}

EventBound first_segment_experiment(const DegreeSequence& d, double b, long long samples,
                                    std::uint64_t seed) {
  if (!is_compressed(d))
    fail(Errc::not_compressed, "first_segment_experiment: degree entries must keep zeros last");
  if (!(b >= 1.0)) fail(Errc::out_of_range, "first_segment_experiment: b must be at least 1");
  require_samples(samples, "first_segment_experiment");
  const SigmaStats stats = sigma_stats(d);
  if (!(stats.sigma_d > 0)) fail(Errc::sigma_zero, "first_segment_experiment: sigma_d must be positive");

  const double alpha = (1.0 - std::exp(-2.0)) / 24.0;
  const double root = std::sqrt(static_cast<double>(d.n()));
  const double window = alpha * stats.sigma_d * root;
  const double threshold = b * root / (2.0 * stats.sigma_d);
  const double bound = std::exp(-(3.0 / 32.0) * b * root / stats.sigma_d) + std::exp(-alpha * b / 2.0);

  long long exceed = 0;
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(seed, static_cast<std::uint64_t>(s));
    const ConstructionTrace trace = build_trace(sample_uniform_code(d, sub));
    if (prefix_height_at(trace, window) > threshold) ++exceed;
  }
  return finish_event(samples, exceed, bound);
}

double height_increment_bound(int n, int x, int y, int b, double p) {
  if (!(p > 0) || !(p < 1)) fail(Errc::out_of_range, "height_increment_bound: p must lie in (0, 1)");
  if (b < 1) fail(Errc::out_of_range, "height_increment_bound: b must be at least 1");
  if (n < 2) fail(Errc::out_of_range, "height_increment_bound: n must be at least 2");
  if (x < 0 || x > y) fail(Errc::parameter_order, "height_increment_bound: need 0 <= x <= y");
  const double decay = std::pow(1.0 - static_cast<double>(x) / (n - 1), std::floor(p * b));
  return static_cast<double>(y - x) / ((1.0 - p) * b) * decay;
}

EventBound height_increment_experiment(const DegreeSequence& d, int x, int y, int b, double p,
                                       long long samples, std::uint64_t seed) {
  require_window(d, x, y, b, "height_increment_experiment");
  if (d.num_degree_one() > 0)
    fail(Errc::precondition, "height_increment_experiment: degree-one entries are not allowed");
  if (x == y)
    fail(Errc::parameter_order, "height_increment_experiment: the sampled check needs x < y");
  require_samples(samples, "height_increment_experiment");
  const double bound = height_increment_bound(d.n(), x, y, b, p);
  long long exceed = 0;
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(seed, static_cast<std::uint64_t>(s));
    const ConstructionTrace trace = build_trace(sample_uniform_code(d, sub));
    const int gap = prefix_height_at(trace, y) - prefix_height_at(trace, x);
    if (gap > b + 1) ++exceed;
  }
  return finish_event(samples, exceed, bound);
}

ExactEvent height_increment_exact(const DegreeSequence& d, int x, int y, int b) {
  require_window(d, x, y, b, "height_increment_exact");
  if (d.num_degree_one() > 0)
    fail(Errc::precondition, "height_increment_exact: degree-one entries are not allowed");
  long long favorable = 0;
  long long total = 0;
  for_each_code(d, [&](const std::vector<int>& values) {
    const ConstructionTrace trace = build_trace(SequenceCode(values, d));
    ++total;
    if (prefix_height_at(trace, y) - prefix_height_at(trace, x) > b + 1) ++favorable;
  });
  return finish_exact(favorable, total);
}

double exp_sum_mean(const std::vector<double>& xs, double t) {
  if (xs.empty()) fail(Errc::out_of_range, "exp_sum_mean: need at least one rate");
  if (!(t > 0) || !std::isfinite(t)) fail(Errc::out_of_range, "exp_sum_mean: t must be positive");
  double mean = 0.0;
  for (double x : xs) {
    if (!(x > 0) || !std::isfinite(x)) fail(Errc::out_of_range, "exp_sum_mean: rates must be positive");
    mean += x * (1.0 - std::exp(-x * t));
  }
  return mean;
}

EventBound exp_sum_experiment(const std::vector<double>& xs, double t, long long samples,
                              std::uint64_t seed) {
  const double mean = exp_sum_mean(xs, t);
  require_samples(samples, "exp_sum_experiment");
  const double bound = std::exp(-t * mean / 4.0);
  long long exceed = 0;
  for (long long s = 0; s < samples; ++s) {
    RngStream sub = substream(seed, static_cast<std::uint64_t>(s));
    double total = 0.0;
    for (double x : xs)
      if (sub.exponential(x) <= t) total += x;
    if (total < mean / 2.0) ++exceed;
  }
  return finish_event(samples, exceed, bound);
}

MomentTable moment_scaling(const WeightSequence& mu, double r, const std::vector<int>& n_list,
                           long long samples, std::uint64_t seed) {
  if (!(r > 0)) fail(Errc::out_of_range, "moment_scaling: r must be positive");
  if (n_list.empty()) fail(Errc::out_of_range, "moment_scaling: need at least one tree size");
  if (samples < 2) fail(Errc::out_of_range, "moment_scaling: need at least two samples");
  MomentTable table;
  table.r = r;
  table.degenerate_support = true;
  for (int k = 2; k <= mu.max_degree(); ++k)
    if (mu.w()[static_cast<std::size_t>(k)] > 0) table.degenerate_support = false;
  for (int n : n_list) {
    BienaymeSampler sampler(mu, n);
    table.rows.push_back(scaling_row(n, r, samples, row_seed(seed, n),
                                     [&sampler](RngStream& rng) { return sampler.draw_height(rng); }));
  }
  return table;
}

std::vector<ScalingRow> vanishing_height_experiment(const std::function<WeightSequence(int)>& family,
                                                    const std::vector<int>& n_list, long long samples,
                                                    std::uint64_t seed) {
  if (n_list.empty()) fail(Errc::out_of_range, "vanishing_height_experiment: need at least one tree size");
  if (samples < 2) fail(Errc::out_of_range, "vanishing_height_experiment: need at least two samples");
  std::vector<ScalingRow> rows;
  for (int n : n_list) {
    BienaymeSampler sampler(family(n), n);
    rows.push_back(scaling_row(n, 1.0, samples, row_seed(seed, n),
                               [&sampler](RngStream& rng) { return sampler.draw_height(rng); }));
  }
  return rows;
}

std::vector<ScalingRow> vanishing_height_experiment(const std::function<DegreeSequence(int)>& family,
                                                    const std::vector<int>& n_list, long long samples,
                                                    std::uint64_t seed) {
  if (n_list.empty()) fail(Errc::out_of_range, "vanishing_height_experiment: need at least one tree size");
  if (samples < 2) fail(Errc::out_of_range, "vanishing_height_experiment: need at least two samples");
  std::vector<ScalingRow> rows;
  for (int n : n_list) {
    const DegreeSequence d = family(n);
    if (d.n() != n)
      fail(Errc::precondition, "vanishing_height_experiment: family(n) must have length n");
    rows.push_back(scaling_row(n, 1.0, samples, row_seed(seed, n),
                               [&d](RngStream& rng) { return sample_uniform_height(d, rng); }));
  }
  return rows;
}

}  // namespace degseq
