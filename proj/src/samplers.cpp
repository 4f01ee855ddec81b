#include "degseq/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "degseq/errors.hpp"

namespace degseq {

SequenceCode sample_uniform_code(const DegreeSequence& d, RngStream& rng) {
  if (!is_compressed(d)) fail(Errc::not_compressed, "sample_uniform_code: degree sequence must be compressed");
  std::vector<int> values;
  values.reserve(d.n() - 1);
  for (int i = 1; i <= d.n(); ++i)
    for (int c = 0; c < d.d(i); ++c) values.push_back(i);
  rng.shuffle(values);
  return SequenceCode(std::move(values), d);
}

namespace {

// Shuffle-and-decode on the compressed labels; parent comes out 1-based on
// the compressed labels with parent[root] = 0.
DecodedShape sample_compressed_shape(const CompressResult& comp, RngStream& rng, std::vector<int>& values,
                                     std::vector<int>& parent) {
  const DegreeSequence& dc = comp.compressed;
  values.clear();
  for (int i = 1; i <= dc.n(); ++i)
    for (int c = 0; c < dc.d(i); ++c) values.push_back(i);
  rng.shuffle(values);
  return decode_parents(values, dc, parent);
}

}  // namespace

LabeledRootedTree sample_uniform_tree(const DegreeSequence& d, RngStream& rng) {
  const CompressResult comp = compress(d);
  std::vector<int> values, parent_c;
  const DecodedShape shape = sample_compressed_shape(comp, rng, values, parent_c);
  const int n = d.n();
  std::vector<int> parent(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    const int orig = comp.original_of[v];
    parent[orig] = (v == shape.root) ? 0 : comp.original_of[parent_c[v]];
  }
  return LabeledRootedTree(n, comp.original_of[shape.root], std::move(parent));
}

int sample_uniform_height(const DegreeSequence& d, RngStream& rng) {
  const CompressResult comp = compress(d);
  std::vector<int> values, parent_c;
  return sample_compressed_shape(comp, rng, values, parent_c).height;
}

BienaymeSampler::BienaymeSampler(const WeightSequence& mu, int n, SampleStrategy strategy,
                                 long long max_rejections)
    : n_(n), strategy_(strategy), max_rejections_(max_rejections) {
  if (n < 1) fail(Errc::precondition, "BienaymeSampler: n must be positive");
  if (max_rejections < 1) fail(Errc::precondition, "BienaymeSampler: rejection budget must be positive");
  if (!mu.is_probability(1e-6)) fail(Errc::bad_weights, "BienaymeSampler: offspring weights must sum to 1");

  // Degrees beyond n - 1 cannot occur in a tree of n vertices, and the
  // conditioning discards them, so trim the support up front. Renormalize;
  // the conditional law is unchanged.
  const int top = std::min(mu.max_degree(), n - 1);
  mu_.assign(mu.w().begin(), mu.w().begin() + top + 1);
  double total = std::accumulate(mu_.begin(), mu_.end(), 0.0);
  if (!(total > 0)) fail(Errc::rejection_budget, "BienaymeSampler: no offspring degree is feasible at this size");
  for (double& v : mu_) v /= total;

  if (strategy_ == SampleStrategy::auto_select)
    strategy_ = (n_ >= 64) ? SampleStrategy::split : SampleStrategy::rejection;

  std::vector<int> values(mu_.size());
  std::iota(values.begin(), values.end(), 0);
  offspring_ = DiscreteSampler(std::move(values), mu_);

  if (strategy_ == SampleStrategy::split && n_ > 1) {
    const std::vector<double>& root = table(n_);
    if (!(root[n_ - 1] > 0))
      fail(Errc::rejection_budget, "BienaymeSampler: this size is unreachable under the offspring law");
  }
}

const std::vector<double>& BienaymeSampler::table(int m) {
  auto it = tables_.find(m);
  if (it != tables_.end()) return it->second;
  std::vector<double> g;
  if (m == 1) {
    g = mu_;
  } else {
    const int left = m / 2;
    const std::vector<double>& gl = table(left);
    const std::vector<double>& gr = table(m - left);
    const std::size_t cap =
        std::min(static_cast<std::size_t>(n_ - 1), (gl.size() - 1) + (gr.size() - 1));
    g.assign(cap + 1, 0.0);
    for (std::size_t a = 0; a < gl.size(); ++a) {
      if (gl[a] == 0) continue;
      const std::size_t lim = std::min(gr.size(), g.size() - a);
      for (std::size_t b = 0; b < lim; ++b) g[a + b] += gl[a] * gr[b];
    }
  }
  // Max-normalize: only within-table ratios matter for the conditional
  // draws, and this keeps deep convolutions away from underflow.
  const double peak = *std::max_element(g.begin(), g.end());
  if (peak > 0)
    for (double& v : g) v /= peak;
  return tables_.emplace(m, std::move(g)).first->second;
}

std::vector<int> BienaymeSampler::draw_by_rejection(RngStream& rng) {
  std::vector<int> degrees(n_);
  for (long long attempt = 0; attempt < max_rejections_; ++attempt) {
    ++attempts_;
    int sum = 0;
    bool ok = true;
    for (int i = 0; i < n_; ++i) {
      degrees[i] = offspring_(rng);
      sum += degrees[i];
      if (sum > n_ - 1) {
        ok = false;
        break;
      }
    }
    if (ok && sum == n_ - 1) {
      ++accepts_;
      return degrees;
    }
  }
  fail(Errc::rejection_budget, "BienaymeSampler: rejection budget exhausted");
}

std::vector<int> BienaymeSampler::draw_by_split(RngStream& rng) {
  std::vector<int> degrees(n_);
  // Iterative descent over (block start, block size, block sum).
  std::vector<std::array<int, 3>> stack;
  stack.push_back({0, n_, n_ - 1});
  while (!stack.empty()) {
    const auto [start, m, s] = stack.back();
    stack.pop_back();
    if (m == 1) {
      degrees[start] = s;
      continue;
    }
    const int left = m / 2;
    const std::vector<double>& gl = table(left);
    const std::vector<double>& gr = table(m - left);
    const int lo = std::max(0, s - static_cast<int>(gr.size()) + 1);
    const int hi = std::min<int>(s, static_cast<int>(gl.size()) - 1);
    double total = 0;
    for (int a = lo; a <= hi; ++a) total += gl[a] * gr[s - a];
    if (!(total > 0)) fail(Errc::no_convergence, "BienaymeSampler: conditional split washed out numerically");
    double u = rng.unit() * total;
    int pick = hi;
    for (int a = lo; a <= hi; ++a) {
      u -= gl[a] * gr[s - a];
      if (u <= 0) {
        pick = a;
        break;
      }
    }
    // Push right first so the left block is resolved first; the visit order
    // is part of the determinism contract.
    stack.push_back({start + left, m - left, s - pick});
    stack.push_back({start, left, pick});
  }
  ++attempts_;
  ++accepts_;
  return degrees;
}

std::vector<int> BienaymeSampler::draw_degrees(RngStream& rng) {
  if (n_ == 1) {
    ++attempts_;
    ++accepts_;
    return {0};
  }
  return strategy_ == SampleStrategy::split ? draw_by_split(rng) : draw_by_rejection(rng);
}

LabeledRootedTree BienaymeSampler::draw_tree(RngStream& rng) {
  return sample_uniform_tree(DegreeSequence(draw_degrees(rng)), rng);
}

int BienaymeSampler::draw_height(RngStream& rng) {
  return sample_uniform_height(DegreeSequence(draw_degrees(rng)), rng);
}

LabeledRootedTree sample_conditioned_bienayme(const WeightSequence& mu, int n, RngStream& rng,
                                              long long max_rejections, SampleStrategy strategy) {
  BienaymeSampler sampler(mu, n, strategy, max_rejections);
  return sampler.draw_tree(rng);
}

LabeledRootedTree sample_simply_generated(const WeightSequence& w, int n, RngStream& rng,
                                          long long max_rejections, SampleStrategy strategy) {
  const TiltResult tilted = tilt(w);
  return sample_conditioned_bienayme(WeightSequence(tilted.mu_hat), n, rng, max_rejections, strategy);
}

std::vector<int> size_biased_order(const DegreeSequence& d, RngStream& rng) {
  std::vector<std::pair<double, int>> clocks;
  for (int i = 1; i <= d.n(); ++i)
    if (d.d(i) > 0) clocks.push_back({rng.exponential(d.d(i)), i});
  if (clocks.empty()) fail(Errc::precondition, "size_biased_order: no non-leaf labels");
  std::sort(clocks.begin(), clocks.end());
  std::vector<int> order;
  order.reserve(clocks.size());
  for (const auto& [clock, label] : clocks) order.push_back(label);
  return order;
}

}  // namespace degseq
