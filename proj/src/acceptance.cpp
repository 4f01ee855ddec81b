#include "degseq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/bounds.hpp"
#include "degseq/codec.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/equiv.hpp"
#include "degseq/eggs.hpp"
#include "degseq/errors.hpp"
#include "degseq/families.hpp"
#include "degseq/order_transforms.hpp"
#include "degseq/rng.hpp"
#include "degseq/samplers.hpp"
#include "degseq/stats.hpp"
#include "degseq/tree.hpp"
#include "degseq/weights.hpp"

namespace degseq {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

void partitions_into(int total, int max_part, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (total == 0) {
    fn(cur);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(total - part, part, cur, fn);
    cur.pop_back();
  }
}

// Every compressed degree sequence with n vertices: one per partition of n-1
// into at most n parts, zeros padded to length n.
std::vector<DegreeSequence> all_compressed(int n) {
  std::vector<DegreeSequence> out;
  std::vector<int> cur;
  partitions_into(n - 1, n - 1, cur, [&](const std::vector<int>& parts) {
    if (static_cast<int>(parts.size()) > n) return;
    std::vector<int> entries = parts;
    entries.resize(n, 0);
    out.push_back(DegreeSequence(entries));
  });
  if (n == 1) out.push_back(DegreeSequence(std::vector<int>{0}));
  return out;
}

// Every valid degree sequence of length n: compositions of n-1 into n
// nonnegative parts.
std::vector<DegreeSequence> all_degree_sequences(int n) {
  std::vector<DegreeSequence> out;
  std::vector<int> cur(n, 0);
  const std::function<void(int, int)> fill = [&](int idx, int left) {
    if (idx == n - 1) {
      cur[idx] = left;
      out.push_back(DegreeSequence(cur));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      fill(idx + 1, left - v);
    }
  };
  fill(0, n - 1);
  return out;
}

HeightDistribution to_law(const ClassStats& stats) {
  HeightDistribution law;
  law.counts = stats.height_counts;
  law.total = stats.size;
  return law;
}

std::map<std::string, BigRat> table_from_census(const DegreeSequence& d) {
  const BigInt total = count_trees(d);
  std::map<std::string, BigRat> out;
  for (const auto& [key, stats] : class_census(d)) out[key] = BigRat(stats.size, total);
  return out;
}

DegreeSequence drop_ones(const DegreeSequence& d) {
  std::vector<int> kept;
  for (int v : d.entries())
    if (v != 1) kept.push_back(v);
  return DegreeSequence(kept);
}

long long falling_fiber(int n, int n_prime) {
  long long f = 1;
  for (int v = n_prime; v <= n - 1; ++v) f *= v;
  return f;
}

void for_each_labeled_composition(std::vector<int> labels, int k,
                                  const std::function<void(const UnaryComposition&)>& fn) {
  const int m = static_cast<int>(labels.size());
  std::sort(labels.begin(), labels.end());
  std::vector<int> sizes(k, 0);
  const std::function<void(int, int)> fill = [&](int idx, int left) {
    if (idx == k - 1) {
      sizes[idx] = left;
      do {
        UnaryComposition comp;
        comp.parts.resize(k);
        int at = 0;
        for (int i = 0; i < k; ++i)
          for (int c = 0; c < sizes[i]; ++c) comp.parts[i].push_back(labels[at++]);
        fn(comp);
      } while (std::next_permutation(labels.begin(), labels.end()));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      sizes[idx] = v;
      fill(idx + 1, left - v);
    }
  };
  fill(0, m);
}

bool dominates_or_equal(const CompareResult& r) {
  return r.verdict == CompareVerdict::a_dominates || r.verdict == CompareVerdict::equal;
}

// ---- criteria ----

CriterionResult c1_bijection(bool quick) {
  CriterionResult r;
  const int top = quick ? 6 : 8;
  long long sequences = 0, trees = 0;
  bool ok = true;
  for (int n = 1; n <= top; ++n) {
    for (const DegreeSequence& d : all_compressed(n)) {
      std::set<LabeledRootedTree> seen;
      for_each_code(d, [&](const std::vector<int>& values) {
        const SequenceCode code(values, d);
        const LabeledRootedTree t = tree_from_sequence(code);
        if (!seen.insert(t).second) ok = false;
        if (sequence_from_tree(t).values != values) ok = false;
        ++trees;
      });
      if (BigInt(static_cast<long long>(seen.size())) != count_trees(d)) ok = false;
      ++sequences;
    }
  }
  r.pass = ok;
  r.detail = fmt("%lld sequences, %lld codes round-tripped, n <= %d", sequences, trees, top);
  return r;
}

CriterionResult c2_count_fixture(bool) {
  CriterionResult r;
  const BigInt count = count_trees(DegreeSequence(std::vector<int>{1, 3, 2, 0, 0, 0, 0}));
  r.pass = count == 60;
  r.detail = "count(1,3,2,0,0,0,0) = " + count.str();
  return r;
}

CriterionResult c3_uniformity(bool quick) {
  CriterionResult r;
  const DegreeSequence d(std::vector<int>{2, 2, 0, 0, 0});
  std::map<std::vector<int>, int> index;
  for_each_code(d, [&](const std::vector<int>& values) {
    const int next = static_cast<int>(index.size());
    index[values] = next;
  });
  const long long samples = quick ? 2000 : 6000;
  std::vector<std::int64_t> observed(index.size(), 0);
  RngStream rng(9103);
  for (long long i = 0; i < samples; ++i)
    ++observed[index.at(sample_uniform_code(d, rng).values)];
  const double pvalue =
      chi_square_gof_pvalue(observed, std::vector<double>(index.size(), 1.0 / index.size()));
  r.pass = pvalue >= 1e-3;
  r.detail = fmt("%zu outcomes, %lld draws, gof p = %.4f (reject below 1e-3)", index.size(),
                 samples, pvalue);
  return r;
}

CriterionResult c4_gaussian(bool quick) {
  CriterionResult r;
  const long long samples = quick ? 2000 : 10000;
  r.pass = true;
  std::string parts;
  int which = 0;
  for (const DegreeSequence& d : {binary_degrees(401), star_heavy_degrees(401)}) {
    const EmpiricalTail tail = tail_experiment(d, samples, default_grid(), which == 0 ? 9104 : 9204);
    const BoundVerdict v = check_gaussian_bound(tail, sigma_stats(d).delta);
    double worst = 1e300;
    for (const BoundPoint& pt : v.points) worst = std::min(worst, pt.bound - pt.upper_ci);
    r.pass = r.pass && v.pass;
    parts += fmt("%s min(bound-upper) = %.3f; ", which == 0 ? "balanced" : "star-heavy", worst);
    ++which;
  }
  r.detail = parts + fmt("n = 401, %lld draws each", samples);
  return r;
}

CriterionResult c5_heavy_tail(bool quick) {
  CriterionResult r;
  const long long samples = quick ? 2000 : 10000;
  const DegreeSequence d = powerlaw_degrees(2000);
  const SigmaStats st = sigma_stats(d);
  const EmpiricalTail tail = tail_experiment(d, samples, default_grid(), 9105);
  const BoundVerdict v = check_logsigma_bound(tail, st.sigma_d, st.sigma_prime);
  int applicable = 0;
  for (const BoundPoint& pt : v.points) applicable += pt.applicable ? 1 : 0;
  r.pass = v.pass;
  r.detail = fmt("n = 2000, %lld draws, %d of %zu grid points reach the ceiling's range", samples,
                 applicable, v.points.size());
  return r;
}

CriterionResult c6_attachment(bool quick) {
  CriterionResult r;
  const int top = quick ? 6 : 7;
  long long combos = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    for (const DegreeSequence& d : all_compressed(n)) {
      const int n0 = d.num_leaves();
      if (n0 >= n) continue;
      for (int x = 0; x <= n0 - 1; ++x)
        for (int y = x; y <= n0 - 1; ++y)
          for (int b = 1; b <= 6; ++b) {
            const ExactEvent e = attachment_probability_exact(d, x, y, b);
            const double bound = std::pow(1.0 - static_cast<double>(x) / (n - 1), b);
            if (e.probability > bound + 1e-12) ok = false;
            ++combos;
          }
    }
  }
  r.pass = ok;
  r.detail = fmt("%lld (sequence, x, y, b) combinations exact-checked, n <= %d", combos, top);
  return r;
}

CriterionResult c7_skew_dominance(bool quick) {
  CriterionResult r;
  const int top = quick ? 6 : 7;
  std::map<std::vector<int>, HeightDistribution> law_cache;
  const auto law_of = [&](const DegreeSequence& d) -> const HeightDistribution& {
    auto it = law_cache.find(d.entries());
    if (it == law_cache.end())
      it = law_cache.emplace(d.entries(), exact_height_distribution(d)).first;
    return it->second;
  };
  long long pairs = 0, strict = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    for (const auto& [pre, post] : covering_pairs(n)) {
      const CompareResult cmp = stochastic_compare(law_of(pre), law_of(post));
      if (!dominates_or_equal(cmp)) ok = false;
      if (pre.num_nonleaf() >= 3) {
        if (!(cmp.verdict == CompareVerdict::a_dominates && cmp.strict)) ok = false;
        ++strict;
      }
      ++pairs;
    }
  }
  r.pass = ok;
  r.detail = fmt("%lld covering pairs, %lld required strict, n <= %d", pairs, strict, top);
  return r;
}

CriterionResult c8_merge_dominance(bool quick) {
  CriterionResult r;
  const int top = quick ? 6 : 7;
  std::map<std::vector<int>, HeightDistribution> law_cache;
  const auto law_of = [&](const DegreeSequence& d) -> const HeightDistribution& {
    auto it = law_cache.find(d.entries());
    if (it == law_cache.end())
      it = law_cache.emplace(d.entries(), exact_height_distribution(d)).first;
    return it->second;
  };
  long long pairs = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const DegreeSequence& d : all_compressed(n)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (d.d(i) < 1 || d.d(j) < 1) continue;
          CoverMove move;
          move.kind = CoverKind::merge;
          move.i = i;
          move.j = j;
          const DegreeSequence merged = apply_cover(d, move);
          std::vector<int> post = merged.entries();
          std::sort(post.begin(), post.end(), std::greater<int>());
          if (!seen.insert({d.entries(), post}).second) continue;
          const CompareResult cmp = stochastic_compare(law_of(d), law_of(DegreeSequence(post)));
          if (!dominates_or_equal(cmp)) ok = false;
          ++pairs;
        }
      }
    }
  }
  r.pass = ok;
  r.detail = fmt("%lld merge pairs exact-checked, n <= %d", pairs, top);
  return r;
}

CriterionResult c9_class_masses(bool quick) {
  CriterionResult r;
  const int top = quick ? 5 : 7;
  long long tables = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    for (const DegreeSequence& d : all_degree_sequences(n)) {
      if (d.d(2) < 1) continue;
      if (class_probability_table(d) != table_from_census(skew_companion(d))) ok = false;
      ++tables;
    }
  }

  // The two displayed configurations: three free pieces in parallel branches
  // collapse to one class of sixteen, two free pieces nested to one of eight.
  {
    const LabeledRootedTree parallel(7, 3, {0, 3, 7, 0, 2, 2, 2, 3});
    const std::string key = equiv_class_key(parallel);
    BigInt across = 0;
    for (const std::vector<int>& entries :
         {std::vector<int>{3, 0, 2, 0, 0, 0, 1}, std::vector<int>{2, 1, 2, 0, 0, 0, 1},
          std::vector<int>{1, 2, 2, 0, 0, 0, 1}, std::vector<int>{0, 3, 2, 0, 0, 0, 1}}) {
      const auto census = class_census(DegreeSequence(entries));
      if (census.count(key) != 1) {
        ok = false;
        continue;
      }
      across += census.at(key).size;
    }
    if (across != 16) ok = false;
  }
  {
    const LabeledRootedTree nested(5, 1, {0, 0, 3, 1, 2, 2});
    const std::string key = equiv_class_key(nested);
    BigInt across = 0;
    for (const std::vector<int>& entries :
         {std::vector<int>{3, 0, 1, 0, 0}, std::vector<int>{2, 1, 1, 0, 0},
          std::vector<int>{1, 2, 1, 0, 0}, std::vector<int>{0, 3, 1, 0, 0}}) {
      const auto census = class_census(DegreeSequence(entries));
      if (census.count(key) != 1) {
        ok = false;
        continue;
      }
      across += census.at(key).size;
    }
    if (across != 8) ok = false;
  }

  r.pass = ok;
  r.detail = fmt("%lld tables matched, n <= %d; fixture classes of 16 and 8 reproduced", tables, top);
  return r;
}

CriterionResult c10_class_dominance(bool quick) {
  CriterionResult r;
  const int top = quick ? 5 : 7;
  long long classes = 0, tables = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    for (const DegreeSequence& d : all_degree_sequences(n)) {
      if (d.d(1) < d.d(2) || d.d(2) < 1) continue;
      const auto census = class_census(d);
      const auto census_skewed = class_census(skew_companion(d));
      if (census.size() != census_skewed.size()) {
        ok = false;
        continue;
      }
      for (const auto& [key, stats] : census) {
        const auto it = census_skewed.find(key);
        if (it == census_skewed.end()) {
          ok = false;
          continue;
        }
        if (!dominates_or_equal(stochastic_compare(to_law(stats), to_law(it->second)))) ok = false;
        ++classes;
      }
      ++tables;
    }
  }

  // Closed form for the extra level of the deep-branch configuration: with
  // vertex 2 one step under vertex 1 and a single branch of height h under 2,
  // the class reaches h + 2 with probability 2 d1 d2 / ((d1+d2-1)(d1+d2)).
  struct Fixture {
    int d1, d2, branch_height;
    LabeledRootedTree t;
  };
  const std::vector<Fixture> fixtures = {
      {2, 1, 1, LabeledRootedTree(5, 1, {0, 0, 1, 2, 1, 3})},
      {2, 2, 1, LabeledRootedTree(6, 1, {0, 0, 1, 2, 1, 2, 3})},
      {3, 1, 2, LabeledRootedTree(7, 1, {0, 0, 1, 2, 1, 1, 3, 6})},
  };
  for (const Fixture& f : fixtures) {
    const int m = f.d1 + f.d2;
    const auto census = class_census(f.t.degree_sequence());
    const auto it = census.find(equiv_class_key(f.t));
    if (it == census.end()) {
      ok = false;
      continue;
    }
    const ClassStats& stats = it->second;
    if (stats.size != big_binomial(m, f.d1)) ok = false;
    BigInt tall_count = 0;
    const int tall = f.branch_height + 2;
    if (stats.height_counts.count(tall)) tall_count = stats.height_counts.at(tall);
    if (BigRat(tall_count, stats.size) != BigRat(2 * f.d1 * f.d2, (m - 1) * m)) ok = false;
  }

  r.pass = ok;
  r.detail =
      fmt("%lld classes across %lld sequence pairs, n <= %d; promotion formula on 3 fixtures",
          classes, tables, top);
  return r;
}

CriterionResult c11_subset_maxima(bool quick) {
  CriterionResult r;
  const int top = quick ? 8 : 10;
  const int reps = quick ? 10 : 50;
  RngStream rng(9111);
  long long cases = 0;
  bool ok = true;
  for (int n = 2; n <= top; ++n) {
    for (int rep = 0; rep < reps; ++rep) {
      std::vector<double> a(n);
      for (double& x : a) x = 0.25 + 4 * rng.unit();
      if (rep % 3 == 0 && n >= 3) a[1] = a[0];  // exercise ties
      std::sort(a.begin(), a.end());
      for (int k = (n + 1) / 2; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          for (EggsVariant variant : {EggsVariant::full, EggsVariant::drop_last}) {
            if (!dominates_or_equal(eggs_oracle(a, k, l, variant).comparison)) ok = false;
            ++cases;
          }
        }
      }
    }
  }
  r.pass = ok;
  r.detail = fmt("%lld (vector, k, l, variant) comparisons, n <= %d, %d vectors per size", cases,
                 top, reps);
  return r;
}

CriterionResult c12_fibers(bool quick) {
  CriterionResult r;
  const int fiber_top = quick ? 6 : 7;
  const int push_top = quick ? 5 : 6;
  bool ok = true;
  long long fibers = 0;

  for (const DegreeSequence& d_minus :
       {DegreeSequence(std::vector<int>{0}), DegreeSequence(std::vector<int>{2, 0, 0}),
        DegreeSequence(std::vector<int>{3, 0, 0, 0}),
        DegreeSequence(std::vector<int>{2, 2, 0, 0, 0}),
        DegreeSequence(std::vector<int>{4, 0, 0, 0, 0}),
        DegreeSequence(std::vector<int>{5, 0, 0, 0, 0, 0}),
        DegreeSequence(std::vector<int>{3, 2, 0, 0, 0, 0})}) {
    const int n_prime = d_minus.n();
    for (int n1 = 1; n_prime + n1 <= fiber_top; ++n1) {
      const int n = n_prime + n1;
      std::vector<int> labels;
      for (int s = n_prime + 1; s <= n; ++s) labels.push_back(s);
      for_each_tree(d_minus, [&](int root, const std::vector<int>& parent) {
        SubsetTree base;
        base.root = root;
        for (int v = 1; v <= n_prime; ++v) base.parent[v] = parent[v];
        std::set<SubsetTree> fiber;
        for_each_labeled_composition(labels, n_prime, [&](const UnaryComposition& comp) {
          const SubsetTree s = stretch_with_composition(base, comp);
          if (!fiber.insert(s).second) ok = false;
          if (!(suppress_degree_ones(s) == base)) ok = false;
        });
        if (static_cast<long long>(fiber.size()) != falling_fiber(n, n_prime)) ok = false;
        ++fibers;
      });
    }
  }

  // Count identity over every profile with unary entries.
  for (int n = 2; n <= fiber_top; ++n) {
    for (const DegreeSequence& d : all_compressed(n)) {
      if (d.num_degree_one() == 0) continue;
      const int n_prime = n - d.num_degree_one();
      if (count_trees(d) != count_trees(drop_ones(d)) * BigInt(falling_fiber(n, n_prime)))
        ok = false;
    }
  }

  // Suppression sends the uniform law to the uniform law: every image is hit
  // by exactly one fiber's worth of trees.
  long long images = 0;
  for (int n = 2; n <= push_top; ++n) {
    for (const DegreeSequence& d : all_compressed(n)) {
      if (d.num_degree_one() == 0) continue;
      const DegreeSequence d_minus = drop_ones(d);
      std::map<SubsetTree, long long> hits;
      for_each_tree(d, [&](int root, const std::vector<int>& parent) {
        SubsetTree t;
        t.root = root;
        for (int v = 1; v <= n; ++v) t.parent[v] = parent[v];
        ++hits[suppress_degree_ones(t)];
      });
      if (BigInt(static_cast<long long>(hits.size())) != count_trees(d_minus)) ok = false;
      const long long fiber = falling_fiber(n, d_minus.n());
      for (const auto& [image, count] : hits) {
        (void)image;
        if (count != fiber) ok = false;
        ++images;
      }
    }
  }

  r.pass = ok;
  r.detail = fmt("%lld fibers exact (n <= %d), %lld pushforward images exact (n <= %d)", fibers,
                 fiber_top, images, push_top);
  return r;
}

CriterionResult c13_sampler_law(bool quick) {
  CriterionResult r;
  const int n = 5;
  // The noise floor of tv over 60 atoms crosses 0.02 near 2.5e4 draws, so
  // quick mode cannot shrink further than this.
  const long long samples = quick ? 50000 : 100000;
  const std::map<int, BigRat> binary = {{0, BigRat(1, 2)}, {2, BigRat(1, 2)}};
  const auto oracle = conditioned_labeled_law(binary, n);

  BienaymeSampler sampler(binary_offspring(), n);
  RngStream rng(9113);
  std::map<std::string, long long> counts;
  for (long long i = 0; i < samples; ++i) ++counts[format_tree(sampler.draw_tree(rng))];

  double tv = 0;
  for (const auto& [key, mass] : oracle) {
    const double p = static_cast<double>(mass);
    const double q =
        counts.count(key) ? static_cast<double>(counts.at(key)) / samples : 0.0;
    tv += std::abs(p - q);
  }
  bool stray = false;
  for (const auto& [key, c] : counts) {
    if (oracle.count(key)) continue;
    tv += static_cast<double>(c) / samples;
    stray = true;
  }
  tv /= 2;
  r.pass = tv < 0.02 && !stray;
  r.detail = fmt("tv = %.5f over %zu trees, %lld draws (limit 0.02)", tv, oracle.size(), samples);
  return r;
}

CriterionResult c14_degree_share(bool quick) {
  CriterionResult r;
  const int n = 2000;
  const int trees = quick ? 50 : 200;
  const WeightSequence mu = two_parameter_offspring(0.3, 0.3);
  BienaymeSampler sampler(mu, n);
  RngStream rng(9114);
  long long ones = 0;
  for (int t = 0; t < trees; ++t) {
    for (int deg : sampler.draw_degrees(rng))
      if (deg == 1) ++ones;
  }
  const double share = static_cast<double>(ones) / (static_cast<double>(trees) * n);
  const double target = two_parameter_unary_share(0.3, 0.3);
  r.pass = std::abs(share - target) < 0.02;
  r.detail = fmt("unary share %.5f vs tilted value %.5f over %d trees (tolerance 0.02)", share,
                 target, trees);
  return r;
}

CriterionResult c15_tilt_solver(bool) {
  CriterionResult r;
  std::vector<double> subcritical(61);
  subcritical[0] = 1.0;
  for (int k = 1; k <= 60; ++k)
    subcritical[k] = std::pow(2.0, k) / std::pow(static_cast<double>(k), 3.0);
  std::vector<double> heavy(1001);
  heavy[0] = 1.0;
  for (int k = 1; k <= 1000; ++k) heavy[k] = std::pow(static_cast<double>(k), -2.5);

  const std::vector<std::pair<const char*, WeightSequence>> families = {
      {"critical", WeightSequence({0.5, 0, 0.5})},
      {"supercritical", WeightSequence({0.2, 0, 0.8})},
      {"subcritical", WeightSequence(std::move(subcritical), 0.5)},
      {"finite", WeightSequence({1.0, 0.5, 0.25, 0.125, 0.0625})},
      {"heavy-tail", WeightSequence(std::move(heavy))},
  };
  bool ok = true;
  double worst_mean = 0, worst_var = 0;
  for (const auto& [name, w] : families) {
    (void)name;
    const TiltResult t = tilt(w);
    const double mean_err = std::abs(mean_of(t.mu_hat) - std::min(1.0, t.nu));
    const double var_err = std::abs(variance_of(t.mu_hat) - t.sigma_hat_sq);
    worst_mean = std::max(worst_mean, mean_err);
    worst_var = std::max(worst_var, var_err);
    if (mean_err >= 1e-9 || var_err >= 1e-6) ok = false;
  }
  r.pass = ok;
  r.detail = fmt("5 families: worst |mean err| = %.2e (limit 1e-9), worst |var err| = %.2e "
                 "(limit 1e-6)",
                 worst_mean, worst_var);
  return r;
}

CriterionResult c16_binary_cap(bool quick) {
  CriterionResult r;
  const std::map<int, BigRat> cap = {{0, BigRat(1, 2)}, {2, BigRat(1, 2)}};
  const std::map<int, BigRat> ternary = {{0, BigRat(2, 3)}, {3, BigRat(1, 3)}};
  const std::map<int, BigRat> quaternary = {{0, BigRat(3, 4)}, {4, BigRat(1, 4)}};
  bool ok = true;

  const auto capped = [&](const std::map<int, BigRat>& mu, int n) {
    const int n_plus = (n % 2 == 1) ? n : n + 1;
    return dominates_or_equal(
        stochastic_compare_rational(plane_height_law(cap, n_plus), plane_height_law(mu, n)));
  };
  ok = ok && capped(ternary, 4);
  ok = ok && capped(quaternary, 5);
  if (!quick) ok = ok && capped(ternary, 7);

  // Sampled comparison beyond enumeration range: the capped heights must not
  // fall below the conditioned ones anywhere, up to the two-sample allowance.
  const int n = 19;
  const long long samples = quick ? 20000 : 100000;
  BienaymeSampler tern_sampler(ternary_offspring(), n);
  BienaymeSampler cap_sampler(binary_offspring(), n);
  RngStream rng(9116);
  std::map<int, std::int64_t> tern_counts, cap_counts;
  for (long long i = 0; i < samples; ++i) {
    ++tern_counts[tern_sampler.draw_height(rng)];
    ++cap_counts[cap_sampler.draw_height(rng)];
  }
  double tern_cdf = 0, cap_cdf = 0, violation = 0;
  for (int h = 0; h <= n; ++h) {
    if (tern_counts.count(h)) tern_cdf += static_cast<double>(tern_counts[h]) / samples;
    if (cap_counts.count(h)) cap_cdf += static_cast<double>(cap_counts[h]) / samples;
    violation = std::max(violation, cap_cdf - tern_cdf);
  }
  const double eps = one_sided_ks_epsilon(samples, samples, 1e-3);
  if (violation > eps) ok = false;

  r.pass = ok;
  r.detail = fmt("exact sizes pass; sampled n = 19: max cdf excess %.5f vs allowance %.5f "
                 "(%lld draws)",
                 violation, eps, samples);
  return r;
}

CriterionResult c17_vanishing(bool quick) {
  CriterionResult r;
  const long long samples = quick ? 100 : 400;
  const std::vector<int> sizes = {200, 800, 3200};
  const std::vector<int> control_sizes = {201, 801, 3201};
  bool ok = true;
  std::string parts;

  const std::function<WeightSequence(int)> powerlaw_family = [](int n) {
    return truncated_powerlaw_offspring(n);
  };
  const std::function<WeightSequence(int)> stretched_family = [](int n) {
    return stretched_exponential_offspring(n);
  };
  const std::function<WeightSequence(int)> binary_family = [](int) { return binary_offspring(); };

  const auto strictly_decreasing = [&](const std::vector<ScalingRow>& rows) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].ratio < rows[i - 1].ratio)) return false;
    return true;
  };
  const auto describe = [](const std::vector<ScalingRow>& rows) {
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i)
      s += fmt("%.3f%s", rows[i].ratio, i + 1 < rows.size() ? ", " : ")");
    return s;
  };

  const auto pl = vanishing_height_experiment(powerlaw_family, sizes, samples, 9117);
  ok = ok && strictly_decreasing(pl);
  parts += "truncated " + describe(pl);

  const auto st = vanishing_height_experiment(stretched_family, sizes, samples, 9118);
  ok = ok && strictly_decreasing(st);
  parts += ", stretched " + describe(st);

  const auto ctrl = vanishing_height_experiment(binary_family, control_sizes, samples, 9119);
  double lo = ctrl[0].ratio, hi = ctrl[0].ratio;
  for (const ScalingRow& row : ctrl) {
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
  }
  ok = ok && hi / lo <= 1.2;
  parts += ", control " + describe(ctrl) + fmt(" spread %.3f (limit 1.2)", hi / lo);

  r.pass = ok;
  r.detail = parts;
  return r;
}

CriterionResult c18_moment_band(bool quick) {
  CriterionResult r;
  const long long samples = quick ? 2000 : 10000;
  const std::vector<int> sizes = {51, 101, 201, 401};
  bool ok = true;
  std::string parts;
  for (double moment : {1.0, 2.0}) {
    const MomentTable table =
        moment_scaling(binary_offspring(), moment, sizes, samples, moment < 1.5 ? 9120 : 9121);
    double lo = table.rows[0].ratio, hi = table.rows[0].ratio;
    for (const ScalingRow& row : table.rows) {
      lo = std::min(lo, row.ratio);
      hi = std::max(hi, row.ratio);
    }
    const double spread = hi / lo;
    if (spread > 1.2) ok = false;
    parts += fmt("r=%.0f spread %.3f; ", moment, spread);
  }
  r.pass = ok;
  r.detail = parts + fmt("sizes 51..401, %lld draws each (band 1.2)", samples);
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "bijection-roundtrip", c1_bijection},
      {2, "count-fixture", c2_count_fixture},
      {3, "sampler-uniformity", c3_uniformity},
      {4, "gaussian-ceilings", c4_gaussian},
      {5, "heavy-tail-ceilings", c5_heavy_tail},
      {6, "attachment-decay", c6_attachment},
      {7, "skew-dominance", c7_skew_dominance},
      {8, "merge-dominance", c8_merge_dominance},
      {9, "class-mass-invariance", c9_class_masses},
      {10, "class-height-dominance", c10_class_dominance},
      {11, "subset-maximum-monotone", c11_subset_maxima},
      {12, "unary-fiber-pushforward", c12_fibers},
      {13, "conditioned-sampler-law", c13_sampler_law},
      {14, "near-unary-degree-share", c14_degree_share},
      {15, "tilt-solver-moments", c15_tilt_solver},
      {16, "binary-cap-dominance", c16_binary_cap},
      {17, "vanishing-height-trend", c17_vanishing},
      {18, "moment-scaling-band", c18_moment_band},
  };
  return criteria;
}

CriterionResult run_criterion(int id, bool quick) {
  for (const Criterion& c : acceptance_criteria()) {
    if (c.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result = c.run(quick);
    result.id = c.id;
    result.name = c.name;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw Error(Errc::out_of_range, "acceptance: no criterion with id " + std::to_string(id));
}

int run_acceptance(const std::vector<int>& only, bool quick, std::ostream& out) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (const Criterion& c : acceptance_criteria()) ids.push_back(c.id);
  int failures = 0;
  for (int id : ids) {
    const CriterionResult result = run_criterion(id, quick);
    if (!result.pass) ++failures;
    char line[640];
    std::snprintf(line, sizeof line, "[%2d] %s  %-24s %7.2fs  %s", result.id,
                  result.pass ? "PASS" : "FAIL", result.name.c_str(), result.seconds,
                  result.detail.c_str());
    out << line << "\n";
  }
  return failures;
}

}  // namespace degseq
