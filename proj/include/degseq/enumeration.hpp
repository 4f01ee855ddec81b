#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/codec.hpp"
#include "degseq/degree_sequence.hpp"

namespace degseq {

// Exact distribution of a nonnegative integer statistic, stored as counts
// over a finite support with an explicit total.
struct HeightDistribution {
  std::map<int, BigInt> counts;
  BigInt total = 0;

  BigRat probability(int h) const;
  BigRat cdf(int h) const;  // P(height <= h)
  double mean() const;
};

// Height law of the uniform tree with degree sequence d, by full enumeration.
// Throws Errc::budget_exceeded when count_trees(d) > budget.
HeightDistribution exact_height_distribution(const DegreeSequence& d, const BigInt& budget = BigInt(10000000));

enum class CompareVerdict { a_dominates, b_dominates, equal, incomparable };

struct CompareResult {
  CompareVerdict verdict;
  bool strict;  // dominance with differing laws
};

// First-order stochastic comparison: a dominates b when P(A <= t) <= P(B <= t)
// for every t. Exact rational arithmetic throughout.
CompareResult stochastic_compare(const HeightDistribution& a, const HeightDistribution& b);

// Plane trees with n vertices, encoded as preorder child-count words.
// The word (w_1, ..., w_n) satisfies sum_{i<=k} (w_i - 1) >= 0 for k < n and
// equals -1 at k = n.
void for_each_plane_tree(int n, const std::function<void(const std::vector<int>&)>& fn);

BigInt count_plane_trees(int n);  // Catalan(n-1)

int plane_tree_height(const std::vector<int>& word);

// Height law of the conditioned offspring-weighted plane tree: each plane
// tree t gets mass prod_v mu_{deg(v)}, normalized over all plane trees with n
// vertices. Exact in the rational weights. Throws Errc::precondition when no
// plane tree of this size carries positive mass.
std::map<int, BigRat> plane_height_law(const std::map<int, BigRat>& mu, int n);

// Law of the uniformly labeled conditioned tree, as exact masses keyed by
// serialized parent arrays. Small n only: enumerates all plane trees and all
// n! labelings.
std::map<std::string, BigRat> conditioned_labeled_law(const std::map<int, BigRat>& mu, int n);

// Exact CDF comparison for rational height laws (used by plane-tree oracles).
CompareResult stochastic_compare_rational(const std::map<int, BigRat>& a, const std::map<int, BigRat>& b);

}  // namespace degseq
