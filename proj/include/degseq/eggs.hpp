#pragma once

#include <map>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/enumeration.hpp"

namespace degseq {

// Law of max(a_i : i in A) when A is drawn uniformly from the disjoint union
// of the size-k and size-(n-k) subsets of a ground set, and how that law moves
// as the size pair becomes more extreme. Pushing k outward concentrates the
// subsets at the two ends and can only pull the maximum down stochastically;
// eggs_oracle verifies this exactly by full subset enumeration.

enum class EggsVariant {
  full,       // subsets of {1..n}
  drop_last,  // subsets of {1..n-1}; sizes stay k and n-k
};

struct EggsLaw {
  // Value of the maximum -> exact probability. Key 0 stands for the empty
  // subset, whose maximum counts as 0.
  std::map<double, BigRat> pmf;

  BigRat cdf(double x) const;  // P(max <= x)
};

struct EggsResult {
  EggsLaw law_k;             // subset sizes {k, n-k}
  EggsLaw law_l;             // subset sizes {l, n-l}
  CompareResult comparison;  // law_k versus law_l; the k law dominates
};

// a must be ascending and positive; requires n/2 <= k < l <= n.
// Throws Errc::parameter_order on a bad (k, l) pair.
EggsResult eggs_oracle(const std::vector<double>& a, int k, int l, EggsVariant variant);

}  // namespace degseq
