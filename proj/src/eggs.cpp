#include "degseq/eggs.hpp"

#include <cmath>
#include <set>
#include <string>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

// Walk every size-s subset of a[0..m-1] and tally its maximum. The empty
// subset counts a maximum of 0; an infeasible size contributes nothing.
void add_subset_maxima(const std::vector<double>& a, int m, int s, std::map<double, BigInt>& counts) {
  if (s < 0 || s > m) return;
  if (s == 0) {
    counts[0.0] += 1;
    return;
  }
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    counts[a[idx.back()]] += 1;  // ascending input: the last index carries the max
    int i = s - 1;
    while (i >= 0 && idx[i] == m - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Uniform over the disjoint union of the two subset families; when the sizes
// coincide the family is simply counted twice, which normalizes away.
EggsLaw law_for(const std::vector<double>& a, int m, int size_one, int size_two) {
  std::map<double, BigInt> counts;
  add_subset_maxima(a, m, size_one, counts);
  add_subset_maxima(a, m, size_two, counts);
  BigInt total = 0;
  for (const auto& [value, count] : counts) total += count;
  EggsLaw law;
  for (const auto& [value, count] : counts) law.pmf[value] = BigRat(count, total);
  return law;
}

// Rank the union of both supports so the integer-keyed exact comparison can
// run unchanged; a shared monotone relabeling preserves the verdict.
CompareResult compare_laws(const EggsLaw& a, const EggsLaw& b) {
  std::set<double> support;
  for (const auto& [value, mass] : a.pmf) support.insert(value);
  for (const auto& [value, mass] : b.pmf) support.insert(value);
  std::map<double, int> rank;
  int next = 0;
  for (double value : support) rank[value] = next++;
  std::map<int, BigRat> ra, rb;
  for (const auto& [value, mass] : a.pmf) ra[rank.at(value)] += mass;
  for (const auto& [value, mass] : b.pmf) rb[rank.at(value)] += mass;
  return stochastic_compare_rational(ra, rb);
}

}  // namespace

BigRat EggsLaw::cdf(double x) const {
  BigRat below = 0;
  for (const auto& [value, mass] : pmf) {
    if (value > x) break;
    below += mass;
  }
  return below;
}

EggsResult eggs_oracle(const std::vector<double>& a, int k, int l, EggsVariant variant) {
  const int n = static_cast<int>(a.size());
  if (n < 1) fail(Errc::precondition, "maximum law needs at least one value");
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(a[i]) || a[i] <= 0) fail(Errc::precondition, "values must be positive and finite");
    if (i > 0 && a[i] < a[i - 1]) fail(Errc::precondition, "values must be ascending");
  }
  if (2 * k < n || k >= l || l > n)
    fail(Errc::parameter_order, "need n/2 <= k < l <= n, got k = " + std::to_string(k) + ", l = " + std::to_string(l));
  const int m = variant == EggsVariant::full ? n : n - 1;
  EggsResult out;
  out.law_k = law_for(a, m, k, n - k);
  out.law_l = law_for(a, m, l, n - l);
  out.comparison = compare_laws(out.law_k, out.law_l);
  return out;
}

}  // namespace degseq
