#include "degseq/degree_sequence.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) fail(Errc::empty_sequence, "DegreeSequence: empty");
  long long sum = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const int di = degrees_[i];
    if (di < 0)
      fail(Errc::negative_entry,
           "DegreeSequence: negative entry at index " + std::to_string(i + 1));
    sum += di;
    if (di > 0) ++m_;
    if (di == 0) ++n0_;
    if (di == 1) ++n1_;
  }
  const long long n = static_cast<long long>(degrees_.size());
  if (sum != n - 1)
    fail(Errc::sum_mismatch, "DegreeSequence: entries sum to " + std::to_string(sum) +
                                 ", expected " + std::to_string(n - 1));
}

int DegreeSequence::d(int label) const {
  if (label < 1 || label > n()) fail(Errc::bad_label, "DegreeSequence::d: label out of range");
  return degrees_[static_cast<std::size_t>(label - 1)];
}

std::map<int, int> degree_counts(const DegreeSequence& d) {
  std::map<int, int> counts;
  for (int v : d.entries()) ++counts[v];
  return counts;
}

SigmaStats sigma_stats(const DegreeSequence& d) {
  const int n = d.n();
  const int n1 = d.num_degree_one();
  if (n1 == n) fail(Errc::precondition, "sigma_stats: all entries equal 1");
  double acc = 0;
  for (int di : d.entries()) acc += static_cast<double>(di) * (di - 1);
  SigmaStats s{};
  s.sigma_d = std::sqrt(acc / n);
  s.sigma_prime = std::sqrt(static_cast<double>(n) / (n - n1)) * s.sigma_d;
  s.delta = static_cast<double>(n - n1) / n;
  return s;
}

bool is_compressed(const DegreeSequence& d) {
  bool seen_zero = false;
  for (int v : d.entries()) {
    if (v == 0)
      seen_zero = true;
    else if (seen_zero)
      return false;
  }
  return true;
}

bool is_sub_binary(const DegreeSequence& d) {
  for (int v : d.entries())
    if (v > 2) return false;
  return true;
}

}  // namespace degseq
