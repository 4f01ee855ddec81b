#pragma once

#include <map>
#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

// Child-count sequence (d_1, ..., d_n) for vertices labeled 1..n. Valid iff
// every entry is nonnegative and the entries sum to n-1, so the counts can be
// realized by rooted trees on [n].
class DegreeSequence {
 public:
  // Validates and constructs; throws Error on violation.
  explicit DegreeSequence(std::vector<int> degrees);

  int n() const { return static_cast<int>(degrees_.size()); }
  int d(int label) const;  // degree of 1-based label
  const std::vector<int>& entries() const { return degrees_; }

  int num_nonleaf() const { return m_; }    // #{i : d_i > 0}
  int num_leaves() const { return n0_; }    // #{i : d_i = 0}
  int num_degree_one() const { return n1_; }

  bool operator==(const DegreeSequence& o) const { return degrees_ == o.degrees_; }

 private:
  std::vector<int> degrees_;
  int m_ = 0, n0_ = 0, n1_ = 0;
};

// n_i counts, keyed by the degree values that occur.
std::map<int, int> degree_counts(const DegreeSequence& d);

struct SigmaStats {
  double sigma_d;      // sqrt((1/n) sum d_i (d_i - 1))
  double sigma_prime;  // sqrt(n / (n - n_1)) * sigma_d
  double delta;        // (n - n_1) / n
};

// Throws Errc::precondition when n_1 = n (all entries 1), which no valid
// sequence attains; the guard documents the restriction.
SigmaStats sigma_stats(const DegreeSequence& d);

// Zeros appear only after every nonzero entry.
bool is_compressed(const DegreeSequence& d);

// Every entry is at most 2.
bool is_sub_binary(const DegreeSequence& d);

}  // namespace degseq
