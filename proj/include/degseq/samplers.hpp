#pragma once

#include <map>
#include <vector>

#include "degseq/codec.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/rng.hpp"
#include "degseq/tree.hpp"
#include "degseq/weights.hpp"

namespace degseq {

// Uniform element of S_d (compressed d): a uniform shuffle of the multiset
// holding d_i copies of each label i.
SequenceCode sample_uniform_code(const DegreeSequence& d, RngStream& rng);

// Uniform element of T_d for arbitrary valid d: sampled on the compressed
// labels and mapped back.
LabeledRootedTree sample_uniform_tree(const DegreeSequence& d, RngStream& rng);

// Height of a uniform element of T_d without building the tree object.
int sample_uniform_height(const DegreeSequence& d, RngStream& rng);

enum class SampleStrategy {
  auto_select,  // split for large n, rejection otherwise
  rejection,    // iid offspring draws until the total hits n - 1
  split,        // exact conditional via divide-and-conquer convolutions
};

// Draws (X_1, ..., X_n) iid from mu conditioned on sum = n - 1, the degree
// tuple of the random-labeled conditioned tree. The two strategies realize
// the same law; split stays usable when the conditioning event is too rare
// for rejection. Instances precompute per-(mu, n) state and are reusable.
class BienaymeSampler {
 public:
  BienaymeSampler(const WeightSequence& mu, int n, SampleStrategy strategy = SampleStrategy::auto_select,
                  long long max_rejections = 1000000);

  std::vector<int> draw_degrees(RngStream& rng);  // entries 1-based by vertex: result[i-1] = degree of i
  LabeledRootedTree draw_tree(RngStream& rng);
  int draw_height(RngStream& rng);

  SampleStrategy effective_strategy() const { return strategy_; }
  long long attempts() const { return attempts_; }
  long long accepts() const { return accepts_; }

 private:
  std::vector<int> draw_by_rejection(RngStream& rng);
  std::vector<int> draw_by_split(RngStream& rng);
  const std::vector<double>& table(int m);

  int n_;
  SampleStrategy strategy_;
  long long max_rejections_;
  std::vector<double> mu_;  // trimmed to degrees < n, renormalized
  DiscreteSampler offspring_;
  std::map<int, std::vector<double>> tables_;  // split strategy: per-block-size sum laws, max-normalized
  long long attempts_ = 0;
  long long accepts_ = 0;
};

LabeledRootedTree sample_conditioned_bienayme(const WeightSequence& mu, int n, RngStream& rng,
                                              long long max_rejections = 1000000,
                                              SampleStrategy strategy = SampleStrategy::auto_select);

// Tilts w to its equivalent offspring probability and samples the
// conditioned tree, realizing the size-n simply generated tree.
LabeledRootedTree sample_simply_generated(const WeightSequence& w, int n, RngStream& rng,
                                          long long max_rejections = 1000000,
                                          SampleStrategy strategy = SampleStrategy::auto_select);

// Non-leaf labels ordered by independent exponential clocks with rate d_i:
// equivalently, sequential sampling without replacement with probabilities
// proportional to degrees.
std::vector<int> size_biased_order(const DegreeSequence& d, RngStream& rng);

}  // namespace degseq
