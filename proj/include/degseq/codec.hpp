#pragma once

#include <functional>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/tree.hpp"

namespace degseq {

// Zeros-last rewrite of a degree sequence: nonzero entries keep their relative
// order and become labels 1..m, zero entries become m+1..n in order of
// appearance. relabel[original] = new label (1-based; relabel[0] unused).
struct CompressResult {
  DegreeSequence compressed;
  std::vector<int> relabel;
  std::vector<int> original_of;  // inverse: original_of[new] = original label
};

CompressResult compress(const DegreeSequence& d);

// Code (v_1, ..., v_{n-1}) over a compressed degree sequence: label i occurs
// exactly d_i times. The set of all such codes is in bijection with the trees
// realizing the sequence.
struct SequenceCode {
  std::vector<int> values;
  DegreeSequence degrees;

  SequenceCode(std::vector<int> values, DegreeSequence degrees);
};

// Number of trees realizing d: (n-1)! / prod d_i!.
BigInt count_trees(const DegreeSequence& d);

// Decode a code into its tree. O(n).
LabeledRootedTree tree_from_sequence(const SequenceCode& code);

// Lean decode for enumeration sweeps: fills a 1-based parent array (resized to
// n+1) and returns {root, height}. `values` must already be consistent with
// the compressed sequence `d`; no validation is performed.
struct DecodedShape {
  int root;
  int height;
};
DecodedShape decode_parents(const std::vector<int>& values, const DegreeSequence& d, std::vector<int>& parent);

// Encode a tree whose degree sequence is compressed. Inverse of decoding.
SequenceCode sequence_from_tree(const LabeledRootedTree& t);

// Step-by-step record of the decoded tree's growth: w(k) is the k-th vertex
// added, pi its inverse, nonleaf_order lists internal vertices by first
// appearance, and prefix_sums[k] = sum of (d_{i(j)} - 1) over j <= k.
struct ConstructionTrace {
  int n = 0, m = 0, n0 = 0;
  int root = 0;
  std::vector<int> w;                 // size n+1, 1-based by step
  std::vector<int> pi;                // size n+1, pi[vertex] = step
  std::vector<int> nonleaf_order;     // i(1..m), 0-based storage
  std::vector<int> repeat_locations;  // j(1..n0-1), ascending
  std::vector<long long> prefix_sums; // size m+1, [0] = 0
  std::vector<int> parent;            // size n+1
  std::vector<int> depth_at_step;     // size n+1, depth of w(k)
  std::vector<int> prefix_heights;    // size n+1, max depth among steps <= k
};

ConstructionTrace build_trace(const SequenceCode& code);

// Minimal k with prefix_sums[k] >= ceil(x); requires 0 <= x <= n0 - 1.
int trace_k_of(const ConstructionTrace& trace, double x);

// rho(x) = pi(i(k(x))): the step at which the prefix of internal vertices
// covering x units of extra child capacity is complete.
int rho(const ConstructionTrace& trace, double x);

// Partial tree on the first k added vertices {w(1), ..., w(k)}.
SubsetTree grow_prefix(const ConstructionTrace& trace, int k);

// Lexicographic rank of a code among all codes of its degree sequence.
BigInt code_rank(const SequenceCode& code);
SequenceCode code_unrank(const DegreeSequence& d, const BigInt& rank);

// Visit every code of a compressed degree sequence in lexicographic order.
void for_each_code(const DegreeSequence& d, const std::function<void(const std::vector<int>&)>& fn);

// Visit every tree realizing d (general labeling): trees are decoded on the
// compressed labels and mapped back through the relabeling, so the callback
// sees parent arrays in the original labels. fn(root, parent).
void for_each_tree(const DegreeSequence& d, const std::function<void(int, const std::vector<int>&)>& fn);

}  // namespace degseq
