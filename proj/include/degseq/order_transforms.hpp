#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/rng.hpp"
#include "degseq/tree.hpp"

namespace degseq {

// Degree-sequence surgery. A skew move concentrates children onto an already
// busier vertex and a merge move empties one vertex into another; both push
// the uniform tree's height law downward. Chains of these moves end at
// sub-binary sequences (no entry above 2), which sit at the top of the order.

enum class CoverKind {
  skew,   // (d_i, d_j) -> (d_i + 1, d_j - 1), needs d_i >= d_j >= 1
  merge,  // (d_i, d_j) -> (d_i + d_j, 0), needs d_i >= 1 and d_j >= 1
};

struct CoverMove {
  CoverKind kind = CoverKind::skew;
  int i = 0;  // 1-based position whose entry grows
  int j = 0;  // 1-based position whose entry shrinks
  // Optional relabeling: out[relabel[p-1]] = moved[p]. Empty means identity.
  std::vector<int> relabel;
};

// Applies one move. Throws Errc::precondition when the side conditions on
// (i, j) fail and Errc::bad_label when relabel is not a permutation of 1..n.
DegreeSequence apply_cover(const DegreeSequence& d, const CoverMove& move);

// Every unordered pair {d, d'} of length-n entry multisets with d' exactly
// one skew move below d, each pair once, entries sorted descending, in
// lexicographic order of (d, d'). Throws Errc::budget_exceeded when more
// than budget pairs arise.
std::vector<std::pair<DegreeSequence, DegreeSequence>> covering_pairs(int n, std::size_t budget = 100000);

// Removes every vertex with exactly one child by splicing its edge; a chain
// of such vertices above the root is dropped and the first descendant with
// degree != 1 becomes the root. Survivors keep their labels and degrees, so
// the result's degree sequence is the input's with all 1-entries removed.
SubsetTree suppress_degree_ones(const SubsetTree& t);
SubsetTree suppress_degree_ones(const LabeledRootedTree& t);

// parts[i] lists the unary labels inserted along the ancestral edge of the
// i'th vertex of the base tree in ascending label order; within a part the
// labels run upward from the vertex. The root's part grows a chain above it
// whose top becomes the new root.
struct UnaryComposition {
  std::vector<std::vector<int>> parts;
};

// Deterministic inverse of suppression. Throws Errc::precondition when the
// part count differs from the vertex count and Errc::label_collision when an
// inserted label repeats or already names a base vertex.
SubsetTree stretch_with_composition(const SubsetTree& t_minus, const UnaryComposition& comp);

// Uniform element of the suppression fiber over t_minus: a uniformly random
// labeled composition of unary_labels into (vertex count) parts, applied as
// above. The fiber has size (n-1)!/(n-n1-1)! where n counts all vertices of
// the result and n1 = |unary_labels|.
SubsetTree stretch_with_degree_ones(const SubsetTree& t_minus, const std::vector<int>& unary_labels,
                                    RngStream& rng);

// Reduction chain from d to a sub-binary sequence, stochastically raising
// the height at every hop: first entries of four or more shed two children
// onto a leaf, then threes are retired in pairs against a leaf, and a last
// lone three either absorbs a degree-one vertex or, when none exists (n
// even), donates a child to an appended position n+1. Choices take the
// lowest eligible index. The chain starts at d and ends at the result.
std::vector<DegreeSequence> sub_binary_chain(const DegreeSequence& d);

// Final sequence of sub_binary_chain: sub-binary, with degree-one count at
// most d's, of length n except when d has no 1-entry and even length, where
// one appended vertex fixes the parity and the length is n + 1.
DegreeSequence to_sub_binary(const DegreeSequence& d);

// The sub-binary sequence with the same number of leaves and of degree-one
// vertices as d: n0 - 1 twos, then n1 ones, then n0 zeros, of length
// 2 n0 + n1 - 1. Among all sequences with this leaf profile its uniform
// tree has the stochastically largest height.
DegreeSequence companion_same_leaf_profile(const DegreeSequence& d);

}  // namespace degseq
