#pragma once

#include <map>
#include <string>

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/tree.hpp"

namespace degseq {

// Machinery for the relation that forgets how the child slots of vertices 1
// and 2 are filled. Cutting every edge from vertex 1 or 2 down to a child
// leaves a labeled forest; two trees are related when they share their root
// and that forest, possibly after exchanging the labels 1 and 2. Classes of
// the relation carry equal mass under the uniform laws of two degree
// sequences that differ by moving one child slot from vertex 2 to vertex 1,
// which reduces height comparisons to per-class comparisons.

// The same shape with the labels of vertices 1 and 2 exchanged. Requires n >= 2.
LabeledRootedTree swap_first_two(const LabeledRootedTree& t);

// Canonical class key: "root;c_1,...,c_n" where c_v is v's parent after the
// cut (0 for the root and for children of 1 and 2), taken from whichever of
// the tree and its label swap encodes smaller. Equal keys exactly for
// related trees.
std::string equiv_class_key(const LabeledRootedTree& t);

// The relation from first principles: piece-by-piece comparison of the two
// cut forests, with and without the label swap. Quadratic when used to
// cluster, so everything beyond tests goes through equiv_class_key.
bool related_by_forest(const LabeledRootedTree& a, const LabeledRootedTree& b);

// Whether one of vertices 1 and 2 is an ancestor of the other. Constant over
// a class; the class-size formulas split on it.
bool first_two_nested(const LabeledRootedTree& t);

// (d_1+1, d_2-1, d_3, ...): moves one child slot from vertex 2 to vertex 1.
// Requires d_2 >= 1.
DegreeSequence skew_companion(const DegreeSequence& d);

// Exact per-class census of the trees realizing d.
struct ClassStats {
  BigInt size = 0;                      // trees of the class realizing d
  std::map<int, BigInt> height_counts;  // their heights
};

// Full-enumeration sweep over the trees with degree sequence d. Throws
// Errc::budget_exceeded when count_trees(d) exceeds the budget and
// Errc::precondition when n < 2.
std::map<std::string, ClassStats> class_census(const DegreeSequence& d,
                                               const BigInt& budget = BigInt(10000000));

// Exact class masses under the uniform law on trees with degrees d. Requires
// d_2 >= 1 so the skew companion exists; the companion's table has the same
// keys with the same masses.
std::map<std::string, BigRat> class_probability_table(const DegreeSequence& d,
                                                      const BigInt& budget = BigInt(10000000));

}  // namespace degseq
