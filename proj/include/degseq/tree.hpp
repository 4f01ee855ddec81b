#pragma once

#include <map>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"

namespace degseq {

// Rooted tree on vertex labels 1..n, stored as a parent array with the
// convention parent(root) = 0. Immutable after construction; depths and
// child counts are precomputed.
class LabeledRootedTree {
 public:
  // parent is 1-based: parent[0] is ignored, parent[root] must be 0.
  LabeledRootedTree(int n, int root, std::vector<int> parent);

  static LabeledRootedTree single_vertex() { return LabeledRootedTree(1, 1, {0, 0}); }

  int n() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const;
  int depth(int v) const;
  int degree(int v) const;  // number of children
  int height() const { return height_; }
  const std::vector<int>& parent_array() const { return parent_; }

  DegreeSequence degree_sequence() const;
  std::vector<std::vector<int>> children() const;  // 1-based; [0] unused

  bool operator==(const LabeledRootedTree& o) const {
    return n_ == o.n_ && root_ == o.root_ && parent_ == o.parent_;
  }
  bool operator<(const LabeledRootedTree& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (root_ != o.root_) return root_ < o.root_;
    return parent_ < o.parent_;
  }

 private:
  int n_, root_, height_;
  std::vector<int> parent_, depth_, degree_;
};

// Length of the path from v to the nearest member of the ancestor set
// (0 when v itself belongs). `in_set` is a 1-based membership mask.
// Throws Errc::not_connected when no ancestor of v lies in the set.
int dist_to_subtree(const LabeledRootedTree& t, int v, const std::vector<char>& in_set);
int dist_to_subtree(const LabeledRootedTree& t, int v, const std::vector<int>& labels);

// "root;p_1,p_2,...,p_n" with p_root = 0.
std::string format_tree(const LabeledRootedTree& t);
LabeledRootedTree parse_tree(const std::string& line);

// Rooted tree over an arbitrary finite label set, used where operations leave
// the contiguous 1..n label range (prefix trees, degree-one suppression).
struct SubsetTree {
  int root = 0;
  std::map<int, int> parent;  // parent.at(root) == 0; keys are the label set

  bool operator==(const SubsetTree& o) const { return root == o.root && parent == o.parent; }
  bool operator<(const SubsetTree& o) const {
    if (root != o.root) return root < o.root;
    return parent < o.parent;
  }
};

SubsetTree as_subset(const LabeledRootedTree& t);
int subset_height(const SubsetTree& t);
int subset_degree(const SubsetTree& t, int v);

// Order-preserving relabel of the label set onto 1..k. Returns the compact
// tree plus kept[new_label - 1] = original label.
std::pair<LabeledRootedTree, std::vector<int>> compact(const SubsetTree& t);

}  // namespace degseq
