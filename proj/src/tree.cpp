#include "degseq/tree.hpp"

#include <algorithm>
#include <sstream>

namespace degseq {

LabeledRootedTree::LabeledRootedTree(int n, int root, std::vector<int> parent)
    : n_(n), root_(root), parent_(std::move(parent)) {
  if (n_ < 1) fail(Errc::not_a_tree, "tree: need at least one vertex");
  if (root_ < 1 || root_ > n_) fail(Errc::not_a_tree, "tree: root label out of range");
  if (parent_.size() != static_cast<std::size_t>(n_) + 1)
    fail(Errc::not_a_tree, "tree: parent array must have n+1 entries");
  if (parent_[root_] != 0) fail(Errc::not_a_tree, "tree: parent of root must be 0");
  parent_[0] = 0;
  degree_.assign(n_ + 1, 0);
  for (int v = 1; v <= n_; ++v) {
    const int p = parent_[v];
    if (v == root_) continue;
    if (p < 1 || p > n_) fail(Errc::not_a_tree, "tree: parent out of range");
    ++degree_[p];
  }
  // Depth computation doubles as the acyclicity/connectivity check: every
  // vertex must reach the root in at most n steps.
  depth_.assign(n_ + 1, -1);
  depth_[root_] = 0;
  height_ = 0;
  std::vector<int> chain;
  for (int v = 1; v <= n_; ++v) {
    if (depth_[v] >= 0) continue;
    chain.clear();
    int u = v;
    while (depth_[u] < 0) {
      chain.push_back(u);
      if (static_cast<int>(chain.size()) > n_) fail(Errc::not_a_tree, "tree: cycle in parent map");
      u = parent_[u];
      if (u == 0) fail(Errc::not_a_tree, "tree: second root in parent map");
    }
    int base = depth_[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++base;
    height_ = std::max(height_, base);
  }
}

int LabeledRootedTree::parent(int v) const {
  if (v < 1 || v > n_) fail(Errc::bad_label, "tree::parent: label out of range");
  return parent_[v];
}

int LabeledRootedTree::depth(int v) const {
  if (v < 1 || v > n_) fail(Errc::bad_label, "tree::depth: label out of range");
  return depth_[v];
}

int LabeledRootedTree::degree(int v) const {
  if (v < 1 || v > n_) fail(Errc::bad_label, "tree::degree: label out of range");
  return degree_[v];
}

DegreeSequence LabeledRootedTree::degree_sequence() const {
  return DegreeSequence(std::vector<int>(degree_.begin() + 1, degree_.end()));
}

std::vector<std::vector<int>> LabeledRootedTree::children() const {
  std::vector<std::vector<int>> ch(n_ + 1);
  for (int v = 1; v <= n_; ++v)
    if (v != root_) ch[parent_[v]].push_back(v);
  return ch;
}

int dist_to_subtree(const LabeledRootedTree& t, int v, const std::vector<char>& in_set) {
  if (v < 1 || v > t.n()) fail(Errc::bad_label, "dist_to_subtree: label out of range");
  if (in_set.size() != static_cast<std::size_t>(t.n()) + 1)
    fail(Errc::out_of_range, "dist_to_subtree: mask must have n+1 entries");
  int u = v, hops = 0;
  while (u != 0) {
    if (in_set[u]) return hops;
    u = t.parent_array()[u];
    ++hops;
  }
  fail(Errc::not_connected, "dist_to_subtree: no ancestor of v lies in the set");
}

int dist_to_subtree(const LabeledRootedTree& t, int v, const std::vector<int>& labels) {
  std::vector<char> mask(t.n() + 1, 0);
  for (int u : labels) {
    if (u < 1 || u > t.n()) fail(Errc::bad_label, "dist_to_subtree: set label out of range");
    mask[u] = 1;
  }
  return dist_to_subtree(t, v, mask);
}

std::string format_tree(const LabeledRootedTree& t) {
  std::ostringstream out;
  out << t.root() << ';';
  for (int v = 1; v <= t.n(); ++v) {
    if (v > 1) out << ',';
    out << t.parent_array()[v];
  }
  return out.str();
}

LabeledRootedTree parse_tree(const std::string& line) {
  const auto semi = line.find(';');
  if (semi == std::string::npos) fail(Errc::parse, "parse_tree: missing ';'");
  int root = 0;
  try {
    std::size_t used = 0;
    root = std::stoi(line.substr(0, semi), &used);
    if (used != semi) fail(Errc::parse, "parse_tree: bad root field");
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::parse, "parse_tree: bad root field");
  }
  std::vector<int> parent{0};
  std::string rest = line.substr(semi + 1);
  std::istringstream in(rest);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      parent.push_back(std::stoi(tok));
    } catch (...) {
      fail(Errc::parse, "parse_tree: bad parent entry '" + tok + "'");
    }
  }
  if (parent.size() < 2) fail(Errc::parse, "parse_tree: no parent entries");
  const int n = static_cast<int>(parent.size()) - 1;
  return LabeledRootedTree(n, root, std::move(parent));
}

SubsetTree as_subset(const LabeledRootedTree& t) {
  SubsetTree s;
  s.root = t.root();
  for (int v = 1; v <= t.n(); ++v) s.parent[v] = t.parent_array()[v];
  return s;
}

int subset_height(const SubsetTree& t) {
  std::map<int, int> depth;
  depth[t.root] = 0;
  int best = 0;
  std::vector<int> chain;
  for (const auto& [v, p] : t.parent) {
    if (depth.count(v)) continue;
    chain.clear();
    int u = v;
    while (!depth.count(u)) {
      chain.push_back(u);
      auto it = t.parent.find(u);
      if (it == t.parent.end()) fail(Errc::not_a_tree, "subset_height: dangling parent");
      u = it->second;
      if (chain.size() > t.parent.size()) fail(Errc::not_a_tree, "subset_height: cycle");
    }
    int base = depth[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    best = std::max(best, base);
  }
  return best;
}

int subset_degree(const SubsetTree& t, int v) {
  int deg = 0;
  for (const auto& [u, p] : t.parent)
    if (p == v) ++deg;
  return deg;
}

std::pair<LabeledRootedTree, std::vector<int>> compact(const SubsetTree& t) {
  std::vector<int> kept;
  kept.reserve(t.parent.size());
  for (const auto& [v, p] : t.parent) kept.push_back(v);  // map keys are sorted
  std::map<int, int> to_new;
  for (std::size_t i = 0; i < kept.size(); ++i) to_new[kept[i]] = static_cast<int>(i) + 1;
  std::vector<int> parent(kept.size() + 1, 0);
  for (const auto& [v, p] : t.parent) parent[to_new[v]] = (p == 0) ? 0 : to_new.at(p);
  return {LabeledRootedTree(static_cast<int>(kept.size()), to_new.at(t.root), std::move(parent)), kept};
}

}  // namespace degseq
