#include "degseq/equiv.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "degseq/codec.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

int swapped(int v) {
  if (v == 1) return 2;
  if (v == 2) return 1;
  return v;
}

// c[v] = parent(v) with the edge removed when v is the root or a child of 1
// or 2; removed slots read 0, so c fully determines the cut forest.
std::vector<int> cut_parents(int root, const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size()) - 1;
  std::vector<int> cut(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (v == root) continue;
    const int p = parent[v];
    cut[v] = (p == 1 || p == 2) ? 0 : p;
  }
  return cut;
}

// Cut encoding of the label-swapped tree, computed without rebuilding it:
// exchange the entries for 1 and 2, then the values 1 and 2.
std::pair<int, std::vector<int>> swapped_encoding(int root, std::vector<int> cut) {
  std::swap(cut[1], cut[2]);
  for (auto& c : cut) c = swapped(c);
  return {swapped(root), std::move(cut)};
}

std::string serialize_encoding(int root, const std::vector<int>& cut) {
  std::string out = std::to_string(root);
  out += ';';
  const int n = static_cast<int>(cut.size()) - 1;
  for (int v = 1; v <= n; ++v) {
    if (v > 1) out += ',';
    out += std::to_string(cut[v]);
  }
  return out;
}

void require_pair(int n) {
  if (n < 2) fail(Errc::precondition, "relation needs vertices 1 and 2: n = " + std::to_string(n));
}

// Each piece of the cut forest as "root:v<c_v,..." over its sorted vertex
// set; the sorted list of pieces is the forest. Only used by the reference
// relation, so clarity beats speed.
std::vector<std::string> forest_pieces(const LabeledRootedTree& t) {
  const int n = t.n();
  const std::vector<int> cut = cut_parents(t.root(), t.parent_array());
  std::vector<int> piece_root(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> path;
    int w = v;
    while (piece_root[w] == 0 && cut[w] != 0) {
      path.push_back(w);
      w = cut[w];
    }
    const int r = piece_root[w] == 0 ? w : piece_root[w];
    piece_root[v] = r;
    for (int u : path) piece_root[u] = r;
  }
  std::map<int, std::string> pieces;
  for (int v = 1; v <= n; ++v) {
    std::string& s = pieces[piece_root[v]];
    if (s.empty()) s = std::to_string(piece_root[v]) + ":";
    s += std::to_string(v) + "<" + std::to_string(cut[v]) + ",";
  }
  std::vector<std::string> out;
  out.reserve(pieces.size());
  for (auto& [r, s] : pieces) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LabeledRootedTree swap_first_two(const LabeledRootedTree& t) {
  const int n = t.n();
  require_pair(n);
  std::vector<int> parent(n + 1, 0);
  for (int v = 1; v <= n; ++v) parent[swapped(v)] = swapped(t.parent(v));
  return LabeledRootedTree(n, swapped(t.root()), std::move(parent));
}

std::string equiv_class_key(const LabeledRootedTree& t) {
  require_pair(t.n());
  std::pair<int, std::vector<int>> enc{t.root(), cut_parents(t.root(), t.parent_array())};
  std::pair<int, std::vector<int>> alt = swapped_encoding(enc.first, enc.second);
  const auto& best = alt < enc ? alt : enc;
  return serialize_encoding(best.first, best.second);
}

bool related_by_forest(const LabeledRootedTree& a, const LabeledRootedTree& b) {
  require_pair(a.n());
  require_pair(b.n());
  if (a.n() != b.n()) return false;
  if (a.root() == b.root() && forest_pieces(a) == forest_pieces(b)) return true;
  const LabeledRootedTree a12 = swap_first_two(a);
  return a12.root() == b.root() && forest_pieces(a12) == forest_pieces(b);
}

bool first_two_nested(const LabeledRootedTree& t) {
  require_pair(t.n());
  for (int v = t.parent(2); v != 0; v = t.parent(v))
    if (v == 1) return true;
  for (int v = t.parent(1); v != 0; v = t.parent(v))
    if (v == 2) return true;
  return false;
}

DegreeSequence skew_companion(const DegreeSequence& d) {
  require_pair(d.n());
  if (d.d(2) < 1) fail(Errc::precondition, "skew companion needs a child slot at vertex 2");
  std::vector<int> entries = d.entries();
  entries[0] += 1;
  entries[1] -= 1;
  return DegreeSequence(std::move(entries));
}

std::map<std::string, ClassStats> class_census(const DegreeSequence& d, const BigInt& budget) {
  require_pair(d.n());
  if (count_trees(d) > budget) fail(Errc::budget_exceeded, "class census larger than budget");
  std::map<std::string, ClassStats> out;
  const int n = d.n();
  for_each_tree(d, [&](int root, const std::vector<int>& parent) {
    LabeledRootedTree t(n, root, parent);
    ClassStats& stats = out[equiv_class_key(t)];
    stats.size += 1;
    stats.height_counts[t.height()] += 1;
  });
  return out;
}

std::map<std::string, BigRat> class_probability_table(const DegreeSequence& d, const BigInt& budget) {
  require_pair(d.n());
  if (d.d(2) < 1) fail(Errc::precondition, "class table needs d_2 >= 1 for its companion");
  const BigInt total = count_trees(d);
  std::map<std::string, BigRat> out;
  for (const auto& [key, stats] : class_census(d, budget)) out[key] = BigRat(stats.size, total);
  return out;
}

}  // namespace degseq
