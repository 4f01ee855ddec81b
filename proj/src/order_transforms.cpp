#include "degseq/order_transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

void require_position(const DegreeSequence& d, int p, const char* name) {
  if (p < 1 || p > d.n())
    fail(Errc::precondition, std::string(name) + " = " + std::to_string(p) + " outside 1.." + std::to_string(d.n()));
}

std::vector<int> apply_relabel(const std::vector<int>& moved, const std::vector<int>& relabel) {
  int n = static_cast<int>(moved.size());
  if (static_cast<int>(relabel.size()) != n)
    fail(Errc::bad_label, "relabel has length " + std::to_string(relabel.size()) + ", expected " + std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  std::vector<int> out(moved.size());
  for (int p = 1; p <= n; ++p) {
    int q = relabel[p - 1];
    if (q < 1 || q > n || seen[q]) fail(Errc::bad_label, "relabel is not a permutation of 1.." + std::to_string(n));
    seen[q] = 1;
    out[q - 1] = moved[p - 1];
  }
  return out;
}

// Partitions of m into parts of size >= 1, descending, fed to fn.
void for_each_partition(int m, int max_part, std::vector<int>& acc,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (m == 0) {
    fn(acc);
    return;
  }
  for (int part = std::min(m, max_part); part >= 1; --part) {
    acc.push_back(part);
    for_each_partition(m - part, part, acc, fn);
    acc.pop_back();
  }
}

// Nearest strict ancestor of each vertex that keeps its degree, computed with
// an explicit stack so long unary chains cost linear time overall.
std::map<int, int> surviving_ancestors(const SubsetTree& t, const std::map<int, int>& deg) {
  std::map<int, int> up;  // for unary v: nearest ancestor with degree != 1, or 0
  for (const auto& [v, p] : t.parent) {
    (void)p;
    if (deg.at(v) != 1 || up.count(v)) continue;
    std::vector<int> chain;
    int u = v;
    while (u != 0 && deg.at(u) == 1 && !up.count(u)) {
      chain.push_back(u);
      u = t.parent.at(u);
    }
    int anchor = (u == 0) ? 0 : (deg.at(u) != 1 ? u : up.at(u));
    for (int w : chain) up[w] = anchor;
  }
  return up;
}

}  // namespace

DegreeSequence apply_cover(const DegreeSequence& d, const CoverMove& move) {
  require_position(d, move.i, "i");
  require_position(d, move.j, "j");
  if (move.i == move.j) fail(Errc::precondition, "i and j must be distinct positions");
  std::vector<int> e = d.entries();
  int a = e[move.i - 1], b = e[move.j - 1];
  if (move.kind == CoverKind::skew) {
    if (b < 1) fail(Errc::precondition, "skew needs d_j >= 1, got " + std::to_string(b));
    if (a < b) fail(Errc::precondition, "skew needs d_i >= d_j, got " + std::to_string(a) + " < " + std::to_string(b));
    e[move.i - 1] = a + 1;
    e[move.j - 1] = b - 1;
  } else {
    if (a < 1 || b < 1) fail(Errc::precondition, "merge needs d_i >= 1 and d_j >= 1");
    e[move.i - 1] = a + b;
    e[move.j - 1] = 0;
  }
  if (!move.relabel.empty()) e = apply_relabel(e, move.relabel);
  return DegreeSequence(e);
}

std::vector<std::pair<DegreeSequence, DegreeSequence>> covering_pairs(int n, std::size_t budget) {
  if (n < 1) fail(Errc::precondition, "covering_pairs needs n >= 1");
  std::set<std::pair<std::vector<int>, std::vector<int>>> found;
  std::vector<int> acc;
  for_each_partition(n - 1, n - 1, acc, [&](const std::vector<int>& parts) {
    std::vector<int> d(parts);
    d.resize(n, 0);
    // Distinct entry values a >= b >= 1 present in d, with multiplicity two
    // when a == b.
    std::map<int, int> mult;
    for (int v : d)
      if (v >= 1) ++mult[v];
    for (const auto& [a, ca] : mult) {
      for (const auto& [b, cb] : mult) {
        if (b > a || (a == b && ca < 2)) continue;
        (void)cb;
        std::vector<int> skewed = d;
        skewed.erase(std::find(skewed.begin(), skewed.end(), a));
        skewed.erase(std::find(skewed.begin(), skewed.end(), b));
        skewed.push_back(a + 1);
        skewed.push_back(b - 1);
        std::sort(skewed.begin(), skewed.end(), std::greater<int>());
        found.emplace(d, skewed);
        if (found.size() > budget) fail(Errc::budget_exceeded, "covering_pairs: more than " + std::to_string(budget) + " pairs");
      }
    }
  });
  std::vector<std::pair<DegreeSequence, DegreeSequence>> out;
  out.reserve(found.size());
  for (const auto& [d, skewed] : found) out.emplace_back(DegreeSequence(d), DegreeSequence(skewed));
  return out;
}

SubsetTree suppress_degree_ones(const SubsetTree& t) {
  std::map<int, int> deg;
  for (const auto& [v, p] : t.parent) {
    deg[v];
    if (p != 0) ++deg[p];
  }
  bool any_survivor = false;
  for (const auto& [v, k] : deg) {
    (void)v;
    if (k != 1) any_survivor = true;
  }
  if (!any_survivor) fail(Errc::precondition, "every vertex has exactly one child");
  std::map<int, int> up = surviving_ancestors(t, deg);
  SubsetTree out;
  for (const auto& [v, p] : t.parent) {
    if (deg.at(v) == 1) continue;
    int u = p;
    if (u != 0 && deg.at(u) == 1) u = up.at(u);
    out.parent[v] = u;
    if (u == 0) out.root = v;
  }
  return out;
}

SubsetTree suppress_degree_ones(const LabeledRootedTree& t) { return suppress_degree_ones(as_subset(t)); }

SubsetTree stretch_with_composition(const SubsetTree& t_minus, const UnaryComposition& comp) {
  if (comp.parts.size() != t_minus.parent.size())
    fail(Errc::precondition, "composition has " + std::to_string(comp.parts.size()) + " parts for " +
                                 std::to_string(t_minus.parent.size()) + " vertices");
  std::set<int> inserted;
  for (const auto& part : comp.parts) {
    for (int s : part) {
      if (t_minus.parent.count(s)) fail(Errc::label_collision, "label " + std::to_string(s) + " already names a vertex");
      if (!inserted.insert(s).second) fail(Errc::label_collision, "label " + std::to_string(s) + " inserted twice");
    }
  }
  SubsetTree out = t_minus;
  std::size_t i = 0;
  for (const auto& [v, p] : t_minus.parent) {
    const std::vector<int>& part = comp.parts[i++];
    int prev = v;
    for (int s : part) {
      out.parent[prev] = s;
      prev = s;
    }
    if (!part.empty()) {
      out.parent[prev] = p;
      if (p == 0) out.root = prev;
    }
  }
  return out;
}

SubsetTree stretch_with_degree_ones(const SubsetTree& t_minus, const std::vector<int>& unary_labels,
                                    RngStream& rng) {
  int k = static_cast<int>(t_minus.parent.size());
  int m = static_cast<int>(unary_labels.size());
  std::vector<int> order = unary_labels;
  rng.shuffle(order);
  // Uniform weak composition of m into k parts: k - 1 bars among m + k - 1
  // slots, gaps give the part sizes.
  std::vector<int> slots(m + k - 1);
  for (int s = 0; s < m + k - 1; ++s) slots[s] = s;
  rng.shuffle(slots);
  std::vector<int> bars(slots.begin(), slots.begin() + (k - 1));
  std::sort(bars.begin(), bars.end());
  UnaryComposition comp;
  comp.parts.resize(k);
  int at = 0;
  for (int i = 0; i < k; ++i) {
    int end = (i + 1 < k) ? bars[i] - i : m + k - 1 - (k - 1);
    while (at < end) comp.parts[i].push_back(order[at++]);
  }
  return stretch_with_composition(t_minus, comp);
}

std::vector<DegreeSequence> sub_binary_chain(const DegreeSequence& d) {
  std::vector<DegreeSequence> chain{d};
  std::vector<int> e = d.entries();
  auto lowest = [&e](int value, int from = 0) {
    for (int i = from; i < static_cast<int>(e.size()); ++i)
      if (e[i] == value) return i;
    return -1;
  };
  auto lowest_at_least = [&e](int value) {
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
      if (e[i] >= value) return i;
    return -1;
  };
  for (int k = lowest_at_least(4); k != -1; k = lowest_at_least(4)) {
    e[k] -= 2;
    e[lowest(0)] = 2;
    chain.emplace_back(e);
  }
  for (int k = lowest(3); k != -1; k = lowest(3)) {
    int l = lowest(3, k + 1);
    if (l == -1) break;
    e[k] = 2;
    e[l] = 2;
    e[lowest(0)] = 2;
    chain.emplace_back(e);
  }
  int k = lowest(3);
  if (k != -1) {
    int j = lowest(1);
    e[k] = 2;
    if (j != -1) {
      e[j] = 2;
    } else {
      e.push_back(2);
    }
    chain.emplace_back(e);
  }
  return chain;
}

DegreeSequence to_sub_binary(const DegreeSequence& d) { return sub_binary_chain(d).back(); }

DegreeSequence companion_same_leaf_profile(const DegreeSequence& d) {
  int n0 = d.num_leaves(), n1 = d.num_degree_one();
  std::vector<int> b;
  b.reserve(2 * n0 + n1 - 1);
  for (int i = 0; i < n0 - 1; ++i) b.push_back(2);
  for (int i = 0; i < n1; ++i) b.push_back(1);
  for (int i = 0; i < n0; ++i) b.push_back(0);
  return DegreeSequence(b);
}

}  // namespace degseq
