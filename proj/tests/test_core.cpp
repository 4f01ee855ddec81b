#include <doctest.h>

#include <algorithm>
#include <queue>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/rng.hpp"
#include "degseq/tree.hpp"

using namespace degseq;

namespace {

// Independent height oracle: BFS over explicit child lists.
int bfs_height(const LabeledRootedTree& t) {
  const auto ch = t.children();
  int best = 0;
  std::queue<std::pair<int, int>> q;
  q.push({t.root(), 0});
  while (!q.empty()) {
    auto [v, d] = q.front();
    q.pop();
    best = std::max(best, d);
    for (int c : ch[v]) q.push({c, d + 1});
  }
  return best;
}

LabeledRootedTree path_tree(int n) {
  std::vector<int> parent(n + 1, 0);
  for (int v = 2; v <= n; ++v) parent[v] = v - 1;
  return LabeledRootedTree(n, 1, parent);
}

}  // namespace

TEST_CASE("degree sequence validation") {
  CHECK_NOTHROW(DegreeSequence({0}));
  CHECK_NOTHROW(DegreeSequence({1, 3, 2, 0, 0, 0, 0}));
  CHECK_THROWS_AS(DegreeSequence({1, 1}), Error);
  try {
    DegreeSequence({1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sum_mismatch);
  }
  try {
    DegreeSequence({2, -1, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::negative_entry);
  }
  try {
    DegreeSequence(std::vector<int>{});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_sequence);
  }
}

TEST_CASE("degree counts") {
  const DegreeSequence d({1, 3, 2, 0, 0, 0, 0});
  const auto counts = degree_counts(d);
  CHECK(counts.at(0) == 4);
  CHECK(counts.at(1) == 1);
  CHECK(counts.at(2) == 1);
  CHECK(counts.at(3) == 1);
  CHECK(counts.size() == 4);

  CHECK(degree_counts(DegreeSequence({0})).at(0) == 1);

  // Identities: sum n_i = n, sum i * n_i = n - 1.
  RngStream rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(8));
    std::vector<int> deg(n, 0);
    for (int unit = 0; unit < n - 1; ++unit) ++deg[rng.below(n)];
    const DegreeSequence ds(deg);
    int total = 0;
    long long weighted = 0;
    for (const auto& [value, count] : degree_counts(ds)) {
      total += count;
      weighted += static_cast<long long>(value) * count;
    }
    CHECK(total == n);
    CHECK(weighted == n - 1);
  }
}

TEST_CASE("sigma stats") {
  const auto s = sigma_stats(DegreeSequence({2, 2, 0, 0, 0}));
  CHECK(s.sigma_d == doctest::Approx(std::sqrt(4.0 / 5.0)).epsilon(1e-12));
  CHECK(s.sigma_prime == doctest::Approx(std::sqrt(4.0 / 5.0)).epsilon(1e-12));
  CHECK(s.delta == doctest::Approx(1.0).epsilon(1e-12));

  const auto p = sigma_stats(DegreeSequence({1, 0}));
  CHECK(p.sigma_d == doctest::Approx(0.0));
  CHECK(p.sigma_prime == doctest::Approx(0.0));
  CHECK(p.delta == doctest::Approx(0.5).epsilon(1e-12));

  const auto q = sigma_stats(DegreeSequence({3, 2, 1, 0, 0, 0, 0}));
  CHECK(q.sigma_d == doctest::Approx(std::sqrt(8.0 / 7.0)).epsilon(1e-12));
  CHECK(q.delta == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  CHECK(q.sigma_prime == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("compression predicates") {
  CHECK(is_compressed(DegreeSequence({1, 3, 2, 0, 0, 0, 0})));
  CHECK(!is_compressed(DegreeSequence({1, 0, 3, 0, 0, 2, 0})));
  CHECK(is_compressed(DegreeSequence({0})));
  CHECK(is_sub_binary(DegreeSequence({2, 2, 1, 0, 0, 0})));
  CHECK(!is_sub_binary(DegreeSequence({3, 0, 0, 0})));
}

TEST_CASE("tree construction and validation") {
  const LabeledRootedTree t(4, 1, {0, 0, 1, 1, 2});
  CHECK(t.height() == 2);
  CHECK(t.degree(1) == 2);
  CHECK(t.degree(2) == 1);
  CHECK(t.depth(4) == 2);
  CHECK(t.degree_sequence() == DegreeSequence({2, 1, 0, 0}));

  // Cycle: 2 -> 3 -> 2 never reaches the root.
  CHECK_THROWS_AS(LabeledRootedTree(3, 1, {0, 0, 3, 2}), Error);
  // Two roots.
  CHECK_THROWS_AS(LabeledRootedTree(3, 1, {0, 0, 0, 2}), Error);
  // Parent of root must be zero.
  CHECK_THROWS_AS(LabeledRootedTree(2, 1, {0, 2, 1}), Error);
  CHECK_NOTHROW(LabeledRootedTree::single_vertex());
}

TEST_CASE("height matches BFS oracle") {
  CHECK(LabeledRootedTree::single_vertex().height() == 0);
  CHECK(path_tree(3).height() == 2);

  // 8 vertices: root with 3 children, two of them with 2 children each.
  const LabeledRootedTree t(8, 1, {0, 0, 1, 1, 1, 2, 2, 3, 3});
  CHECK(t.height() == 2);
  CHECK(t.height() == bfs_height(t));

  RngStream rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(30));
    std::vector<int> parent(n + 1, 0);
    // Random recursive tree rooted at 1: parent of v is uniform in [1, v-1].
    for (int v = 2; v <= n; ++v) parent[v] = 1 + static_cast<int>(rng.below(v - 1));
    const LabeledRootedTree rt(n, 1, parent);
    CHECK(rt.height() == bfs_height(rt));
    CHECK(rt.height() <= n - 1);
  }
  CHECK(path_tree(9).height() == 8);  // equality exactly for paths
}

TEST_CASE("distance to ancestor set") {
  const LabeledRootedTree t(6, 1, {0, 0, 1, 1, 2, 2, 4});
  CHECK(dist_to_subtree(t, 5, std::vector<int>{1}) == 2);
  CHECK(dist_to_subtree(t, 5, std::vector<int>{1, 2}) == 1);
  CHECK(dist_to_subtree(t, 5, std::vector<int>{5, 1}) == 0);
  CHECK_THROWS_AS(dist_to_subtree(t, 5, std::vector<int>{4, 6}), Error);
  try {
    dist_to_subtree(t, 5, std::vector<int>{4});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_connected);
  }

  RngStream rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(20));
    std::vector<int> parent(n + 1, 0);
    for (int v = 2; v <= n; ++v) parent[v] = 1 + static_cast<int>(rng.below(v - 1));
    const LabeledRootedTree rt(n, 1, parent);
    const int v = 1 + static_cast<int>(rng.below(n));
    // Set = all vertices at depth <= c: distance is depth(v) - c when below.
    const int c = static_cast<int>(rng.below(rt.height() + 1));
    std::vector<int> labels;
    for (int u = 1; u <= n; ++u)
      if (rt.depth(u) <= c) labels.push_back(u);
    const int expect = std::max(0, rt.depth(v) - c);
    CHECK(dist_to_subtree(rt, v, labels) == expect);
  }
}

TEST_CASE("tree serialization round trip") {
  const LabeledRootedTree t(4, 2, {0, 2, 0, 2, 1});
  CHECK(format_tree(t) == "2;2,0,2,1");
  CHECK(parse_tree(format_tree(t)) == t);
  CHECK(format_tree(parse_tree("1;0,1")) == "1;0,1");
  CHECK_THROWS_AS(parse_tree("3,1,1"), Error);
  CHECK_THROWS_AS(parse_tree("1;0,x"), Error);
}

TEST_CASE("subset trees compact correctly") {
  SubsetTree s;
  s.root = 3;
  s.parent = {{3, 0}, {7, 3}, {9, 7}, {5, 3}};
  CHECK(subset_height(s) == 2);
  CHECK(subset_degree(s, 3) == 2);
  auto [t, kept] = compact(s);
  CHECK(t.n() == 4);
  CHECK(kept == std::vector<int>{3, 5, 7, 9});
  CHECK(t.root() == 1);
  CHECK(t.parent(2) == 1);  // 5 under 3
  CHECK(t.parent(4) == 3);  // 9 under 7
  CHECK(t.height() == 2);
}
