#include "degseq/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace degseq {

CompressResult compress(const DegreeSequence& d) {
  const int n = d.n();
  CompressResult r{d, std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
  std::vector<int> entries(n);
  int next_nonzero = 1, next_zero = d.num_nonleaf() + 1;
  for (int orig = 1; orig <= n; ++orig) {
    const int v = d.d(orig);
    const int fresh = (v > 0) ? next_nonzero++ : next_zero++;
    r.relabel[orig] = fresh;
    r.original_of[fresh] = orig;
    entries[fresh - 1] = v;
  }
  r.compressed = DegreeSequence(std::move(entries));
  return r;
}

SequenceCode::SequenceCode(std::vector<int> values_in, DegreeSequence degrees_in)
    : values(std::move(values_in)), degrees(std::move(degrees_in)) {
  if (!is_compressed(degrees)) fail(Errc::not_compressed, "SequenceCode: degree sequence must be compressed");
  const int n = degrees.n();
  if (values.size() != static_cast<std::size_t>(n) - 1)
    fail(Errc::malformed_code, "SequenceCode: expected n-1 entries");
  std::vector<int> counts(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) fail(Errc::malformed_code, "SequenceCode: entry out of range");
    ++counts[v];
  }
  for (int i = 1; i <= n; ++i)
    if (counts[i] != degrees.d(i))
      fail(Errc::malformed_code, "SequenceCode: label " + std::to_string(i) + " occurs " +
                                     std::to_string(counts[i]) + " times, degree is " +
                                     std::to_string(degrees.d(i)));
}

BigInt count_trees(const DegreeSequence& d) {
  BigInt r = big_factorial(d.n() - 1);
  for (int di : d.entries()) r /= big_factorial(di);
  return r;
}

// Shared decode loop. The code is consumed left to right: a first occurrence
// extends the current path, a repeat closes it with the next leaf label and
// restarts the path at the repeated vertex. Leaf m + n0 = n closes the final
// path.
DecodedShape decode_parents(const std::vector<int>& values, const DegreeSequence& d, std::vector<int>& parent) {
  const int n = d.n();
  const int m = d.num_nonleaf();
  parent.assign(n + 1, 0);
  if (n == 1) return {1, 0};
  std::vector<int> depth(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  const int root = values[0];
  seen[root] = 1;
  int prev = root, height = 0, next_leaf = m;
  for (int k = 1; k < n - 1; ++k) {
    const int v = values[k];
    if (seen[v]) {
      const int leaf = ++next_leaf;
      parent[leaf] = prev;
      depth[leaf] = depth[prev] + 1;
      height = std::max(height, depth[leaf]);
      prev = v;
    } else {
      seen[v] = 1;
      parent[v] = prev;
      depth[v] = depth[prev] + 1;
      height = std::max(height, depth[v]);
      prev = v;
    }
  }
  parent[n] = prev;
  depth[n] = depth[prev] + 1;
  height = std::max(height, depth[n]);
  return {root, height};
}

LabeledRootedTree tree_from_sequence(const SequenceCode& code) {
  std::vector<int> parent;
  const DecodedShape shape = decode_parents(code.values, code.degrees, parent);
  return LabeledRootedTree(code.degrees.n(), shape.root, std::move(parent));
}

SequenceCode sequence_from_tree(const LabeledRootedTree& t) {
  const DegreeSequence d = t.degree_sequence();
  if (!is_compressed(d)) fail(Errc::not_compressed, "sequence_from_tree: degree sequence must be compressed");
  const int n = t.n();
  const int m = d.num_nonleaf();
  std::vector<int> values;
  if (n == 1) return SequenceCode(values, d);
  values.reserve(n - 1);
  std::vector<char> visited(n + 1, 0);
  visited[t.root()] = 1;
  std::vector<int> climb;
  for (int leaf = m + 1; leaf <= n; ++leaf) {
    // Path from the already-built part down to this leaf, leaf excluded.
    climb.clear();
    int u = t.parent_array()[leaf];
    while (!visited[u]) {
      climb.push_back(u);
      u = t.parent_array()[u];
    }
    climb.push_back(u);  // anchor inside the built part
    for (auto it = climb.rbegin(); it != climb.rend(); ++it) {
      values.push_back(*it);
      visited[*it] = 1;
    }
    visited[leaf] = 1;
  }
  return SequenceCode(std::move(values), d);
}

ConstructionTrace build_trace(const SequenceCode& code) {
  const DegreeSequence& d = code.degrees;
  const int n = d.n();
  const int m = d.num_nonleaf();
  ConstructionTrace tr;
  tr.n = n;
  tr.m = m;
  tr.n0 = d.num_leaves();
  tr.w.assign(n + 1, 0);
  tr.pi.assign(n + 1, 0);
  tr.parent.assign(n + 1, 0);
  tr.depth_at_step.assign(n + 1, 0);
  tr.prefix_heights.assign(n + 1, 0);
  if (n == 1) {
    tr.root = 1;
    tr.w[1] = 1;
    tr.pi[1] = 1;
    tr.prefix_sums = {0};
    return tr;
  }
  std::vector<int> depth(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  const int root = code.values[0];
  tr.root = root;
  seen[root] = 1;
  tr.w[1] = root;
  int prev = root, next_leaf = m, step = 1, height = 0;
  tr.prefix_heights[1] = 0;
  auto place = [&](int vertex, int par) {
    tr.parent[vertex] = par;
    depth[vertex] = (par == 0) ? 0 : depth[par] + 1;
    ++step;
    tr.w[step] = vertex;
    tr.depth_at_step[step] = depth[vertex];
    height = std::max(height, depth[vertex]);
    tr.prefix_heights[step] = height;
  };
  for (int k = 1; k < n - 1; ++k) {
    const int v = code.values[k];
    if (seen[v]) {
      tr.repeat_locations.push_back(k + 1);  // 1-based position in the code
      place(++next_leaf, prev);
      prev = v;
    } else {
      seen[v] = 1;
      place(v, prev);
      prev = v;
    }
  }
  place(n, prev);
  for (int s = 1; s <= n; ++s) tr.pi[tr.w[s]] = s;
  tr.nonleaf_order.reserve(m);
  for (int s = 1; s <= n; ++s)
    if (tr.w[s] <= m) tr.nonleaf_order.push_back(tr.w[s]);
  tr.prefix_sums.assign(m + 1, 0);
  for (int k = 1; k <= m; ++k)
    tr.prefix_sums[k] = tr.prefix_sums[k - 1] + d.d(tr.nonleaf_order[k - 1]) - 1;
  return tr;
}

int trace_k_of(const ConstructionTrace& trace, double x) {
  if (trace.m == 0) fail(Errc::out_of_range, "trace_k_of: trace has no internal vertices");
  if (!(x >= 0) || x > static_cast<double>(trace.n0 - 1))
    fail(Errc::out_of_range, "trace_k_of: x must lie in [0, n0 - 1]");
  const long long target = static_cast<long long>(std::ceil(x));
  // prefix_sums is nondecreasing; find the first k >= 1 reaching the target.
  const auto begin = trace.prefix_sums.begin() + 1;
  const auto it = std::lower_bound(begin, trace.prefix_sums.end(), target);
  if (it == trace.prefix_sums.end()) fail(Errc::out_of_range, "trace_k_of: x exceeds total capacity");
  return static_cast<int>(it - trace.prefix_sums.begin());
}

int rho(const ConstructionTrace& trace, double x) {
  const int k = trace_k_of(trace, x);
  return trace.pi[trace.nonleaf_order[k - 1]];
}

SubsetTree grow_prefix(const ConstructionTrace& trace, int k) {
  if (k < 1 || k > trace.n) fail(Errc::out_of_range, "grow_prefix: k must lie in [1, n]");
  SubsetTree t;
  t.root = trace.root;
  for (int s = 1; s <= k; ++s) t.parent[trace.w[s]] = trace.parent[trace.w[s]];
  return t;
}

BigInt code_rank(const SequenceCode& code) {
  const int n = code.degrees.n();
  std::vector<int> counts(n + 1, 0);
  for (int v : code.values) ++counts[v];
  int remaining = static_cast<int>(code.values.size());
  // perms = number of arrangements of the current remaining multiset.
  BigInt perms = big_factorial(remaining);
  for (int i = 1; i <= n; ++i) perms /= big_factorial(counts[i]);
  BigInt rank = 0;
  for (int v : code.values) {
    for (int smaller = 1; smaller < v; ++smaller) {
      if (counts[smaller] == 0) continue;
      // Arrangements beginning with `smaller`: perms * counts[smaller] / remaining.
      rank += perms * counts[smaller] / remaining;
    }
    perms = perms * counts[v] / remaining;
    --counts[v];
    --remaining;
  }
  return rank;
}

SequenceCode code_unrank(const DegreeSequence& d, const BigInt& rank) {
  if (!is_compressed(d)) fail(Errc::not_compressed, "code_unrank: degree sequence must be compressed");
  const int n = d.n();
  BigInt remaining_rank = rank;
  const BigInt total = count_trees(d);
  if (rank < 0 || rank >= total) fail(Errc::out_of_range, "code_unrank: rank out of range");
  std::vector<int> counts(n + 1, 0);
  for (int i = 1; i <= n; ++i) counts[i] = d.d(i);
  int remaining = n - 1;
  BigInt perms = total;
  std::vector<int> values;
  values.reserve(remaining);
  while (remaining > 0) {
    for (int v = 1; v <= n; ++v) {
      if (counts[v] == 0) continue;
      const BigInt with_v = perms * counts[v] / remaining;
      if (remaining_rank < with_v) {
        values.push_back(v);
        perms = with_v;
        --counts[v];
        --remaining;
        break;
      }
      remaining_rank -= with_v;
    }
  }
  return SequenceCode(std::move(values), d);
}

void for_each_code(const DegreeSequence& d, const std::function<void(const std::vector<int>&)>& fn) {
  if (!is_compressed(d)) fail(Errc::not_compressed, "for_each_code: degree sequence must be compressed");
  std::vector<int> values;
  for (int i = 1; i <= d.n(); ++i)
    for (int c = 0; c < d.d(i); ++c) values.push_back(i);
  if (values.empty()) {
    fn(values);
    return;
  }
  std::sort(values.begin(), values.end());
  do {
    fn(values);
  } while (std::next_permutation(values.begin(), values.end()));
}

void for_each_tree(const DegreeSequence& d, const std::function<void(int, const std::vector<int>&)>& fn) {
  const CompressResult cr = compress(d);
  const int n = d.n();
  std::vector<int> parent_c, parent_o(n + 1, 0);
  for_each_code(cr.compressed, [&](const std::vector<int>& values) {
    const DecodedShape shape = decode_parents(values, cr.compressed, parent_c);
    for (int fresh = 1; fresh <= n; ++fresh) {
      const int p = parent_c[fresh];
      parent_o[cr.original_of[fresh]] = (p == 0) ? 0 : cr.original_of[p];
    }
    fn(cr.original_of[shape.root], parent_o);
  });
}

}  // namespace degseq
