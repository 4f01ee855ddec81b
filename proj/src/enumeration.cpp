#include "degseq/enumeration.hpp"

#include <algorithm>
#include <map>

#include "degseq/errors.hpp"
#include "degseq/tree.hpp"

namespace degseq {

BigRat HeightDistribution::probability(int h) const {
  if (total == 0) fail(Errc::precondition, "empty distribution");
  auto it = counts.find(h);
  if (it == counts.end()) return BigRat(0);
  return BigRat(it->second, total);
}

BigRat HeightDistribution::cdf(int h) const {
  if (total == 0) fail(Errc::precondition, "empty distribution");
  BigInt below = 0;
  for (const auto& [height, count] : counts) {
    if (height > h) break;
    below += count;
  }
  return BigRat(below, total);
}

double HeightDistribution::mean() const {
  if (total == 0) fail(Errc::precondition, "empty distribution");
  BigRat acc(0);
  for (const auto& [height, count] : counts) acc += BigRat(height) * BigRat(count);
  acc /= BigRat(total);
  return static_cast<double>(acc);
}

HeightDistribution exact_height_distribution(const DegreeSequence& d, const BigInt& budget) {
  const BigInt size = count_trees(d);
  if (size > budget) fail(Errc::budget_exceeded, "tree count exceeds enumeration budget");
  const CompressResult comp = compress(d);
  HeightDistribution dist;
  std::vector<int> parent;
  for_each_code(comp.compressed, [&](const std::vector<int>& values) {
    const DecodedShape shape = decode_parents(values, comp.compressed, parent);
    dist.counts[shape.height] += 1;
  });
  dist.total = size;
  return dist;
}

CompareResult stochastic_compare(const HeightDistribution& a, const HeightDistribution& b) {
  if (a.total == 0 || b.total == 0) fail(Errc::precondition, "empty distribution");
  std::map<int, std::pair<BigInt, BigInt>> merged;
  for (const auto& [h, c] : a.counts) merged[h].first = c;
  for (const auto& [h, c] : b.counts) merged[h].second = c;

  BigInt cum_a = 0;
  BigInt cum_b = 0;
  bool a_cdf_below = true;  // P(A <= t) <= P(B <= t) everywhere
  bool b_cdf_below = true;
  for (const auto& [h, pair] : merged) {
    cum_a += pair.first;
    cum_b += pair.second;
    // Compare cum_a / total_a against cum_b / total_b by cross multiplication.
    const BigInt lhs = cum_a * b.total;
    const BigInt rhs = cum_b * a.total;
    if (lhs > rhs) a_cdf_below = false;
    if (rhs > lhs) b_cdf_below = false;
  }

  // A CDF sitting below the other everywhere means that law is
  // stochastically larger.
  CompareResult result{};
  if (a_cdf_below && b_cdf_below) {
    result = {CompareVerdict::equal, false};
  } else if (a_cdf_below) {
    result = {CompareVerdict::a_dominates, true};
  } else if (b_cdf_below) {
    result = {CompareVerdict::b_dominates, true};
  } else {
    result = {CompareVerdict::incomparable, false};
  }
  return result;
}

namespace {

using Words = std::vector<std::vector<int>>;

class PlaneTreeTable {
 public:
  const Words& trees(int n) {
    auto it = tree_cache_.find(n);
    if (it != tree_cache_.end()) return it->second;
    Words out;
    if (n == 1) {
      out.push_back({0});
    } else {
      for (int c = 1; c < n; ++c) {
        for (const auto& forest : forests(c, n - 1)) {
          std::vector<int> word;
          word.reserve(n);
          word.push_back(c);
          word.insert(word.end(), forest.begin(), forest.end());
          out.push_back(std::move(word));
        }
      }
    }
    return tree_cache_.emplace(n, std::move(out)).first->second;
  }

 private:
  const Words& forests(int k, int m) {
    const auto key = std::make_pair(k, m);
    auto it = forest_cache_.find(key);
    if (it != forest_cache_.end()) return it->second;
    Words out;
    if (k == 1) {
      out = trees(m);
    } else {
      for (int s = 1; s <= m - k + 1; ++s) {
        for (const auto& head : trees(s)) {
          for (const auto& rest : forests(k - 1, m - s)) {
            std::vector<int> word;
            word.reserve(m);
            word.insert(word.end(), head.begin(), head.end());
            word.insert(word.end(), rest.begin(), rest.end());
            out.push_back(std::move(word));
          }
        }
      }
    }
    return forest_cache_.emplace(key, std::move(out)).first->second;
  }

  std::map<int, Words> tree_cache_;
  std::map<std::pair<int, int>, Words> forest_cache_;
};

}  // namespace

void for_each_plane_tree(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1) fail(Errc::precondition, "plane tree needs at least one vertex");
  PlaneTreeTable table;
  for (const auto& word : table.trees(n)) fn(word);
}

BigInt count_plane_trees(int n) {
  if (n < 1) fail(Errc::precondition, "plane tree needs at least one vertex");
  return big_binomial(2 * (n - 1), n - 1) / BigInt(n);
}

int plane_tree_height(const std::vector<int>& word) {
  if (word.empty()) fail(Errc::precondition, "empty child-count word");
  std::vector<int> open;  // remaining child slots along the active path
  int height = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int c = word[i];
    if (i == 0) {
      if (c > 0) open.push_back(c);
      continue;
    }
    if (open.empty()) fail(Errc::precondition, "child-count word closes early");
    const int depth = static_cast<int>(open.size());
    height = std::max(height, depth);
    open.back() -= 1;
    if (c > 0) {
      open.push_back(c);
    } else {
      while (!open.empty() && open.back() == 0) open.pop_back();
    }
  }
  if (!open.empty()) fail(Errc::precondition, "child-count word leaves slots open");
  return height;
}

std::map<int, BigRat> plane_height_law(const std::map<int, BigRat>& mu, int n) {
  std::map<int, BigRat> masses;
  BigRat normalizer(0);
  for_each_plane_tree(n, [&](const std::vector<int>& word) {
    BigRat mass(1);
    for (int c : word) {
      auto it = mu.find(c);
      if (it == mu.end() || it->second == 0) {
        mass = 0;
        break;
      }
      mass *= it->second;
    }
    if (mass == 0) return;
    masses[plane_tree_height(word)] += mass;
    normalizer += mass;
  });
  if (normalizer == 0) fail(Errc::precondition, "no tree of this size carries positive mass");
  for (auto& [h, mass] : masses) mass /= normalizer;
  return masses;
}

std::map<std::string, BigRat> conditioned_labeled_law(const std::map<int, BigRat>& mu, int n) {
  struct Shape {
    std::vector<int> word;
    BigRat mass;
  };
  std::vector<Shape> shapes;
  BigRat normalizer(0);
  for_each_plane_tree(n, [&](const std::vector<int>& word) {
    BigRat mass(1);
    for (int c : word) {
      auto it = mu.find(c);
      if (it == mu.end() || it->second == 0) {
        mass = 0;
        break;
      }
      mass *= it->second;
    }
    if (mass == 0) return;
    shapes.push_back({word, mass});
    normalizer += mass;
  });
  if (normalizer == 0) fail(Errc::precondition, "no tree of this size carries positive mass");

  const BigRat label_weight(BigInt(1), big_factorial(n));
  std::map<std::string, BigRat> law;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  do {
    for (const auto& shape : shapes) {
      // Assign labels[i] to the i-th preorder vertex and read off parents.
      std::vector<int> parent(n + 1, 0);
      std::vector<std::pair<int, int>> open;  // (label, remaining slots)
      int root = labels[0];
      for (int i = 0; i < n; ++i) {
        const int c = shape.word[i];
        const int label = labels[i];
        if (i > 0) {
          parent[label] = open.back().first;
          open.back().second -= 1;
        }
        if (c > 0) {
          open.push_back({label, c});
        } else {
          while (!open.empty() && open.back().second == 0) open.pop_back();
        }
      }
      const LabeledRootedTree tree(n, root, parent);
      law[format_tree(tree)] += shape.mass / normalizer * label_weight;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return law;
}

CompareResult stochastic_compare_rational(const std::map<int, BigRat>& a, const std::map<int, BigRat>& b) {
  if (a.empty() || b.empty()) fail(Errc::precondition, "empty distribution");
  std::map<int, std::pair<BigRat, BigRat>> merged;
  for (const auto& [h, p] : a) merged[h].first = p;
  for (const auto& [h, p] : b) merged[h].second = p;
  BigRat cum_a(0);
  BigRat cum_b(0);
  bool a_cdf_below = true;
  bool b_cdf_below = true;
  for (const auto& [h, pair] : merged) {
    cum_a += pair.first;
    cum_b += pair.second;
    if (cum_a > cum_b) a_cdf_below = false;
    if (cum_b > cum_a) b_cdf_below = false;
  }
  CompareResult result{};
  if (a_cdf_below && b_cdf_below) {
    result = {CompareVerdict::equal, false};
  } else if (a_cdf_below) {
    result = {CompareVerdict::a_dominates, true};
  } else if (b_cdf_below) {
    result = {CompareVerdict::b_dominates, true};
  } else {
    result = {CompareVerdict::incomparable, false};
  }
  return result;
}

}  // namespace degseq
