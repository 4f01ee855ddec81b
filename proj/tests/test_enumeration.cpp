#include "degseq/enumeration.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "degseq/codec.hpp"
#include "degseq/errors.hpp"
#include "degseq/tree.hpp"
#include "test_util.hpp"

using namespace degseq;

namespace {

bool throws_errc(Errc want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("height law fixtures") {
  const HeightDistribution edge = exact_height_distribution(DegreeSequence({1, 0}));
  CHECK(edge.total == 1);
  CHECK(edge.counts.at(1) == 1);

  const HeightDistribution star3 = exact_height_distribution(DegreeSequence({2, 0, 0}));
  CHECK(star3.total == 1);
  CHECK(star3.counts.at(1) == 1);

  const HeightDistribution path3 = exact_height_distribution(DegreeSequence({1, 1, 0}));
  CHECK(path3.total == 2);
  CHECK(path3.counts.at(2) == 2);
}

TEST_CASE("height law accepts uncompressed input") {
  const HeightDistribution a = exact_height_distribution(DegreeSequence({0, 3, 0, 1, 0}));
  const HeightDistribution b = exact_height_distribution(DegreeSequence({3, 1, 0, 0, 0}));
  CHECK(a.counts == b.counts);
  CHECK(a.total == b.total);
}

TEST_CASE("height law consistency over all small sequences") {
  for (int n = 1; n <= 6; ++n) {
    for (const DegreeSequence& d : testutil::all_compressed(n)) {
      const HeightDistribution dist = exact_height_distribution(d);
      CHECK(dist.total == count_trees(d));
      BigInt sum = 0;
      for (const auto& [h, c] : dist.counts) {
        CHECK(c > 0);
        if (n > 1) {
          CHECK(h >= 1);
          CHECK(h <= n - 1);
        }
        sum += c;
      }
      CHECK(sum == dist.total);
      CHECK(dist.cdf(n) == BigRat(1));
    }
  }
}

TEST_CASE("height law budget") {
  CHECK(throws_errc(Errc::budget_exceeded, [] {
    exact_height_distribution(DegreeSequence({1, 1, 1, 0}), BigInt(2));
  }));
}

TEST_CASE("stochastic comparison on exact laws") {
  // Same height law through different degree sequences.
  const HeightDistribution a = exact_height_distribution(DegreeSequence({3, 1, 0, 0, 0}));
  const HeightDistribution b = exact_height_distribution(DegreeSequence({2, 2, 0, 0, 0}));
  CHECK(a.total == 4);
  CHECK(b.total == 6);
  const CompareResult eq = stochastic_compare(a, b);
  CHECK(eq.verdict == CompareVerdict::equal);
  CHECK_FALSE(eq.strict);

  // The path law sits strictly above the broader sequence's law.
  const HeightDistribution path4 = exact_height_distribution(DegreeSequence({1, 1, 1, 0}));
  const HeightDistribution wide4 = exact_height_distribution(DegreeSequence({2, 1, 0, 0}));
  const CompareResult gt = stochastic_compare(path4, wide4);
  CHECK(gt.verdict == CompareVerdict::a_dominates);
  CHECK(gt.strict);
  const CompareResult lt = stochastic_compare(wide4, path4);
  CHECK(lt.verdict == CompareVerdict::b_dominates);
  CHECK(lt.strict);
}

TEST_CASE("stochastic comparison detects crossing") {
  HeightDistribution a;
  a.counts[1] = 1;
  a.counts[4] = 1;
  a.total = 2;
  HeightDistribution b;
  b.counts[2] = 2;
  b.total = 2;
  const CompareResult r = stochastic_compare(a, b);
  CHECK(r.verdict == CompareVerdict::incomparable);
  CHECK_FALSE(r.strict);
}

TEST_CASE("plane tree enumeration matches Catalan counts") {
  const std::vector<long long> catalan = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_plane_trees(n) == BigInt(catalan[n - 1]));
    std::set<std::vector<int>> seen;
    for_each_plane_tree(n, [&](const std::vector<int>& word) {
      CHECK(static_cast<int>(word.size()) == n);
      int balance = 0;
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        balance += word[i] - 1;
        CHECK(balance >= 0);
      }
      balance += word.back() - 1;
      CHECK(balance == -1);
      seen.insert(word);
    });
    CHECK(static_cast<long long>(seen.size()) == catalan[n - 1]);
  }
}

TEST_CASE("plane tree heights") {
  CHECK(plane_tree_height({0}) == 0);
  CHECK(plane_tree_height({1, 0}) == 1);
  CHECK(plane_tree_height({2, 0, 0}) == 1);
  CHECK(plane_tree_height({1, 1, 0}) == 2);
  CHECK(plane_tree_height({2, 1, 0, 0}) == 2);
  CHECK(plane_tree_height({2, 0, 1, 0}) == 2);
  CHECK(plane_tree_height({3, 0, 2, 0, 0, 0}) == 2);
  CHECK(throws_errc(Errc::precondition, [] { plane_tree_height({0, 0}); }));
  CHECK(throws_errc(Errc::precondition, [] { plane_tree_height({2, 0}); }));
}

TEST_CASE("plane height law for binary offspring") {
  std::map<int, BigRat> binary;
  binary[0] = BigRat(1, 2);
  binary[2] = BigRat(1, 2);

  const auto law3 = plane_height_law(binary, 3);
  CHECK(law3.size() == 1);
  CHECK(law3.at(1) == BigRat(1));

  const auto law5 = plane_height_law(binary, 5);
  CHECK(law5.size() == 1);
  CHECK(law5.at(2) == BigRat(1));

  // Even sizes carry no binary mass.
  CHECK(throws_errc(Errc::precondition, [&] { plane_height_law(binary, 4); }));
}

TEST_CASE("plane height law with uniform offspring weights") {
  std::map<int, BigRat> mu;
  mu[0] = BigRat(1, 3);
  mu[1] = BigRat(1, 3);
  mu[2] = BigRat(1, 3);
  const auto law = plane_height_law(mu, 3);
  CHECK(law.at(1) == BigRat(1, 2));
  CHECK(law.at(2) == BigRat(1, 2));
}

TEST_CASE("labeled law for binary offspring at n = 3") {
  std::map<int, BigRat> binary;
  binary[0] = BigRat(1, 2);
  binary[2] = BigRat(1, 2);
  const auto law = conditioned_labeled_law(binary, 3);
  CHECK(law.size() == 3);
  BigRat total(0);
  for (const auto& [key, mass] : law) {
    CHECK(mass == BigRat(1, 3));
    total += mass;
  }
  CHECK(total == BigRat(1));
  CHECK(law.count("1;0,1,1") == 1);
  CHECK(law.count("2;2,0,2") == 1);
  CHECK(law.count("3;3,3,0") == 1);
}

TEST_CASE("labeled law aggregates to the plane height law") {
  std::map<int, BigRat> mu;
  mu[0] = BigRat(1, 2);
  mu[1] = BigRat(1, 4);
  mu[2] = BigRat(1, 4);
  for (int n = 2; n <= 5; ++n) {
    const auto labeled = conditioned_labeled_law(mu, n);
    std::map<int, BigRat> by_height;
    BigRat total(0);
    for (const auto& [key, mass] : labeled) {
      by_height[parse_tree(key).height()] += mass;
      total += mass;
    }
    CHECK(total == BigRat(1));
    CHECK(by_height == plane_height_law(mu, n));
  }
}

TEST_CASE("rational stochastic comparison") {
  std::map<int, BigRat> low{{1, BigRat(1, 2)}, {2, BigRat(1, 2)}};
  std::map<int, BigRat> high{{1, BigRat(1, 4)}, {2, BigRat(3, 4)}};
  std::map<int, BigRat> cross{{0, BigRat(1, 4)}, {3, BigRat(3, 4)}};

  CHECK(stochastic_compare_rational(high, low).verdict == CompareVerdict::a_dominates);
  CHECK(stochastic_compare_rational(low, high).verdict == CompareVerdict::b_dominates);
  CHECK(stochastic_compare_rational(low, low).verdict == CompareVerdict::equal);
  CHECK(stochastic_compare_rational(low, cross).verdict == CompareVerdict::incomparable);
}
