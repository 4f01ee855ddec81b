#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "degseq/bounds.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/families.hpp"
#include "degseq/stats.hpp"
#include "degseq/weights.hpp"
#include "doctest.h"
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

int count_value(const DegreeSequence& d, int value) {
  int count = 0;
  for (int e : d.entries())
    if (e == value) ++count;
  return count;
}

bool nonincreasing(const std::vector<int>& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("offspring laws are normalized with the declared means") {
  const WeightSequence bin = binary_offspring();
  CHECK(bin.is_probability());
  CHECK(mean_of(bin.w()) == doctest::Approx(1.0));
  CHECK(bin.w()[2] == doctest::Approx(0.5));

  const WeightSequence tern = ternary_offspring();
  CHECK(tern.is_probability());
  CHECK(mean_of(tern.w()) == doctest::Approx(1.0));
  CHECK(tern.w()[3] == doctest::Approx(1.0 / 3.0));

  const WeightSequence quat = quaternary_offspring();
  CHECK(quat.is_probability());
  CHECK(mean_of(quat.w()) == doctest::Approx(1.0));
  CHECK(quat.w()[4] == doctest::Approx(0.25));

  const WeightSequence two = two_parameter_offspring(0.3, 0.3);
  CHECK(two.is_probability());
  CHECK(two.w()[0] == doctest::Approx(0.21));
  CHECK(two.w()[1] == doctest::Approx(0.49));
  CHECK(two.w()[2] == doctest::Approx(0.3));
  CHECK(mean_of(two.w()) == doctest::Approx(1.09));
  CHECK(two_parameter_unary_share(0.3, 0.3) == doctest::Approx(0.4939539).epsilon(1e-5));
  // Shrinking either parameter pushes the settled trees toward unary chains.
  CHECK(two_parameter_unary_share(1e-4, 0.3) > two_parameter_unary_share(0.3, 0.3));
  CHECK(two_parameter_unary_share(0.3, 1e-4) > two_parameter_unary_share(0.3, 0.3));
  CHECK(throws_errc(Errc::out_of_range, [] { two_parameter_offspring(0.0, 0.5); }));
  CHECK(throws_errc(Errc::out_of_range, [] { two_parameter_offspring(0.5, 1.0); }));

  const WeightSequence pl = truncated_powerlaw_offspring(50);
  CHECK(pl.is_probability());
  CHECK(pl.max_degree() == 50);
  CHECK(pl.w()[1] * boost::math::zeta(1.5) == doctest::Approx(1.0));
  CHECK(pl.w()[1] / pl.w()[2] == doctest::Approx(std::pow(2.0, 2.5)));
  CHECK(mean_of(pl.w()) < 1.0);
  CHECK(mean_of(truncated_powerlaw_offspring(800).w()) > mean_of(truncated_powerlaw_offspring(200).w()));
  REQUIRE(pl.tail_mass().has_value());
  CHECK(*pl.tail_mass() > 0.0);
  CHECK(*truncated_powerlaw_offspring(200).tail_mass() < *pl.tail_mass());
  CHECK(throws_errc(Errc::out_of_range, [] { truncated_powerlaw_offspring(0); }));
  CHECK(throws_errc(Errc::out_of_range, [] { truncated_powerlaw_offspring(10, 2.0); }));

  const WeightSequence st = stretched_exponential_offspring(100);
  CHECK(st.is_probability());
  CHECK(mean_of(st.w()) == doctest::Approx(0.6));
  CHECK(st.w()[4] / st.w()[1] == doctest::Approx(std::exp(-1.0)));
  CHECK(throws_errc(Errc::out_of_range, [] { stretched_exponential_offspring(100, 10.0); }));
}

TEST_CASE("degree fixtures carry the advertised profiles") {
  const DegreeSequence bin = binary_degrees(401);
  CHECK(bin.n() == 401);
  CHECK(count_value(bin, 2) == 200);
  CHECK(count_value(bin, 0) == 201);
  CHECK(bin.num_degree_one() == 0);
  CHECK(is_compressed(bin));
  CHECK(throws_errc(Errc::precondition, [] { binary_degrees(400); }));

  const DegreeSequence heavy = star_heavy_degrees(401);
  CHECK(heavy.entries()[0] == 200);
  CHECK(count_value(heavy, 2) == 100);
  CHECK(count_value(heavy, 0) == 300);
  CHECK(heavy.num_degree_one() == 0);
  const DegreeSequence heavy2k = star_heavy_degrees(2000);
  CHECK(heavy2k.entries()[0] == 1000);
  CHECK(count_value(heavy2k, 2) == 499);
  CHECK(heavy2k.num_degree_one() == 1);
  CHECK(throws_errc(Errc::out_of_range, [] { star_heavy_degrees(1); }));

  const DegreeSequence pl = powerlaw_degrees(2000);
  CHECK(pl.n() == 2000);
  CHECK(is_compressed(pl));
  CHECK(nonincreasing(pl.entries()));
  CHECK(pl.entries()[0] >= 60);
  CHECK(pl.entries()[0] <= 200);
  CHECK(pl.num_leaves() >= 850);
  CHECK(pl.num_leaves() <= 1100);
  CHECK(pl.num_degree_one() >= 650);
  CHECK(pl.num_degree_one() <= 880);
  CHECK(is_compressed(powerlaw_degrees(200)));
  CHECK(throws_errc(Errc::out_of_range, [] { powerlaw_degrees(1); }));

  CHECK(path_degrees(5).entries() == std::vector<int>{1, 1, 1, 1, 0});
  CHECK(star_degrees(6).entries() == std::vector<int>{5, 0, 0, 0, 0, 0});
}

TEST_CASE("tail experiments measure survival on the sqrt scale") {
  const EmpiricalTail t = tail_experiment(path_degrees(9), 400, default_grid(), 7);
  CHECK(t.n == 9);
  CHECK(t.samples == 400);
  CHECK(t.seed == 7);
  REQUIRE(t.grid.size() == 16);
  CHECK(t.grid.front() == doctest::Approx(0.5));
  CHECK(t.grid.back() == doctest::Approx(8.0));
  // The path has height 8 always: survival is an exact step at 8 / 3.
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    const double want = t.grid[i] < 8.0 / 3.0 ? 1.0 : 0.0;
    CHECK(t.survival[i] == doctest::Approx(want));
    CHECK(t.upper[i] >= t.survival[i]);
    CHECK(t.upper[i] <= 1.0);
    if (i > 0) CHECK(t.survival[i] <= t.survival[i - 1]);
  }
  const EmpiricalTail again = tail_experiment(path_degrees(9), 400, default_grid(), 7);
  CHECK(again.exceed == t.exceed);

  const EmpiricalTail star = tail_experiment(star_degrees(40), 100, {0.5, 1.0}, 3);
  CHECK(star.survival == std::vector<double>{0.0, 0.0});

  const EmpiricalTail sorted = tail_experiment(path_degrees(4), 10, {2.0, 0.5}, 1);
  CHECK(sorted.grid == std::vector<double>{0.5, 2.0});
  CHECK(tail_experiment(path_degrees(4), 10, {}, 1).grid.size() == 16);
  CHECK(throws_errc(Errc::out_of_range, [] { tail_experiment(path_degrees(4), 0, {}, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { tail_experiment(path_degrees(4), 10, {-1.0}, 1); }));
}

TEST_CASE("weight sources reduce to their tilted offspring laws") {
  const WeightSequence scaled({2.0, 0.0, 2.0}, 1.0);
  const EmpiricalTail a = tail_experiment_weights(scaled, 21, 300, default_grid(), 99);
  const EmpiricalTail b = tail_experiment_offspring(binary_offspring(), 21, 300, default_grid(), 99);
  CHECK(a.exceed == b.exceed);
  CHECK(a.survival == b.survival);

  CHECK(throws_errc(Errc::bad_weights,
                    [&] { tail_experiment_offspring(scaled, 9, 10, {}, 1); }));

  const EmpiricalTail bin = tail_experiment_offspring(binary_offspring(), 101, 600, default_grid(), 12);
  CHECK(bin.survival[5] < 0.1);  // grid point x = 3
}

TEST_CASE("gaussian ceilings hold across the grid") {
  const DegreeSequence d = binary_degrees(401);
  const SigmaStats s = sigma_stats(d);
  CHECK(s.delta == doctest::Approx(1.0));
  const EmpiricalTail tail = tail_experiment(d, 600, default_grid(), 21);
  const BoundVerdict v = check_gaussian_bound(tail, s.delta);
  CHECK(v.pass);
  REQUIRE(v.points.size() == 16);
  for (const BoundPoint& pt : v.points) {
    CHECK(pt.holds);
    CHECK(pt.applicable);
    CHECK(pt.bound > 1.0);  // at desk scale the ceiling is vacuous everywhere
    CHECK(pt.theorem_x == doctest::Approx(pt.x));
  }

  std::vector<int> entries;
  for (int i = 0; i < 10; ++i) entries.push_back(2);
  for (int i = 0; i < 80; ++i) entries.push_back(1);
  for (int i = 0; i < 11; ++i) entries.push_back(0);
  const DegreeSequence stretched(entries);
  const SigmaStats s2 = sigma_stats(stretched);
  CHECK(s2.delta == doctest::Approx(21.0 / 101.0));
  const BoundVerdict v2 = check_gaussian_bound(tail_experiment(stretched, 400, default_grid(), 22), s2.delta);
  CHECK(v2.pass);

  CHECK(throws_errc(Errc::out_of_range, [&] { check_gaussian_bound(tail, 0.0); }));
  CHECK(throws_errc(Errc::out_of_range, [&] { check_gaussian_bound(tail, 1.2); }));
}

TEST_CASE("log-sigma ceilings apply only past the rescaled threshold") {
  const DegreeSequence d = powerlaw_degrees(400);
  const SigmaStats s = sigma_stats(d);
  const EmpiricalTail tail = tail_experiment(d, 300, default_grid(), 31);
  const BoundVerdict v = check_logsigma_bound(tail, s.sigma_d, s.sigma_prime);
  CHECK(v.pass);
  const double log_scale = std::log(s.sigma_prime + 1.0);
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    CHECK_FALSE(v.points[i].applicable);
    CHECK(v.points[i].holds);
    CHECK(v.points[i].theorem_x == doctest::Approx(tail.grid[i] * s.sigma_d / log_scale));
  }
  CHECK(v.points.back().theorem_x < 16384.0);

  // Synthetic scale large enough to clear the threshold, to exercise the
  // real comparisons.
  EmpiricalTail t;
  t.n = 4;
  t.samples = 1000000;
  t.grid = {1.0, 2.0};
  t.exceed = {0, 0};
  t.survival = {0.0, 0.0};
  t.upper = {1e-6, 1e-6};
  const double sigma_prime = std::exp(1.0) - 1.0;  // log scale exactly 1
  const BoundVerdict va = check_logsigma_bound(t, 60000.0, sigma_prime);
  CHECK(va.pass);
  CHECK(va.points[0].applicable);
  CHECK(va.points[1].applicable);
  CHECK(va.points[0].theorem_x == doctest::Approx(60000.0));
  CHECK(va.points[0].bound == doctest::Approx(4.0 * std::exp(-60000.0 / 16384.0)));
  CHECK(va.points[0].bound < 1.0);

  t.upper = {0.5, 1e-6};
  const BoundVerdict vb = check_logsigma_bound(t, 60000.0, sigma_prime);
  CHECK_FALSE(vb.pass);
  CHECK_FALSE(vb.points[0].holds);
  CHECK(vb.points[1].holds);

  CHECK(throws_errc(Errc::sigma_zero, [&] { check_logsigma_bound(t, 0.0, 1.0); }));
  CHECK(throws_errc(Errc::out_of_range, [&] { check_logsigma_bound(t, 1.0, 0.0); }));
}

TEST_CASE("attachment distances decay geometrically") {
  const DegreeSequence d7(std::vector<int>{2, 2, 2, 0, 0, 0, 0});
  const ExactEvent exact = attachment_probability_exact(d7, 1, 2, 2);
  CHECK(exact.total == 90);
  CHECK(exact.probability <= std::pow(1.0 - 1.0 / 6.0, 2) + 1e-12);

  const EventBound trivial = geometric_attachment_experiment(d7, 0, 2, 2, 60, 5);
  CHECK(trivial.bound == doctest::Approx(1.0));
  CHECK(trivial.holds);

  const ExactEvent far = attachment_probability_exact(d7, 0, 3, 7);
  CHECK(far.favorable == 0);
  CHECK(far.probability == 0.0);

  const EventBound mc = geometric_attachment_experiment(d7, 1, 2, 2, 4000, 11);
  CHECK(mc.samples == 4000);
  CHECK(mc.estimate == doctest::Approx(static_cast<double>(mc.exceed) / 4000.0));
  CHECK(std::abs(mc.estimate - exact.probability) < 0.04);
  CHECK(mc.holds);
  const EventBound mc2 = geometric_attachment_experiment(d7, 1, 2, 2, 4000, 11);
  CHECK(mc2.exceed == mc.exceed);

  int combos = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const DegreeSequence& d : testutil::all_compressed(n)) {
      const int n0 = d.num_leaves();
      if (n0 >= d.n()) continue;
      for (int x = 0; x <= n0 - 1; ++x)
        for (int y = x; y <= n0 - 1; ++y)
          for (int b = 1; b <= 3; ++b) {
            const ExactEvent e = attachment_probability_exact(d, x, y, b);
            const double bound = std::pow(1.0 - static_cast<double>(x) / (n - 1), b);
            CHECK(e.probability <= bound + 1e-12);
            ++combos;
          }
    }
  }
  CHECK(combos > 100);

  CHECK(throws_errc(Errc::parameter_order, [&] { attachment_probability_exact(d7, 2, 1, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [&] { attachment_probability_exact(d7, 0, 4, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [&] { attachment_probability_exact(d7, 0, 1, 0); }));
  CHECK(throws_errc(Errc::not_compressed, [] {
    attachment_probability_exact(DegreeSequence(std::vector<int>{0, 2, 1, 0}), 0, 1, 1);
  }));
}

TEST_CASE("first segment heights stay below their ceiling") {
  const DegreeSequence d = powerlaw_degrees(300);
  const EventBound tight = first_segment_experiment(d, 8.0, 600, 13);
  CHECK(tight.bound > 0.0);
  CHECK(tight.bound < 1.0);
  CHECK(tight.holds);
  const EventBound loose = first_segment_experiment(d, 1.0, 200, 13);
  CHECK(loose.bound >= 1.0);
  CHECK(loose.holds);
  const EventBound again = first_segment_experiment(d, 8.0, 600, 13);
  CHECK(again.exceed == tight.exceed);

  CHECK(throws_errc(Errc::out_of_range, [&] { first_segment_experiment(d, 0.5, 10, 1); }));
  CHECK(throws_errc(Errc::sigma_zero, [] { first_segment_experiment(path_degrees(6), 1.0, 10, 1); }));
  CHECK(throws_errc(Errc::not_compressed, [] {
    first_segment_experiment(DegreeSequence(std::vector<int>{0, 2, 1, 0}), 1.0, 10, 1);
  }));
  CHECK(throws_errc(Errc::out_of_range, [&] { first_segment_experiment(d, 1.0, 0, 1); }));
}

TEST_CASE("prefix height increments respect the window ceiling") {
  int combos = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const DegreeSequence& d : testutil::all_compressed(n)) {
      if (d.num_degree_one() > 0) continue;
      const int n0 = d.num_leaves();
      if (n0 >= d.n()) continue;
      for (int x = 0; x <= n0 - 1; ++x)
        for (int y = x; y <= n0 - 1; ++y)
          for (int b = 1; b <= 3; ++b) {
            const ExactEvent e = height_increment_exact(d, x, y, b);
            const double bound = height_increment_bound(n, x, y, b, 0.5);
            CHECK(e.probability <= bound + 1e-12);
            if (x == y) CHECK(e.probability == 0.0);
            ++combos;
          }
    }
  }
  CHECK(combos > 150);

  const DegreeSequence d41 = binary_degrees(41);
  const EventBound mc = height_increment_experiment(d41, 19, 20, 4, 0.5, 900, 17);
  CHECK(mc.bound == doctest::Approx(height_increment_bound(41, 19, 20, 4, 0.5)));
  CHECK(mc.holds);

  CHECK(throws_errc(Errc::precondition, [] {
    height_increment_experiment(DegreeSequence(std::vector<int>{2, 1, 1, 0, 0}), 0, 1, 1, 0.5, 10, 1);
  }));
  CHECK(throws_errc(Errc::parameter_order,
                    [&] { height_increment_experiment(d41, 3, 3, 1, 0.5, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { height_increment_bound(10, 1, 2, 3, 0.0); }));
  CHECK(throws_errc(Errc::out_of_range, [] { height_increment_bound(10, 1, 2, 3, 1.0); }));
  CHECK(throws_errc(Errc::parameter_order, [] { height_increment_bound(10, 3, 2, 3, 0.5); }));
}

TEST_CASE("exponential clock sums rarely fall below half their mean") {
  const double es = exp_sum_mean({1.7}, 0.9);
  CHECK(es == doctest::Approx(1.7 * (1.0 - std::exp(-1.53))));
  const EventBound single = exp_sum_experiment({1.7}, 0.9, 3000, 17);
  // With one clock the event is exactly a miss: P = e^{-xt}.
  CHECK(std::abs(single.estimate - std::exp(-1.53)) < 0.025);
  CHECK(single.bound == doctest::Approx(std::exp(-0.9 * es / 4.0)));
  CHECK(single.holds);

  const EventBound crowd = exp_sum_experiment(std::vector<double>(30, 1.0), 1.0, 2500, 19);
  CHECK(crowd.holds);
  CHECK(crowd.estimate < 0.01);

  const EventBound vac = exp_sum_experiment({2.0, 5.0}, 1e-12, 64, 3);
  CHECK(vac.bound == 1.0);
  CHECK(vac.estimate == 1.0);
  CHECK(vac.holds);

  CHECK(throws_errc(Errc::out_of_range, [] { exp_sum_experiment({}, 1.0, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { exp_sum_experiment({-1.0}, 1.0, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { exp_sum_experiment({1.0}, 0.0, 10, 1); }));
}

TEST_CASE("height moments scale with the square root") {
  // Ratios converge with O(1/sqrt(n)) corrections, so small sizes drift;
  // past n = 200 a 20% band is comfortable for both moments.
  const std::vector<int> sizes = {201, 401, 801};
  for (double r : {1.0, 2.0}) {
    const MomentTable table = moment_scaling(binary_offspring(), r, sizes, 2500, 23);
    CHECK_FALSE(table.degenerate_support);
    REQUIRE(table.rows.size() == 3);
    double lo = table.rows[0].ratio;
    double hi = table.rows[0].ratio;
    for (const ScalingRow& row : table.rows) {
      CHECK(row.ratio > 0.0);
      CHECK(row.std_error > 0.0);
      CHECK(row.std_error < 0.1);
      lo = std::min(lo, row.ratio);
      hi = std::max(hi, row.ratio);
    }
    CHECK(hi / lo <= 1.2);
  }

  const WeightSequence path_law(std::vector<double>{0.4, 0.6});
  const MomentTable forced = moment_scaling(path_law, 1.0, {5, 9}, 60, 29);
  CHECK(forced.degenerate_support);
  CHECK(forced.rows[0].ratio == doctest::Approx(4.0 / std::sqrt(5.0)));
  CHECK(forced.rows[1].ratio == doctest::Approx(8.0 / 3.0));
  CHECK(forced.rows[0].std_error < 1e-6);

  CHECK(throws_errc(Errc::out_of_range, [] { moment_scaling(binary_offspring(), 0.0, {5}, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { moment_scaling(binary_offspring(), 1.0, {}, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range, [] { moment_scaling(binary_offspring(), 1.0, {5}, 1, 1); }));
}

TEST_CASE("fat tails drag the height ratio down") {
  const std::function<WeightSequence(int)> powerlaw_family = [](int n) {
    return truncated_powerlaw_offspring(n);
  };
  const std::vector<ScalingRow> rows = vanishing_height_experiment(powerlaw_family, {64, 256, 1024}, 600, 31);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio > rows[1].ratio);
  CHECK(rows[1].ratio > rows[2].ratio);
  CHECK(rows[0].ratio - rows[2].ratio > 0.1);

  const std::function<WeightSequence(int)> binary_family = [](int) { return binary_offspring(); };
  const std::vector<ScalingRow> ctrl = vanishing_height_experiment(binary_family, {201, 401, 1025}, 600, 37);
  double lo = ctrl[0].ratio;
  double hi = ctrl[0].ratio;
  for (const ScalingRow& row : ctrl) {
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
  }
  CHECK(hi / lo <= 1.2);

  const std::function<WeightSequence(int)> stretched_family = [](int n) {
    return stretched_exponential_offspring(n);
  };
  const std::vector<ScalingRow> sub = vanishing_height_experiment(stretched_family, {80, 320}, 400, 41);
  CHECK(sub[0].ratio > sub[1].ratio);

  const std::function<DegreeSequence(int)> star_family = [](int n) { return star_degrees(n); };
  const std::vector<ScalingRow> stars = vanishing_height_experiment(star_family, {9, 36, 144}, 50, 43);
  for (const ScalingRow& row : stars) {
    CHECK(row.ratio == doctest::Approx(1.0 / std::sqrt(static_cast<double>(row.n))));
    CHECK(row.std_error < 1e-9);
  }
  CHECK(stars[0].ratio > stars[1].ratio);
  CHECK(stars[1].ratio > stars[2].ratio);

  const std::function<DegreeSequence(int)> shifted = [](int n) { return star_degrees(n + 1); };
  CHECK(throws_errc(Errc::precondition,
                    [&] { vanishing_height_experiment(shifted, {5}, 10, 1); }));
  CHECK(throws_errc(Errc::out_of_range,
                    [&] { vanishing_height_experiment(star_family, {}, 10, 1); }));
}
