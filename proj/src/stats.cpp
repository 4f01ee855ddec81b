#include "degseq/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "degseq/errors.hpp"

namespace degseq {

double wilson_upper(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials)
    fail(Errc::out_of_range, "wilson_upper: need 0 <= successes <= trials, trials > 0");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = p + z2 / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return std::min(1.0, (center + spread) / (1 + z2 / n));
}

double chi_square_pvalue(double statistic, double dof) {
  if (!(dof > 0)) fail(Errc::out_of_range, "chi_square_pvalue: dof must be positive");
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

double chi_square_gof_pvalue(const std::vector<std::int64_t>& observed, const std::vector<double>& expected_probs) {
  if (observed.size() != expected_probs.size() || observed.empty())
    fail(Errc::out_of_range, "chi_square_gof_pvalue: size mismatch");
  std::int64_t total = 0;
  for (std::int64_t c : observed) total += c;
  if (total <= 0) fail(Errc::out_of_range, "chi_square_gof_pvalue: no observations");
  double stat = 0;
  int dof = -1;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expect = expected_probs[i] * static_cast<double>(total);
    if (expect == 0) {
      if (observed[i] != 0) return 0.0;  // impossible cell observed
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - expect;
    stat += diff * diff / expect;
    ++dof;
  }
  if (dof <= 0) return 1.0;
  return chi_square_pvalue(stat, dof);
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) fail(Errc::out_of_range, "tv_distance: size mismatch");
  double acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return acc / 2;
}

double one_sided_ks_epsilon(std::int64_t m, std::int64_t n, double alpha) {
  if (m <= 0 || n <= 0 || !(alpha > 0) || !(alpha < 1))
    fail(Errc::out_of_range, "one_sided_ks_epsilon: bad arguments");
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  return std::sqrt(std::log(1.0 / alpha) * (m + n) / (2.0 * mn));
}

std::map<int, double> counts_to_cdf(const std::map<int, std::int64_t>& counts) {
  std::int64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  std::map<int, double> cdf;
  std::int64_t acc = 0;
  for (const auto& [k, c] : counts) {
    acc += c;
    cdf[k] = static_cast<double>(acc) / static_cast<double>(total);
  }
  return cdf;
}

}  // namespace degseq
