#include "nlicp/stat_tests.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "nlicp/special.hpp"

namespace nlicp {

namespace {

double clamp01(double p) { return std::max(0.0, std::min(1.0, p)); }

bool has_ties(std::vector<double> pooled) {
  std::sort(pooled.begin(), pooled.end());
  return std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end();
}

/// P(U <= u) for the exact Mann-Whitney null with sample sizes m, n.
/// Counts rank subsets of size m by subset-sum dynamic programming.
double exact_mann_whitney_cdf(int u, int m, int n) {
  if (u < 0) return 0.0;
  if (u >= m * n) return 1.0;
  const int N = m + n;
  const int max_sum = m * N;  // loose bound on a rank-sum of m ranks
  std::vector<std::vector<double>> count(m + 1, std::vector<double>(max_sum + 1, 0.0));
  count[0][0] = 1.0;
  for (int r = 1; r <= N; ++r) {
    for (int j = std::min(r, m); j >= 1; --j) {
      for (int s = max_sum; s >= r; --s) count[j][s] += count[j - 1][s - r];
    }
  }
  const int offset = m * (m + 1) / 2;  // U = rank_sum - offset
  double total = 0.0, tail = 0.0;
  for (int s = 0; s <= max_sum; ++s) {
    total += count[m][s];
    if (s - offset <= u) tail += count[m][s];
  }
  return tail / total;
}

double two_sided_from_tails(double lower, double upper) {
  return clamp01(2.0 * std::min(lower, upper));
}

}  // namespace

std::vector<double> midranks(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return values[i] < values[j]; });
  std::vector<double> ranks(n);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * (i + j) + 1.0;
    for (int k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

TestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                             Alternative alternative) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("wilcoxon_rank_sum: both samples must be nonempty");
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = midranks(pooled);
  double rank_sum_a = 0.0;
  for (int i = 0; i < m; ++i) rank_sum_a += ranks[i];
  const double u = rank_sum_a - 0.5 * m * (m + 1);

  TestResult result;
  result.statistic = u;
  result.alternative = alternative;

  const bool ties = has_ties(pooled);
  if (m + n <= 20 && !ties) {
    result.method = "wilcoxon_rank_sum_exact";
    const int ui = static_cast<int>(std::llround(u));
    const double lower = exact_mann_whitney_cdf(ui, m, n);
    const double upper = 1.0 - exact_mann_whitney_cdf(ui - 1, m, n);
    switch (alternative) {
      case Alternative::less:
        result.p_value = lower;
        break;
      case Alternative::greater:
        result.p_value = upper;
        break;
      case Alternative::two_sided:
        result.p_value = two_sided_from_tails(lower, upper);
        break;
    }
    return result;
  }

  result.method = "wilcoxon_rank_sum_normal";
  const double N = m + n;
  // tie correction over pooled midrank groups
  std::vector<double> sorted(pooled);
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double var =
      (static_cast<double>(m) * n / 12.0) * ((N + 1.0) - tie_term / (N * (N - 1.0)));
  const double centered = u - 0.5 * m * n;
  if (var <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double sd = std::sqrt(var);
  auto z_of = [&](double correction) { return (centered - correction) / sd; };
  switch (alternative) {
    case Alternative::greater:
      result.p_value = clamp01(1.0 - normal_cdf(z_of(0.5)));
      break;
    case Alternative::less:
      result.p_value = clamp01(normal_cdf(z_of(-0.5)));
      break;
    case Alternative::two_sided: {
      const double sign = centered > 0 ? 1.0 : (centered < 0 ? -1.0 : 0.0);
      const double z = z_of(sign * 0.5);
      result.p_value = two_sided_from_tails(normal_cdf(z), 1.0 - normal_cdf(z));
      break;
    }
  }
  return result;
}

TestResult wilcoxon_signed_rank(const std::vector<double>& d, Alternative alternative) {
  std::vector<double> nz;
  for (double v : d)
    if (v != 0.0) nz.push_back(v);
  TestResult result;
  result.alternative = alternative;
  if (nz.empty()) {
    result.method = "wilcoxon_signed_rank";
    result.p_value = 1.0;
    return result;
  }
  const int n = static_cast<int>(nz.size());
  std::vector<double> abs_vals(n);
  for (int i = 0; i < n; ++i) abs_vals[i] = std::fabs(nz[i]);
  const std::vector<double> ranks = midranks(abs_vals);
  double v_plus = 0.0;
  for (int i = 0; i < n; ++i)
    if (nz[i] > 0) v_plus += ranks[i];
  result.statistic = v_plus;

  const bool ties = has_ties(abs_vals);
  const bool had_zeros = nz.size() != d.size();
  if (n <= 20 && !ties && !had_zeros) {
    result.method = "wilcoxon_signed_rank_exact";
    // distribution of V over all 2^n sign patterns, by subset-sum counting
    const int max_v = n * (n + 1) / 2;
    std::vector<double> count(max_v + 1, 0.0);
    count[0] = 1.0;
    for (int r = 1; r <= n; ++r) {
      for (int s = max_v; s >= r; --s) count[s] += count[s - r];
    }
    const double total = std::pow(2.0, n);
    const int vi = static_cast<int>(std::llround(v_plus));
    double lower = 0.0, upper = 0.0;
    for (int s = 0; s <= max_v; ++s) {
      if (s <= vi) lower += count[s];
      if (s >= vi) upper += count[s];
    }
    lower /= total;
    upper /= total;
    switch (alternative) {
      case Alternative::less:
        result.p_value = lower;
        break;
      case Alternative::greater:
        result.p_value = upper;
        break;
      case Alternative::two_sided:
        result.p_value = two_sided_from_tails(lower, upper);
        break;
    }
    return result;
  }

  result.method = "wilcoxon_signed_rank_normal";
  std::vector<double> sorted(abs_vals);
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double mean = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
  if (var <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double sd = std::sqrt(var);
  const double centered = v_plus - mean;
  auto z_of = [&](double correction) { return (centered - correction) / sd; };
  switch (alternative) {
    case Alternative::greater:
      result.p_value = clamp01(1.0 - normal_cdf(z_of(0.5)));
      break;
    case Alternative::less:
      result.p_value = clamp01(normal_cdf(z_of(-0.5)));
      break;
    case Alternative::two_sided: {
      const double sign = centered > 0 ? 1.0 : (centered < 0 ? -1.0 : 0.0);
      const double z = z_of(sign * 0.5);
      result.p_value = two_sided_from_tails(normal_cdf(z), 1.0 - normal_cdf(z));
      break;
    }
  }
  return result;
}

TestResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: both samples must be nonempty");
  std::vector<double> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double m = static_cast<double>(sa.size());
  const double n = static_cast<double>(sb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    d = std::max(d, std::fabs(i / m - j / n));
  }
  TestResult result;
  result.method = "ks_two_sample";
  result.statistic = d;
  result.alternative = Alternative::two_sided;
  const double n_eff = m * n / (m + n);
  result.p_value = kolmogorov_sf(std::sqrt(n_eff) * d);
  return result;
}

TestResult levene(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw std::invalid_argument("levene: need >= 2 groups");
  for (const auto& g : groups)
    if (g.size() < 2) throw std::invalid_argument("levene: each group needs >= 2 points");
  const int k = static_cast<int>(groups.size());
  int total = 0;
  std::vector<std::vector<double>> z(groups.size());
  for (int g = 0; g < k; ++g) {
    std::vector<double> sorted(groups[g]);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median =
        m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    for (double v : groups[g]) z[g].push_back(std::fabs(v - median));
    total += static_cast<int>(m);
  }
  double grand = 0.0;
  std::vector<double> group_mean(k, 0.0);
  for (int g = 0; g < k; ++g) {
    for (double v : z[g]) group_mean[g] += v;
    grand += group_mean[g];
    group_mean[g] /= static_cast<double>(z[g].size());
  }
  grand /= static_cast<double>(total);
  double between = 0.0, within = 0.0;
  for (int g = 0; g < k; ++g) {
    const double ng = static_cast<double>(z[g].size());
    between += ng * (group_mean[g] - grand) * (group_mean[g] - grand);
    for (double v : z[g]) within += (v - group_mean[g]) * (v - group_mean[g]);
  }
  TestResult result;
  result.method = "levene_brown_forsythe";
  result.alternative = Alternative::two_sided;
  const double df1 = k - 1.0;
  const double df2 = total - k;
  if (between == 0.0) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  if (within == 0.0) {
    result.statistic = std::numeric_limits<double>::infinity();
    result.p_value = 0.0;
    result.warning = true;
    return result;
  }
  result.statistic = (between / df1) / (within / df2);
  result.p_value = f_sf(result.statistic, df1, df2);
  return result;
}

TestResult fisher_exact_2x2(const int table[2][2], Alternative alternative) {
  const int a = table[0][0], b = table[0][1], c = table[1][0], d = table[1][1];
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw std::invalid_argument("fisher_exact_2x2: counts must be nonnegative");
  const int r1 = a + b, c1 = a + c, N = a + b + c + d;
  if (N == 0) throw std::invalid_argument("fisher_exact_2x2: need at least one positive count");

  const int lo = std::max(0, c1 - (N - r1));
  const int hi = std::min(r1, c1);
  auto log_pmf = [&](int x) {
    return log_binom(r1, x) + log_binom(N - r1, c1 - x) - log_binom(N, c1);
  };
  const double lp_obs = log_pmf(a);

  TestResult result;
  result.method = "fisher_exact";
  result.alternative = alternative;
  result.statistic = static_cast<double>(a);

  double p = 0.0;
  switch (alternative) {
    case Alternative::greater:
      for (int x = a; x <= hi; ++x) p += std::exp(log_pmf(x));
      break;
    case Alternative::less:
      for (int x = lo; x <= a; ++x) p += std::exp(log_pmf(x));
      break;
    case Alternative::two_sided: {
      const double cutoff = lp_obs + std::log1p(1e-7);
      for (int x = lo; x <= hi; ++x) {
        const double lp = log_pmf(x);
        if (lp <= cutoff) p += std::exp(lp);
      }
      break;
    }
  }
  result.p_value = clamp01(p);
  return result;
}

TestResult two_proportion_test(int k1, int n1, int k2, int n2, Alternative alternative) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("two_proportion_test: n must be >= 1");
  if (k1 < 0 || k1 > n1 || k2 < 0 || k2 > n2)
    throw std::invalid_argument("two_proportion_test: need 0 <= k <= n");
  const double p_pool = static_cast<double>(k1 + k2) / (n1 + n2);
  const double delta = static_cast<double>(k1) / n1 - static_cast<double>(k2) / n2;
  const double yates = std::min(0.5, std::fabs(delta) / (1.0 / n1 + 1.0 / n2));

  const double obs[2][2] = {{static_cast<double>(k1), static_cast<double>(n1 - k1)},
                            {static_cast<double>(k2), static_cast<double>(n2 - k2)}};
  const double expd[2][2] = {{n1 * p_pool, n1 * (1.0 - p_pool)},
                             {n2 * p_pool, n2 * (1.0 - p_pool)}};
  double stat = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (expd[i][j] <= 0.0) continue;  // degenerate pooled proportion, obs is 0 too
      const double dev = std::max(0.0, std::fabs(obs[i][j] - expd[i][j]) - yates);
      stat += dev * dev / expd[i][j];
    }
  }

  TestResult result;
  result.method = "two_proportion_chisq";
  result.alternative = alternative;
  result.statistic = stat;
  if (alternative == Alternative::two_sided) {
    result.p_value = chi_squared_sf(stat, 1.0);
  } else {
    const double sign = delta > 0 ? 1.0 : (delta < 0 ? -1.0 : 0.0);
    const double z = sign * std::sqrt(stat);
    result.p_value =
        alternative == Alternative::greater ? clamp01(1.0 - normal_cdf(z)) : clamp01(normal_cdf(z));
  }
  return result;
}

TestResult f_test_accuracy(const std::vector<double>& err_restricted,
                           const std::vector<double>& err_full) {
  if (err_restricted.size() != err_full.size() || err_restricted.size() < 3)
    throw std::invalid_argument("f_test_accuracy: need equal lengths >= 3");
  const double m = static_cast<double>(err_full.size());
  const double sum_r = std::accumulate(err_restricted.begin(), err_restricted.end(), 0.0);
  const double sum_f = std::accumulate(err_full.begin(), err_full.end(), 0.0);
  TestResult result;
  result.method = "f_test_accuracy";
  result.alternative = Alternative::greater;
  if (sum_f <= 0.0) {
    result.statistic = std::numeric_limits<double>::infinity();
    result.p_value = 0.0;
    result.warning = true;
    return result;
  }
  result.statistic = sum_r / sum_f;
  result.p_value = f_sf(result.statistic, m, m);
  return result;
}

}  // namespace nlicp
