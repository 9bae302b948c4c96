#include "pnsat/pn_metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pnsat/generate.hpp"

namespace pnsat {

PolarityGroups polarity_groups(const CnfFormula& f, const Assignment* assignment) {
  const std::size_t nv = static_cast<std::size_t>(f.num_vars) + 1;
  std::vector<std::int64_t> occ(2 * nv, 0);  // raw per-literal tallies

  for (const Clause& c : f.clauses) {
    bool satisfied = false;
    if (assignment != nullptr) {
      for (Lit l : c.lits) {
        if (assignment->is_true(l)) {
          satisfied = true;
          break;
        }
      }
    }
    if (satisfied) continue;
    for (Lit l : c.lits) {
      if (assignment != nullptr && assignment->assigned(l.var())) continue;
      ++occ[l.index()];
    }
  }

  PolarityGroups g;
  g.pos_count.assign(nv, 0);
  g.neg_count.assign(nv, 0);
  g.positive_polarity.assign(nv, Lit{});
  for (int v = 1; v <= f.num_vars; ++v) {
    const Lit pos(v, false);
    const std::int64_t a = occ[pos.index()];
    const std::int64_t b = occ[(~pos).index()];
    g.positive_polarity[v] = a >= b ? pos : ~pos;
    g.pos_count[v] = a >= b ? a : b;
    g.neg_count[v] = a >= b ? b : a;
    g.total_positive += g.pos_count[v];
    g.total_negative += g.neg_count[v];
  }
  return g;
}

std::int64_t pn_product(const CnfFormula& f, const Assignment* assignment) {
  const PolarityGroups g = polarity_groups(f, assignment);
  return g.total_positive * g.total_negative;
}

double predicted_new_pn_product(double total_pos, double total_neg,
                                double pos_freq, double neg_freq,
                                double mean_len) {
  if (total_pos + total_neg <= 0.0)
    throw std::domain_error("predicted_new_pn_product: P + N must be positive");
  if (pos_freq < 0 || neg_freq < 0 || pos_freq > total_pos ||
      neg_freq > total_neg || mean_len < 1.0)
    throw std::invalid_argument("predicted_new_pn_product: arguments out of range");

  const double sum = total_pos + total_neg;
  const double resolved = pos_freq * (mean_len - 1.0);
  return (total_pos - pos_freq - resolved * total_pos / sum) *
         (total_neg - neg_freq - resolved * total_neg / sum);
}

RegressionResult ols_simple(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("ols_simple: mismatched lengths");
  const std::size_t n = xs.size();
  if (n < 3) throw std::invalid_argument("ols_simple: need at least 3 points");

  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (ys[i] - mean_y);
  }
  if (sxx <= 0.0)
    throw std::invalid_argument("ols_simple: degenerate x (zero variance)");

  RegressionResult r;
  r.n_points = static_cast<int>(n);
  r.slope = sxy / sxx;
  r.intercept = mean_y - r.slope * mean_x;

  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ys[i] - (r.intercept + r.slope * xs[i]);
    rss += e * e;
  }
  const double sigma2 = rss / static_cast<double>(n - 2);
  r.slope_stderr = std::sqrt(sigma2 / sxx);
  if (r.slope_stderr > 0.0) r.t_stat = r.slope / r.slope_stderr;
  return r;
}

std::vector<SweepPoint> pn_sweep(int n, int k, const std::vector<int>& m_values,
                                 int seeds_per_point, std::uint64_t seed0) {
  for (std::size_t j = 1; j < m_values.size(); ++j)
    if (m_values[j] <= m_values[j - 1])
      throw std::invalid_argument("pn_sweep: m_values must be strictly increasing");
  if (seeds_per_point < 1)
    throw std::invalid_argument("pn_sweep: need at least one seed per point");

  std::vector<SweepPoint> points;
  points.reserve(m_values.size());
  for (std::size_t j = 0; j < m_values.size(); ++j) {
    double sum = 0;
    for (int i = 0; i < seeds_per_point; ++i) {
      const std::uint64_t seed =
          seed0 + static_cast<std::uint64_t>(j) * seeds_per_point + i;
      const CnfFormula f = generate_ksat(n, m_values[j], k, seed);
      sum += static_cast<double>(pn_product(f));
    }
    points.push_back({m_values[j], sum / seeds_per_point});
  }
  return points;
}

std::string sweep_csv(std::span<const SweepPoint> points) {
  std::ostringstream out;
  out << "m,mean_pn_product\n";
  char buf[64];
  for (const SweepPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%d,%.6f\n", p.num_clauses, p.mean_pn_product);
    out << buf;
  }
  return out.str();
}

std::string regression_csv(const RegressionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%d\n", r.slope,
                r.intercept, r.slope_stderr,
                r.t_stat ? *r.t_stat : std::nan(""), r.n_points);
  return std::string("slope,intercept,stderr,t,n\n") + buf;
}

}  // namespace pnsat
