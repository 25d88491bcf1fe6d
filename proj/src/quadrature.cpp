#include "ghermite/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ghermite {

std::string to_string(Measure m) {
  switch (m) {
    case Measure::hermite_mu: return "hermite_mu";
    case Measure::alpha_mu: return "alpha_mu";
    case Measure::jacobi: return "jacobi";
  }
  return "unknown";
}

TridiagonalEigen symmetric_tridiagonal_eigen(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (off.size() != n - 1) throw std::invalid_argument("off-diagonal must have size n - 1");
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = off(i);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw EigenError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = r = std::hypot(f, g);
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.resize(n);
  out.first_row.resize(n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = d[order[k]];
    out.first_row(k) = z[order[k]];
  }
  return out;
}

namespace {

struct RecurrenceValues {
  double sum_sq = 0.0;  // sum_{k<N} p_k(t)^2, p_0 = 1
  double q = 0.0;       // unnormalized p_N(t)
  double dq = 0.0;
};

RecurrenceValues run_recurrence(const Eigen::VectorXd& a, const Eigen::VectorXd& sb, double t) {
  const int n = static_cast<int>(a.size());
  double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0;
  RecurrenceValues r;
  r.sum_sq = 1.0;
  for (int k = 0; k < n; ++k) {
    const double back = k > 0 ? sb(k - 1) : 0.0;
    const double q = (t - a(k)) * p - back * p_prev;
    const double dq = p + (t - a(k)) * dp - back * dp_prev;
    if (k == n - 1) {
      r.q = q;
      r.dq = dq;
      break;
    }
    p_prev = p;
    dp_prev = dp;
    p = q / sb(k);
    dp = dq / sb(k);
    r.sum_sq += p * p;
  }
  return r;
}

}  // namespace

QuadratureRule gauss_from_recurrence(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mass,
                                     Measure measure) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("quadrature size must be positive");
  if (b.size() != n - 1) throw std::invalid_argument("recurrence needs N - 1 off-diagonal terms");
  const Eigen::VectorXd sb = b.cwiseSqrt();
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(a, sb);

  QuadratureRule rule;
  rule.measure = measure;
  rule.exactness_degree = 2 * n - 1;
  rule.nodes = eig.values;
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = rule.nodes(i);
    for (int it = 0; it < 2; ++it) {
      const RecurrenceValues rv = run_recurrence(a, sb, t);
      if (rv.dq == 0.0) break;
      const double step = rv.q / rv.dq;
      // Only accept corrections that look like refinements, never jumps to
      // a neighbouring root.
      if (!(std::abs(step) < 1e-6 * (1.0 + std::abs(t)))) break;
      t -= step;
    }
    rule.nodes(i) = t;
    rule.weights(i) = mass / run_recurrence(a, sb, t).sum_sq;
  }
  for (int i = 0; i < n; ++i) {
    if (!(rule.weights(i) > 0.0) || !std::isfinite(rule.nodes(i)))
      throw EigenError("quadrature construction produced an invalid weight");
    if (i > 0 && !(rule.nodes(i) > rule.nodes(i - 1)))
      throw EigenError("quadrature nodes are not strictly increasing");
  }
  return rule;
}

QuadratureRule gauss_hermite_mu(const MuParam& mu, int n) {
  mu.require_numeric();
  if (n < 1) throw std::invalid_argument("quadrature size must be positive");
  const double m = mu.value();
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) b(k - 1) = (k + 2.0 * m * theta(k)) / 2.0;
  QuadratureRule rule = gauss_from_recurrence(a, b, std::tgamma(m + 0.5), Measure::hermite_mu);
  // Enforce exact mirror symmetry.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes(j) - rule.nodes(i));
    const double w = 0.5 * (rule.weights(j) + rule.weights(i));
    rule.nodes(i) = -x;
    rule.nodes(j) = x;
    rule.weights(i) = rule.weights(j) = w;
  }
  if (n % 2) rule.nodes(n / 2) = 0.0;
  return rule;
}

QuadratureRule gauss_jacobi(double a, double b, int n) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Jacobi exponents must exceed -1");
  if (n < 1) throw std::invalid_argument("quadrature size must be positive");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n - 1);
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    if (k == 1) {
      off(0) = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * k + ab;
      off(k - 1) = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  const double mass =
      std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return gauss_from_recurrence(diag, off, mass, Measure::jacobi);
}

QuadratureRule gauss_alpha_mu(const MuParam& mu, int n) {
  mu.require_positive();
  const double m = mu.value();
  QuadratureRule rule = gauss_jacobi(m - 1.0, m, n);
  rule.weights /= rule.weights.sum();
  rule.measure = Measure::alpha_mu;
  return rule;
}

std::string to_csv(const QuadratureRule& rule) {
  std::string out = "node,weight\n";
  char buf[96];
  for (int i = 0; i < rule.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", rule.nodes(i), rule.weights(i));
    out += buf;
  }
  return out;
}

}  // namespace ghermite
