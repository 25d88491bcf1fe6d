#include "ghermite/efun.hpp"

#include <cmath>
#include <vector>

namespace ghermite {

namespace {

// Beyond this |x| the alternating series for c, s loses more than a few
// digits even in long double; the backward recurrence takes over.
constexpr double kSeriesLimit = 12.0;

// Positive-term sums of the even and odd parts at a >= 0, scaled by exp(-a).
EvenOdd parts_scaled(double mu, double a, const EvalOptions& opts) {
  if (a == 0.0) return {1.0, 0.0};
  using LD = long double;
  const LD big = 1e1000L;
  const LD log_big = std::log(big);
  LD term = 1.0L, even = 1.0L, odd = 0.0L, log_scale = 0.0L;
  const int limit = opts.max_terms + static_cast<int>(4.0 * a);
  bool done = false;
  for (int m = 1; m <= limit; ++m) {
    term *= static_cast<LD>(a) / (m + 2.0L * mu * (m & 1));
    if (m & 1)
      odd += term;
    else
      even += term;
    if (term > big) {
      term /= big;
      even /= big;
      odd /= big;
      log_scale += log_big;
    }
    if (m > a && term < opts.tolerance * (even + odd)) {
      done = true;
      break;
    }
  }
  if (!done) throw ConvergenceError("e_mu series did not converge");
  const LD s = std::exp(log_scale - static_cast<LD>(a));
  return {static_cast<double>(even * s), static_cast<double>(odd * s)};
}

CosSin cs_series(double mu, double a, const EvalOptions& opts) {
  using LD = long double;
  LD term = 1.0L, c = 1.0L, s = 0.0L;
  for (int m = 1; m <= opts.max_terms; ++m) {
    term *= static_cast<LD>(a) / (m + 2.0L * mu * (m & 1));
    // (-i)^m: m = 1 -> -i, 2 -> -1, 3 -> i, 0 -> 1; c - i s collects them.
    switch (m % 4) {
      case 0: c += term; break;
      case 1: s += term; break;
      case 2: c -= term; break;
      default: s -= term; break;
    }
    if (m > a && term < 1e-3L * opts.tolerance) return {static_cast<double>(c), static_cast<double>(s)};
  }
  throw ConvergenceError("c/s series did not converge");
}

// Backward recurrence on f_k ~ J_{nu+k}(a), nu = mu - 1/2, normalized by
//   sum_j b_j f_{2j} = (a/2)^nu / Gamma(nu+1),
// b_0 = 1, b_j = (nu + 2j) Gamma(nu+j) / (j! Gamma(nu+1)).
// Then c = f_0 / S and s = f_1 / S.
CosSin cs_backward(double mu, double a) {
  const double nu = mu - 0.5;
  int top = static_cast<int>(std::ceil(a + 30.0 + 10.0 * std::cbrt(a)));
  if (top % 2) ++top;
  std::vector<double> b(static_cast<std::size_t>(top / 2) + 1);
  b[0] = 1.0;
  double r = 1.0;
  for (int j = 1; j <= top / 2; ++j) {
    if (j > 1) r *= (nu + j - 1) / j;
    b[j] = (nu + 2.0 * j) * r;
  }
  double f_next = 0.0, f = 1e-30, sum = 0.0, f1 = 0.0;
  // f holds f_k, f_next holds f_{k+1}; start at k = top.
  sum += b[top / 2] * f;
  for (int k = top; k >= 1; --k) {
    const double f_prev = 2.0 * (nu + k) / a * f - f_next;
    f_next = f;
    f = f_prev;
    const int idx = k - 1;
    if (idx % 2 == 0) sum += b[idx / 2] * f;
    if (idx == 1) f1 = f;
    if (std::abs(f) > 1e250) {
      f *= 1e-250;
      f_next *= 1e-250;
      sum *= 1e-250;
      f1 *= 1e-250;
    }
  }
  return {f / sum, f1 / sum};
}

}  // namespace

EvenOdd e_mu_parts_scaled(const MuParam& mu, double x, const EvalOptions& opts) {
  mu.require_numeric();
  EvenOdd p = parts_scaled(mu.value(), std::abs(x), opts);
  if (x < 0) p.odd = -p.odd;
  return p;
}

double e_mu_scaled(const MuParam& mu, double x, const EvalOptions& opts) {
  mu.require_numeric();
  if (mu.value() == 0.0) return x >= 0 ? 1.0 : std::exp(2.0 * x);
  const EvenOdd p = e_mu_parts_scaled(mu, x, opts);
  return p.even + p.odd;
}

double e_mu(const MuParam& mu, double x, const EvalOptions& opts) {
  mu.require_numeric();
  if (mu.value() == 0.0) return std::exp(x);
  return e_mu_scaled(mu, x, opts) * std::exp(std::abs(x));
}

CosSin c_s_mu(const MuParam& mu, double x, const EvalOptions& opts) {
  mu.require_numeric();
  if (mu.value() == 0.0) return {std::cos(x), std::sin(x)};
  const double a = std::abs(x);
  CosSin r = a <= kSeriesLimit ? cs_series(mu.value(), a, opts) : cs_backward(mu.value(), a);
  if (x < 0) r.s = -r.s;
  return r;
}

std::complex<double> e_mu(const MuParam& mu, std::complex<double> z, const EvalOptions& opts) {
  mu.require_numeric();
  if (z.imag() == 0.0) return e_mu(mu, z.real(), opts);
  if (z.real() == 0.0) {
    // e_mu(iw) = c(w) + i s(w).
    const CosSin cs = c_s_mu(mu, z.imag(), opts);
    return {cs.c, cs.s};
  }
  using LC = std::complex<long double>;
  const LC zz(z.real(), z.imag());
  LC term(1.0L), sum(1.0L);
  const long double mag = std::abs(zz);
  for (int m = 1; m <= opts.max_terms; ++m) {
    term *= zz / static_cast<long double>(m + 2.0L * mu.value() * (m & 1));
    sum += term;
    if (m > mag && std::abs(term) < opts.tolerance * std::abs(sum))
      return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }
  throw ConvergenceError("e_mu series did not converge for complex argument");
}

std::complex<double> mehler_poly_rhs(const MuParam& mu, double x, double y, std::complex<double> z,
                                     const EvalOptions& opts) {
  mu.require_numeric();
  if (!(std::abs(z) < 1.0)) throw DomainError("Mehler formula needs |z| < 1");
  const std::complex<double> one_minus = 1.0 - z * z;
  return std::pow(one_minus, -(mu.value() + 0.5)) * std::exp(-(x * x + y * y) * z * z / one_minus) *
         e_mu(mu, 2.0 * x * y * z / one_minus, opts);
}

std::complex<double> mehler_rhs(const MuParam& mu, double x, double y, std::complex<double> z,
                                const EvalOptions& opts) {
  mu.require_numeric();
  if (!(std::abs(z) < 1.0)) throw DomainError("Mehler formula needs |z| < 1");
  const std::complex<double> one_minus = 1.0 - z * z;
  const std::complex<double> w = 2.0 * x * y * z / one_minus;
  const std::complex<double> gauss = -0.5 * (x * x + y * y) * (1.0 + z * z) / one_minus;
  std::complex<double> e;
  if (w.imag() == 0.0) {
    // Fold the growth of e_mu into the Gaussian so neither factor overflows.
    e = e_mu_scaled(mu, w.real(), opts) * std::exp(gauss + std::abs(w.real()));
  } else {
    e = e_mu(mu, w, opts) * std::exp(gauss);
  }
  return std::pow(one_minus, -(mu.value() + 0.5)) * e / std::tgamma(mu.value() + 0.5);
}

double heat_kernel(const MuParam& mu, double x, double y, double t, const EvalOptions& opts) {
  mu.require_numeric();
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  const double arg = x * y / (2.0 * t);
  const double d = std::abs(x) - std::abs(y);
  const double log_pre = -(mu.value() + 0.5) * std::log(4.0 * t) - std::lgamma(mu.value() + 0.5);
  return std::exp(log_pre - d * d / (4.0 * t)) * e_mu_scaled(mu, arg, opts);
}

}  // namespace ghermite
