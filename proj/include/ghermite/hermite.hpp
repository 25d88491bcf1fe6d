#ifndef GHERMITE_HERMITE_HPP
#define GHERMITE_HERMITE_HPP

#include "ghermite/mu.hpp"
#include "ghermite/poly.hpp"

#include <vector>

namespace ghermite {

/// Coefficients of H_n^mu from the explicit sum
///   H_n(x) = n! sum_k (-1)^k (2x)^(n-2k) / (k! gamma_mu(n-2k)).
template <class S = double>
DensePoly<S> hermite_coeffs(const MuParam& mu, int n) {
  if (n < 0) throw std::out_of_range("hermite_coeffs: n must be nonnegative");
  const GammaMuTable<S> g(mu, n);
  typename DensePoly<S>::Vector v = DensePoly<S>::Vector::Zero(n + 1);
  // n! / k! accumulated alongside 2^(n-2k).
  S nfact(1);
  for (int i = 2; i <= n; ++i) nfact *= S(i);
  S kfact(1);
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) kfact *= S(k);
    S pow2(1);
    for (int i = 0; i < n - 2 * k; ++i) pow2 *= S(2);
    S c = nfact * pow2 / (kfact * g[n - 2 * k]);
    v(n - 2 * k) = (k % 2) ? S(-c) : c;
  }
  return DensePoly<S>(std::move(v));
}

/// H_n^mu(x) by the upward three-term recursion
///   H_{k+1} = ((k+1)/(k+1+2 mu theta(k+1))) (2x H_k - 2k H_{k-1}).
double hermite_eval(const MuParam& mu, int n, double x);

/// H_0(x) .. H_n(x) from the same recursion.
std::vector<double> hermite_eval_all(const MuParam& mu, int n, double x);

/// Dunkl derivative on polynomials: x^n -> (n + 2 mu theta(n)) x^(n-1).
template <class S>
DensePoly<S> dunkl_apply(const MuParam& mu, const DensePoly<S>& p) {
  if (p.degree() < 1) return {};
  const S m = mu.as<S>();
  typename DensePoly<S>::Vector v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v(k - 1) = gamma_step(m, k) * p.coeff(k);
  return DensePoly<S>(std::move(v));
}

/// 2x p(x) - (Dunkl p)(x).
template <class S>
DensePoly<S> raise_apply(const MuParam& mu, const DensePoly<S>& p) {
  return p.shift_up(1) * S(2) - dunkl_apply(mu, p);
}

/// c_k = 1 / (k! (n-2k)!), k = 0 .. n/2, so that
///   (2x)^n / gamma_mu(n) = sum_k c_k H_{n-2k}.
/// The coefficients do not depend on mu.
template <class S = double>
std::vector<S> inversion_expand(int n) {
  if (n < 0) throw std::out_of_range("inversion_expand: n must be nonnegative");
  std::vector<S> fact(static_cast<std::size_t>(n) + 1, S(1));
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * S(i);
  std::vector<S> c;
  for (int k = 0; 2 * k <= n; ++k) c.push_back(S(1) / (fact[k] * fact[n - 2 * k]));
  return c;
}

/// sum_j binom_mu(n, j) x^j y^(n-j).
template <class S = double>
BivariatePoly<S> binomial_poly(const MuParam& mu, int n) {
  if (n < 0) throw std::out_of_range("binomial_poly: n must be nonnegative");
  const GammaMuTable<S> g(mu, n);
  auto b = BivariatePoly<S>::zero(n);
  for (int j = 0; j <= n; ++j) b.set(j, n - j, g[n] / (g[j] * g[n - j]));
  return b;
}

/// exp(t D^2) x^n = gamma_mu(n) sum_k x^(n-2k) t^k / (k! gamma_mu(n-2k)).
/// Reduces to x^n at t = 0.
template <class S = double>
DensePoly<S> heat_poly(const MuParam& mu, int n, const S& t) {
  if (n < 0) throw std::out_of_range("heat_poly: n must be nonnegative");
  const GammaMuTable<S> g(mu, n);
  typename DensePoly<S>::Vector v = DensePoly<S>::Vector::Zero(n + 1);
  S tk(1), kfact(1);
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      tk *= t;
      kfact *= S(k);
    }
    v(n - 2 * k) = g[n] * tk / (kfact * g[n - 2 * k]);
  }
  return DensePoly<S>(std::move(v));
}

}  // namespace ghermite

#endif  // GHERMITE_HERMITE_HPP
