#include <doctest.h>

#include "ghermite/hermite.hpp"
#include "ghermite/mu.hpp"

#include <cmath>
#include <numbers>

using namespace ghermite;

TEST_CASE("gamma_mu reduces to the factorial at mu = 0") {
  double f = 1.0;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) f *= n;
    CHECK(gamma_mu(MuParam(0.0), n) == doctest::Approx(f).epsilon(1e-15));
  }
}

TEST_CASE("gamma_mu exact values") {
  const MuParam third = MuParam::parse("1/3");
  CHECK(gamma_mu<Rational>(third, 3) == Rational(110, 9));
  CHECK(gamma_mu<Rational>(third, 0) == Rational(1));
  // gamma_mu(2k) = 2^2k k! (mu + 1/2)_k
  const MuParam half = MuParam::parse("1/2");
  CHECK(gamma_mu<Rational>(half, 4) == Rational(16 * 2 * 1 * 2));
  CHECK(mu_binomial<Rational>(third, 3, 1) == Rational(110, 9) / (Rational(5, 3) * Rational(10, 3)));
}

TEST_CASE("log_gamma_mu matches the product and survives overflow") {
  const MuParam mu(0.75);
  CHECK(log_gamma_mu(mu, 30) == doctest::Approx(std::log(gamma_mu(mu, 30))).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_mu(mu, 400), std::overflow_error);
  CHECK(std::isfinite(log_gamma_mu(mu, 400)));
}

TEST_CASE("numeric mu guard") {
  CHECK_THROWS_AS(MuParam(-0.7), DomainError);
  CHECK_THROWS_AS(MuParam(-0.5), DomainError);
  CHECK_NOTHROW(MuParam(-0.49));
  CHECK_THROWS_AS(MuParam::parse("-3/2"), DomainError);
  // Exact mu below -1/2 is allowed away from the poles, but not numerically.
  const MuParam m = MuParam::parse("-7/10");
  CHECK(m.has_exact());
  CHECK_THROWS_AS(m.require_numeric(), DomainError);
  CHECK_THROWS_WITH(MuParam(-0.7), doctest::Contains("mu must exceed -1/2"));
}

TEST_CASE("alpha_mu moments agree with Beta integrals") {
  // Mean and second moment of (1-t)^(mu-1) (1+t)^mu / B(1/2, mu), worked by
  // hand from Beta integrals: both equal 1/(2 mu + 1).
  const MuParam mu(0.8);
  CHECK(alpha_mu_moment(mu, 0) == doctest::Approx(1.0));
  CHECK(alpha_mu_moment(mu, 1) == doctest::Approx(1.0 / (1.0 + 1.6)));
  CHECK(alpha_mu_moment(mu, 2) == doctest::Approx(1.0 / (1.0 + 1.6)));
  CHECK(beta(0.5, 0.5) == doctest::Approx(std::numbers::pi));
}

namespace {

// Physicists' Hermite polynomials from H_{n+1} = 2x H_n - 2n H_{n-1}.
std::vector<DensePoly<Rational>> classical_hermite(int n_max) {
  std::vector<DensePoly<Rational>> h{DensePoly<Rational>{Rational(1)}, DensePoly<Rational>{Rational(0), Rational(2)}};
  for (int n = 1; n < n_max; ++n)
    h.push_back(h[n].shift_up(1) * Rational(2) - h[n - 1] * Rational(2 * n));
  return h;
}

double weight_moment(double mu, int k) { return k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0 + mu); }

}  // namespace

TEST_CASE("classical Hermite polynomials at mu = 0") {
  const auto h = classical_hermite(20);
  const MuParam zero = MuParam::parse("0");
  for (int n = 0; n <= 20; ++n) CHECK(hermite_coeffs<Rational>(zero, n) == h[n]);
}

TEST_CASE("H_2 at mu = 1/2 vanishes at 1") {
  CHECK(hermite_eval(MuParam(0.5), 2, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  const auto p = hermite_coeffs<Rational>(MuParam::parse("1/2"), 2);
  CHECK(p(Rational(1)) == Rational(0));
}

TEST_CASE("recursion evaluation matches the explicit sum") {
  for (double mu : {-0.3, 0.0, 0.6, 2.5}) {
    for (int n = 0; n <= 15; ++n) {
      const auto p = hermite_coeffs<double>(MuParam(mu), n);
      for (double x : {-1.7, -0.2, 0.9, 2.4}) CHECK(hermite_eval(MuParam(mu), n, x) == doctest::Approx(p(x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("orthogonality against exact weight moments") {
  for (double mu : {-0.25, 0.4, 1.5}) {
    const MuParam m(mu);
    for (int a = 0; a <= 7; ++a) {
      for (int b = 0; b < a; ++b) {
        const auto prod = hermite_coeffs<double>(m, a) * hermite_coeffs<double>(m, b);
        double acc = 0.0, scale = 0.0;
        for (int k = 0; k <= prod.degree(); ++k) {
          acc += prod.coeff(k) * weight_moment(mu, k);
          scale += std::abs(prod.coeff(k) * weight_moment(mu, k));
        }
        CHECK(std::abs(acc) <= 1e-13 * scale);
      }
    }
  }
}

TEST_CASE("Dunkl operator on monomials") {
  const MuParam mu = MuParam::parse("1/3");
  const auto d = dunkl_apply(mu, DensePoly<Rational>::monomial(3));
  CHECK(d == DensePoly<Rational>::monomial(2, Rational(3) + Rational(2, 3)));
  CHECK(dunkl_apply(mu, DensePoly<Rational>::monomial(2)) == DensePoly<Rational>::monomial(1, Rational(2)));
  CHECK(dunkl_apply(mu, DensePoly<Rational>{Rational(5)}).is_zero());
}

TEST_CASE("inversion coefficients rebuild (2x)^n / gamma_mu(n)") {
  const MuParam mu = MuParam::parse("5/2");
  for (int n = 0; n <= 12; ++n) {
    const auto c = inversion_expand<Rational>(n);
    DensePoly<Rational> acc;
    for (std::size_t k = 0; k < c.size(); ++k) acc += hermite_coeffs<Rational>(mu, n - 2 * static_cast<int>(k)) * c[k];
    Rational lhs(1);
    for (int i = 0; i < n; ++i) lhs *= 2;
    CHECK(acc == DensePoly<Rational>::monomial(n, lhs / gamma_mu<Rational>(mu, n)));
  }
}

TEST_CASE("heat polynomial of degree 2") {
  const MuParam mu = MuParam::parse("1/3");
  // D^2 x^2 = 2 (1 + 2 mu), and D^4 x^2 = 0.
  const auto p = heat_poly<Rational>(mu, 2, Rational(3, 7));
  CHECK(p == DensePoly<Rational>{Rational(2) * (1 + Rational(2, 3)) * Rational(3, 7), Rational(0), Rational(1)});
  CHECK(heat_poly<Rational>(mu, 5, Rational(0)) == DensePoly<Rational>::monomial(5));
}
