#include <doctest.h>

#include "ghermite/efun.hpp"
#include "ghermite/quadrature.hpp"
#include "ghermite/transform.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <functional>
#include <numbers>

using namespace ghermite;

namespace {

// c and s through Bessel functions of order mu -+ 1/2.
CosSin bessel_cs(double mu, double x) {
  const double a = std::abs(x);
  const double pre = std::tgamma(mu + 0.5) * std::pow(a / 2.0, 0.5 - mu);
  const double c = pre * boost::math::cyl_bessel_j(mu - 0.5, a);
  const double s = pre * boost::math::cyl_bessel_j(mu + 0.5, a);
  return {c, x < 0 ? -s : s};
}

// e_mu(x) = Gamma(mu+1/2) (x/2)^(1/2-mu) (I_{mu-1/2}(x) + I_{mu+1/2}(x)), x > 0.
double bessel_e(double mu, double x) {
  const double pre = std::tgamma(mu + 0.5) * std::pow(x / 2.0, 0.5 - mu);
  return pre * (boost::math::cyl_bessel_i(mu - 0.5, x) + boost::math::cyl_bessel_i(mu + 0.5, x));
}

}  // namespace

TEST_CASE("e_mu at mu = 0 is exp") {
  for (double x : {-40.0, -3.5, -0.1, 0.0, 0.7, 12.0, 90.0}) CHECK(e_mu(MuParam(0.0), x) == doctest::Approx(std::exp(x)).epsilon(1e-14));
}

TEST_CASE("e_mu against modified Bessel functions") {
  for (double mu : {-0.25, 0.3, 1.5, 3.5}) {
    for (double x : {0.2, 1.0, 7.5, 25.0, 60.0}) {
      const double ref = bessel_e(mu, x);
      CHECK(e_mu(MuParam(mu), x) == doctest::Approx(ref).epsilon(1e-13));
      // Negative argument: even part minus odd part, both positive series.
      const double pre = std::tgamma(mu + 0.5) * std::pow(x / 2.0, 0.5 - mu);
      const double neg = pre * (boost::math::cyl_bessel_i(mu - 0.5, x) - boost::math::cyl_bessel_i(mu + 0.5, x));
      CHECK(e_mu(MuParam(mu), -x) == doctest::Approx(neg).epsilon(1e-11));
    }
  }
}

TEST_CASE("scaled e_mu stays finite past overflow") {
  const double v = e_mu_scaled(MuParam(0.75), 2000.0);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  CHECK(e_mu_scaled(MuParam(0.75), 30.0) == doctest::Approx(std::exp(-30.0) * bessel_e(0.75, 30.0)).epsilon(1e-13));
  const EvenOdd p = e_mu_parts_scaled(MuParam(0.75), -4.0);
  CHECK(p.even + p.odd == doctest::Approx(e_mu_scaled(MuParam(0.75), -4.0)).epsilon(1e-14));
  CHECK(p.odd < 0.0);
}

TEST_CASE("c and s against Bessel J on both sides of the series cutoff") {
  for (double mu : {-0.25, 0.0, 0.3, 1.5, 3.5}) {
    for (double x : {-9.0, 0.5, 5.0, 11.9, 12.1, 30.0, 80.0}) {
      const CosSin got = c_s_mu(MuParam(mu), x);
      const CosSin ref = bessel_cs(mu, x);
      INFO("mu=", mu, " x=", x);
      CHECK(std::abs(got.c - ref.c) < 1e-13);
      CHECK(std::abs(got.s - ref.s) < 1e-13);
    }
  }
  const CosSin z = c_s_mu(MuParam(0.0), 2.0);
  CHECK(z.c == doctest::Approx(std::cos(2.0)).epsilon(1e-15));
  CHECK(z.s == doctest::Approx(std::sin(2.0)).epsilon(1e-15));
}

TEST_CASE("e_mu on the imaginary axis") {
  const MuParam mu(0.6);
  const CosSin cs = c_s_mu(mu, 3.0);
  const std::complex<double> v = e_mu(mu, std::complex<double>(0.0, -3.0));
  CHECK(v.real() == doctest::Approx(cs.c).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(-cs.s).epsilon(1e-14));
  // General complex argument by the plain series: e_mu(z) e_mu conjugate symmetry.
  const std::complex<double> w = e_mu(mu, std::complex<double>(0.8, 1.3));
  CHECK(std::abs(std::conj(w) - e_mu(mu, std::complex<double>(0.8, -1.3))) < 1e-14);
}

TEST_CASE("Mehler closed form against a converged series") {
  for (double mu : {0.0, 0.6, 1.5}) {
    const MuParam m(mu);
    for (auto [x, y] : {std::pair{0.3, -1.2}, {1.9, 1.1}, {-0.6, -1.8}}) {
      const Eigen::VectorXd px = phi_eval_all(m, 120, x), py = phi_eval_all(m, 120, y);
      for (double z : {-0.5, 0.2, 0.6}) {
        double sum = 0.0, zn = 1.0;
        for (int n = 0; n <= 120; ++n, zn *= z) sum += px(n) * py(n) * zn;
        CHECK(std::abs(sum - mehler_rhs(m, x, y, z).real()) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(mehler_rhs(MuParam(0.5), 0.1, 0.2, 1.0), DomainError);
}

TEST_CASE("heat kernel reproduces the classical Gaussian at mu = 0") {
  for (double t : {0.05, 0.5, 3.0}) {
    for (auto [x, y] : {std::pair{0.2, -0.4}, {1.5, 2.5}, {-3.0, 1.0}}) {
      const double classical = std::exp(-(x - y) * (x - y) / (4.0 * t)) / std::sqrt(4.0 * std::numbers::pi * t);
      CHECK(heat_kernel(MuParam(0.0), x, y, t) == doctest::Approx(classical).epsilon(1e-13));
    }
  }
}

TEST_CASE("|e_mu(-ix)| bounds") {
  for (double mu : {0.0, 0.4, 2.5}) {
    double worst = 0.0;
    for (double x = -50.0; x <= 50.0; x += 0.05) worst = std::max(worst, std::abs(e_mu(MuParam(mu), std::complex<double>(0.0, -x))));
    CHECK(worst <= 1.0 + 1e-14);
  }
  // For -1/2 < mu < 0 the growth is |x|^|mu|; constants fitted once on a
  // 0.01 grid over [-50, 50] and frozen.
  for (auto [mu, c] : {std::pair{-0.25, 1.26}, {-0.4, 3.38}}) {
    double worst = 0.0;
    for (double x = -50.0; x <= 50.0; x += 0.05)
      worst = std::max(worst, std::abs(e_mu(MuParam(mu), std::complex<double>(0.0, -x))) / (std::pow(std::abs(x), -mu) + 1.0));
    CHECK(worst <= c);
    CHECK(worst > 1.0);
  }
}

namespace {

double series_e(double mu, double x, int terms = 200) {
  double s = 0.0, t = 1.0;
  for (int m = 0; m < terms; ++m) {
    if (m > 0) t *= x / (m + 2.0 * mu * (m % 2));
    s += t;
  }
  return s;
}

// int_{-1}^{1} f(t) |t|^(2a) (1-t)^p (1+t)^q dt, split at 0 so each half
// is a Gauss-Jacobi rule with the singular factors in the weight.
double split_integral(const std::function<double(double)>& f, double a, double p, double q, int n = 60) {
  double acc = 0.0;
  const QuadratureRule right = gauss_jacobi(p, 2.0 * a, n), left = gauss_jacobi(q, 2.0 * a, n);
  for (int i = 0; i < n; ++i) {
    const double s = 0.5 * (1.0 + right.nodes(i));
    acc += right.weights(i) * std::pow(2.0, -p - 2.0 * a - 1.0) * std::pow(1.0 + s, q) * f(s);
  }
  for (int i = 0; i < n; ++i) {
    const double s = 0.5 * (1.0 + left.nodes(i));
    acc += left.weights(i) * std::pow(2.0, -q - 2.0 * a - 1.0) * std::pow(1.0 + s, p) * f(-s);
  }
  return acc;
}

}  // namespace

TEST_CASE("differential equations of e_mu") {
  for (double mu : {-0.3, 0.7, 2.0}) {
    auto e = [&](double u) { return e_mu(MuParam(mu), u); };
    for (double x : {-2.3, 0.5, 4.0}) {
      // Fourth-order central differences.
      const double h = 1e-3;
      const double d1 = (e(x - 2 * h) - 8 * e(x - h) + 8 * e(x + h) - e(x + 2 * h)) / (12 * h);
      const double d2 = (-e(x - 2 * h) + 16 * e(x - h) - 30 * e(x) + 16 * e(x + h) - e(x + 2 * h)) / (12 * h * h);
      CHECK(std::abs(x * d2 + (1 + 2 * mu) * d1 - (1 + x) * e(x)) < 1e-6);
      // Second derivative by differentiating the series twice.
      double series_d2 = 0.0, term = 1.0 / gamma_step(mu, 1) / gamma_step(mu, 2) * 2.0;
      for (int m = 2; m < 200; ++m) {
        if (m > 2) term *= x / gamma_step(mu, m) * m / (m - 2);
        series_d2 += term;
      }
      const double rhs = e(x) - 2.0 * mu / (2.0 * mu + 1.0) * e_mu(MuParam(mu + 1.0), x);
      CHECK(series_d2 == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("integral representations of e_mu") {
  for (double x : {-2.3, 0.5, 4.0}) {
    // e_{mu+alpha} as an average of e_alpha.
    const double mu = 0.7, alpha = 0.4;
    const double avg = split_integral([&](double t) { return series_e(alpha, x * t); }, alpha, mu - 1.0, mu) /
                       beta(alpha + 0.5, mu);
    CHECK(avg == doctest::Approx(e_mu(MuParam(mu + alpha), x)).epsilon(1e-10));
    // exp recovered from e_{-m}, 0 < m < 1/2.
    const double m = 0.3;
    const double back = split_integral([&](double t) { return series_e(-m, x * t); }, -m, m - 1.0, m) / beta(0.5 - m, m);
    CHECK(back == doctest::Approx(std::exp(x)).epsilon(1e-8));
    // Continued form for -1 < mu < 0; the difference quotient absorbs one
    // power of (1 - t).
    const double mn = -0.6, al = 0.5;
    const double ex = series_e(al, x);
    const double integral = split_integral([&](double t) { return (series_e(al, x * t) - ex) / (1.0 - t); }, al, mn, mn);
    const double cont = ex + mn / (mn + al + 0.5) / beta(al + 0.5, mn + 1.0) * integral;
    CHECK(cont == doctest::Approx(e_mu(MuParam(mn + al), x)).epsilon(1e-8));
  }
}

TEST_CASE("heat kernel is symmetric") {
  const MuParam mu(0.9);
  CHECK(heat_kernel(mu, 0.4, -1.3, 0.6) == heat_kernel(mu, -1.3, 0.4, 0.6));
}
