// Acceptance run: one line per criterion, exit status 1 if any is red.
#include "ghermite/ghermite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace ghermite;

namespace {

using cd = std::complex<double>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
  // Records a measured value against its bound.
  void bound(const std::string& what, double value, double tol) {
    const bool ok = std::isfinite(value) && value < tol;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %.3g%s%.0e", what.c_str(), value, ok ? " < " : " >= ", tol);
    note(buf);
    pass = pass && ok;
  }
  void require(const std::string& what, bool ok) {
    if (!ok) note(what);
    pass = pass && ok;
  }
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
double rel(cd got, cd want) { return std::abs(got - want) / std::abs(want); }

// 1. Exact identities at zero tolerance.
Outcome exact_identities() {
  Outcome o;
  for (const char* m : {"0", "1/3", "1/2", "5/2", "-1/4", "7/2"}) {
    const MuParam mu = MuParam::parse(m);
    for (IdentityTag tag : all_identity_tags()) {
      const IdentityReport r = verify_identity(tag, mu, default_n_max(tag));
      if (!r.pass) o.require(std::string(to_string(tag)) + " fails at mu=" + m, false);
    }
  }
  if (o.pass) o.note("12 tags x 6 mu, zero tolerance");
  return o;
}

// 2. Quadrature exactness and alpha moments.
Outcome quadrature_exactness() {
  Outcome o;
  double worst_h = 0.0, worst_a = 0.0;
  for (double mu : {0.0, 0.5, 1.5, -0.25}) {
    const QuadratureRule rule = gauss_hermite_mu(MuParam(mu), 32);
    for (int d = 0; d <= 63; ++d) {
      const double q = rule.integrate([&](double t) { return std::pow(t, d); });
      // Odd moments vanish; measure them on the scale of the absolute moment.
      const double scale = std::tgamma((d + 1) / 2.0 + mu);
      worst_h = std::max(worst_h, std::abs(q - (d % 2 ? 0.0 : scale)) / scale);
    }
  }
  for (double mu : {0.3, 0.75, 2.0}) {
    const QuadratureRule rule = gauss_alpha_mu(MuParam(mu), 20);
    for (int n = 0; n <= 25; ++n) {
      const double want = std::tgamma(n + 1.0) / gamma_mu(MuParam(mu), n);
      worst_a = std::max(worst_a, rel(rule.integrate([&](double t) { return std::pow(t, n); }), want));
    }
  }
  o.bound("moment error", worst_h, 1e-12);
  o.bound("alpha moment error", worst_a, 1e-11);
  return o;
}

// 3. Gram matrix of phi_0..phi_20.
Outcome orthonormality() {
  Outcome o;
  double worst = 0.0;
  for (double mu : {0.0, 0.5, 1.5, -0.25, 0.3, 0.75, 2.0}) {
    const int n = 20;
    const QuadratureRule rule = gauss_hermite_mu(MuParam(mu), n + 24);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes(i);
      const Eigen::VectorXd p = phi_eval_all(MuParam(mu), n, x) * std::exp(0.5 * x * x);
      gram += rule.weights(i) * p * p.transpose();
    }
    worst = std::max(worst, (gram - Eigen::MatrixXd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
  }
  o.bound("max |G - I|", worst, 1e-10);
  return o;
}

std::vector<double> sample_points(int count, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(count);
  for (double& x : out) x = u(rng);
  return out;
}

// 4. Hermite functions are Fourier eigenfunctions.
Outcome fourier_eigenfunctions() {
  Outcome o;
  double worst = 0.0;
  const std::vector<double> xs = sample_points(20, -3.0, 3.0, 4);
  for (double mu : {0.0, 0.5, 1.5}) {
    for (int n = 0; n <= 10; ++n) {
      const DensePoly<double> h = hermite_coeffs<double>(MuParam(mu), n);
      const EnvelopedFunction f{[&](double t) { return cd(h(t)); }, 0.5};
      for (double x : xs) worst = std::max(worst, rel(fourier_quadrature(MuParam(mu), f, x), fourier_phase<cd>(n) * f(x)));
    }
  }
  o.bound("relative error", worst, 1e-8);
  return o;
}

// 5. Transform integrals of Gaussians, monomial Gaussians and e_mu Gaussians.
Outcome transform_closed_forms() {
  Outcome o;
  double worst = 0.0;
  const cd mi(0.0, -0.5);
  for (double mu : {0.0, 0.5, 1.5, 0.3}) {
    const MuParam m(mu);
    const double g = std::tgamma(mu + 0.5);
    for (double lambda : {0.4, 1.0, 2.3}) {
      for (double x : {-2.2, -0.6, 0.9, 1.7}) {
        const double env = std::exp(-x * x / (4.0 * lambda));
        const EnvelopedFunction one{[](double) { return cd(1.0); }, lambda};
        worst = std::max(worst, rel(fourier_integral(m, one, x), cd(g / std::pow(lambda, mu + 0.5) * env)));
        for (int n = 1; n <= 6; ++n) {
          const EnvelopedFunction mono{[n](double t) { return cd(std::pow(t, n)); }, lambda};
          const cd want = std::pow(mi, n) * g / std::pow(lambda, 0.5 * n + 0.5 + mu) * gamma_mu(m, n) /
                          std::tgamma(n + 1.0) * env * hermite_eval(m, n, x / (2.0 * std::sqrt(lambda)));
          worst = std::max(worst, rel(fourier_integral(m, mono, x), want));
        }
        for (double y : {-1.3, 0.5, 2.0}) {
          const EnvelopedFunction shifted{[&](double t) { return e_mu(m, cd(0.0, y * t)); }, lambda};
          const double want = g / std::pow(lambda, mu + 0.5) * std::exp(-(x * x + y * y) / (4.0 * lambda)) *
                              e_mu(m, x * y / (2.0 * lambda));
          worst = std::max(worst, rel(fourier_integral(m, shifted, x), cd(want)));
        }
      }
    }
    // beta^2 = 1, lambda^2 = 1/2: the Hermite-Gaussian form reduces to the
    // eigenfunction relation; compare both closed forms and the quadrature.
    const double beta = 1.0, lam = std::sqrt(0.5);
    for (int n = 0; n <= 8; ++n) {
      const DensePoly<double> h = hermite_coeffs<double>(m, n);
      const EnvelopedFunction f{[&](double t) { return cd(h(beta * t)); }, lam * lam};
      for (double x : {-1.9, 0.45, 1.2}) {
        const double r2 = (beta / lam) * (beta / lam) - 1.0;
        const cd general = fourier_phase<cd>(n) * g * std::pow(lam, -2.0 * mu - 1.0) * std::pow(r2, 0.5 * n) *
                           std::exp(-x * x / (4.0 * lam * lam)) *
                           hermite_eval(m, n, beta * x / (2.0 * lam * std::sqrt(beta * beta - lam * lam)));
        const cd eigen = std::pow(2.0, mu + 0.5) * g * fourier_phase<cd>(n) * std::exp(-0.5 * x * x) * h(x);
        worst = std::max({worst, rel(general, eigen), rel(fourier_integral(m, f, x), eigen)});
      }
    }
  }
  o.bound("relative error", worst, 1e-9);
  return o;
}

// 6. Mehler series with the terms n = 0..40 against the closed form.
Outcome mehler() {
  Outcome o;
  for (double mu : {0.0, 0.6, 1.5}) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
      const double x = u(rng), y = u(rng);
      const Eigen::VectorXd px = phi_eval_all(MuParam(mu), 40, x), py = phi_eval_all(MuParam(mu), 40, y);
      for (double z : {0.2, 0.4, 0.6}) {
        double sum = 0.0, zn = 1.0;
        for (int n = 0; n <= 40; ++n, zn *= z) sum += px(n) * py(n) * zn;
        worst = std::max(worst, std::abs(sum - mehler_rhs(MuParam(mu), x, y, z).real()));
      }
    }
    char label[32];
    std::snprintf(label, sizeof label, "mu=%g", mu);
    o.bound(label, worst, 1e-9);
  }
  return o;
}

// 7. Heat routes, composition and PDE residuals.
Outcome heat() {
  Outcome o;
  double routes = 0.0, comp = 0.0, pde = 0.0;
  for (double mu : {0.0, 0.5, 1.5}) {
    const MuParam m(mu);
    const EnvelopedFunction gauss{[](double) { return cd(1.0); }, 1.0};
    for (double t : {0.1, 0.5, 2.0}) {
      for (double x : {-1.6, -0.35, 0.5, 1.2, 2.1}) {
        const double closed = heat_gaussian(m, 1.0, 0.0, t, x).real();
        const double kernel = heat_apply_kernel(m, [](double y) { return std::exp(-y * y); }, t, x);
        const double spectral = heat_spectral(m, gauss, t, x);
        routes = std::max({routes, std::abs(closed - kernel), std::abs(closed - spectral)});
      }
    }
    for (double x : {-1.3, 0.2, 0.9, 1.7}) {
      const double two_step =
          heat_apply_kernel(m, [&](double y) { return heat_gaussian(m, 1.0, 0.25, 0.3, y).real(); }, 0.4, x);
      comp = std::max(comp, std::abs(two_step - heat_gaussian(m, 1.0, 0.25, 0.7, x).real()));
    }
    for (HeatFamily fam : {HeatFamily::Even, HeatFamily::Odd, HeatFamily::Shifted})
      for (double t : {0.2, 0.8})
        for (double x : {-1.4, -0.3, 0.6, 1.5}) pde = std::max(pde, heat_pde_residual(m, fam, t, x, 1e-4));
  }
  o.bound("route spread", routes, 1e-6);
  o.bound("composition", comp, 1e-10);
  o.bound("PDE residual", pde, 1e-6);
  return o;
}

// int |f|^2 |t|^(2 mu) dt with t = u / sqrt(s) on a Hermite-type rule.
double norm_squared(double mu, const std::function<double(double)>& f, double s) {
  const QuadratureRule rule = gauss_hermite_mu(MuParam(mu), 160);
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double u = rule.nodes(i), v = f(u / std::sqrt(s));
    acc += rule.weights(i) * v * v * std::exp(u * u);
  }
  return acc / std::pow(s, mu + 0.5);
}

// 8. Translation: two integral forms, product formulas, symmetry,
// contraction and a positivity counterexample.
Outcome translation() {
  Outcome o;
  std::vector<std::pair<double, double>> pts;
  {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.2, 2.2);
    for (int k = 0; k < 20; ++k) {
      const double sx = (k % 2) ? -1.0 : 1.0, sy = (k % 4 < 2) ? 1.0 : -1.0;
      pts.emplace_back(sx * u(rng), sy * u(rng));
    }
  }
  double forms = 0.0, product = 0.0, symmetry = 0.0;
  bool contraction = true, witness = false;
  for (double mu : {0.3, 0.75, 2.0}) {
    const MuParam m(mu);
    for (double lambda : {0.5, 1.0}) {
      auto g = [&](double t) { return std::exp(-lambda * t * t); };
      auto g_odd = [&](double t) { return t * std::exp(-lambda * t * t); };
      for (auto [x, y] : pts) {
        const double a = translate_alpha(m, g, x, y), xi = translate_xi(m, g, x, y);
        forms = std::max({forms, std::abs(a - xi), std::abs(translate_alpha(m, g_odd, x, y) - translate_xi(m, g_odd, x, y))});
        const double closed = std::exp(-lambda * (x * x + y * y)) * e_mu(m, -2.0 * lambda * x * y);
        product = std::max({product, std::abs(a - closed), std::abs(translate_alpha(m, g_odd, x, y) - (x + y) * closed)});
        auto mixed = [&](double t) { return std::exp(-lambda * t * t) * (1.0 + 0.4 * t); };
        symmetry = std::max(symmetry, std::abs(translate_xi(m, mixed, x, y) - translate_xi(m, mixed, y, x)));
      }
      // ||phi||^2 = Gamma(mu+1/2) (2 lambda)^(-mu-1/2).
      const double phi_norm = std::tgamma(mu + 0.5) * std::pow(2.0 * lambda, -mu - 0.5);
      for (double y : {0.1, 1.0, 3.0}) {
        const double ty = norm_squared(mu, [&](double x) { return translate_alpha(m, g, x, y); }, lambda);
        contraction = contraction && ty <= phi_norm;
      }
    }
    // phi(t) = (t - 1)^2 exp(-t^2) is nonnegative; look for a negative translate.
    auto bump = [](double t) { return (t - 1.0) * (t - 1.0) * std::exp(-t * t); };
    for (double x = -3.0; x <= 3.0 && !witness; x += 0.1)
      for (double y = -3.0; y <= 3.0 && !witness; y += 0.1)
        if (translate_alpha(m, bump, x, y) < -1e-6) witness = true;
  }
  o.bound("alpha vs xi", forms, 1e-9);
  o.bound("product formula", product, 1e-9);
  o.bound("symmetry", symmetry, 1e-9);
  o.require("contraction violated", contraction);
  o.require("no positivity witness", witness);
  if (contraction && witness) o.note("contraction holds; positivity witness found");
  return o;
}

// 9. Oscillator identities at N = 32.
Outcome oscillator() {
  Outcome o;
  double worst = 0.0, repr = 0.0;
  for (double mu : {0.0, 0.5, 1.5}) {
    const OscillatorRep r = build(MuParam(mu), 32);
    const int depth = std::min(20, r.interior(1));
    for (const OscillatorReport& rep : {check_equations_of_motion(r), check_commutation(r), check_ladder_powers(r, depth),
                                        check_rodrigues_operator(r, depth), check_structure(r)})
      worst = std::max(worst, rep.max_defect());
    repr = std::max(repr, check_representation(r).max_defect());
  }
  o.bound("interior defect", worst, 1e-10);
  o.bound("representation", repr, 1e-8);
  return o;
}

// 10. mu = 0 gives back the classical theory.
Outcome classical_limit() {
  Outcome o;
  const MuParam zero = MuParam::parse("0");
  std::vector<DensePoly<Rational>> h{DensePoly<Rational>{Rational(1)}, DensePoly<Rational>{Rational(0), Rational(2)}};
  for (int n = 1; n < 20; ++n) h.push_back(h[n].shift_up(1) * Rational(2) - h[n - 1] * Rational(2 * n));
  for (int n = 0; n <= 20; ++n) o.require("Hermite coefficients differ at n=" + std::to_string(n), hermite_coeffs<Rational>(zero, n) == h[n]);

  const int size = 24;
  const Eigen::MatrixXcd hfs = function_space_matrix(zero, OperatorTag::H, size);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hfs);
  double spectrum = 0.0;
  for (int n = 0; n < size; ++n) spectrum = std::max(spectrum, std::abs(eig.eigenvalues()(n) - (n + 0.5)));
  o.bound("H eigenvalues vs n + 1/2", spectrum, 1e-9);

  const OscillatorRep r = build(zero, 32);
  const Eigen::MatrixXcd ipq = cd(0, 1) * (r.P * r.Q - r.Q * r.P);
  const int k = r.interior(2) + 1;
  o.bound("i[P,Q] - I", (ipq.topLeftCorner(k, k) - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-12);

  double classical = 0.0;
  const EnvelopedFunction g{[](double) { return cd(1.0); }, 0.5};
  for (double x : {-2.0, -0.5, 0.3, 1.8}) {
    classical = std::max(classical, std::abs(fourier_quadrature(zero, g, x) - std::exp(-0.5 * x * x)));
    classical = std::max(classical, std::abs(e_mu(zero, x) - std::exp(x)) / std::exp(x));
    for (double t : {0.1, 1.0}) {
      const double conv = std::exp(-x * x / (1.0 + 4.0 * t)) / std::sqrt(1.0 + 4.0 * t);
      classical = std::max(classical, std::abs(heat_apply_kernel(zero, [](double y) { return std::exp(-y * y); }, t, x) - conv));
      const double gauss_kernel = std::exp(-(x - 0.7) * (x - 0.7) / (4.0 * t)) / std::sqrt(4.0 * std::numbers::pi * t);
      classical = std::max(classical, rel(heat_kernel(zero, x, 0.7, t), gauss_kernel));
    }
  }
  o.bound("Fourier/heat vs classical", classical, 1e-12);
  o.require("verification suite fails at mu=0", all_pass(run_verification(zero)));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      exact_identities, quadrature_exactness, orthonormality, fourier_eigenfunctions, transform_closed_forms,
      mehler,           heat,                 translation,    oscillator,             classical_limit};
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("Criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.1f s)\n", failed, criteria.size(), secs);
  return failed ? 1 : 0;
}
