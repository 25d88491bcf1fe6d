#include "ghermite/verify.hpp"

#include "ghermite/efun.hpp"
#include "ghermite/exact.hpp"
#include "ghermite/heat.hpp"
#include "ghermite/hermite.hpp"
#include "ghermite/oscillator.hpp"
#include "ghermite/quadrature.hpp"
#include "ghermite/transform.hpp"
#include "ghermite/translate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>

namespace ghermite {

nlohmann::json VerificationRecord::to_json() const {
  return {{"suite", suite},         {"identity", identity},   {"mu", mu},   {"n_max", n_max},
          {"max_defect", max_defect}, {"tolerance", tolerance}, {"pass", pass}};
}

nlohmann::json to_json(const std::vector<VerificationRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(r.to_json());
  return out;
}

bool all_pass(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

namespace {

using Records = std::vector<VerificationRecord>;

struct Suite {
  std::string name;
  std::string mu;
  int n_max;
  Records out;

  void add(const std::string& identity, double defect, double tol) {
    out.push_back({name, identity, mu, n_max, defect, tol, std::isfinite(defect) && defect < tol});
  }
  // Exceptions inside a property count as failures rather than aborting
  // the run.
  void run(const std::string& identity, double tol, const std::function<double()>& body) {
    double d;
    try {
      d = body();
    } catch (const std::exception&) {
      d = std::numeric_limits<double>::infinity();
    }
    add(identity, d, tol);
  }
};

Records exact_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"exact", mu.to_string(), opts.n_max, {}};
  for (IdentityTag tag : all_identity_tags()) {
    const int n = std::min(opts.n_max, default_n_max(tag));
    const IdentityReport r = verify_identity(tag, mu, n);
    s.out.push_back({"exact", std::string(to_string(tag)), mu.to_string(), n, r.pass ? 0.0 : 1.0, 0.0, r.pass});
  }
  return s.out;
}

Records quadrature_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"quadrature", mu.to_string(), opts.n_max, {}};
  const double m = mu.value();
  s.run("hermite_mu rule exact through degree 2N-1", 1e-12, [&] {
    const QuadratureRule rule = gauss_hermite_mu(mu, 32);
    double worst = 0.0;
    for (int d = 0; d <= 63; ++d) {
      const double q = rule.integrate([&](double t) { return std::pow(t, d); });
      // Odd moments vanish; compare them on the scale of the absolute moment.
      const double scale = std::tgamma((d + 1) / 2.0 + m);
      const double exact = d % 2 ? 0.0 : scale;
      worst = std::max(worst, std::abs(q - exact) / scale);
    }
    return worst;
  });
  if (m > 0.0) {
    s.run("alpha_mu moments n!/gamma_mu(n)", 1e-11, [&] {
      const QuadratureRule rule = gauss_alpha_mu(mu, 20);
      double worst = 0.0;
      for (int n = 0; n <= 25; ++n) {
        const double q = rule.integrate([&](double t) { return std::pow(t, n); });
        const double exact = alpha_mu_moment(mu, n);
        worst = std::max(worst, std::abs(q - exact) / std::max(std::abs(exact), 1e-300));
      }
      return worst;
    });
  }
  return s.out;
}

Records transform_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"transform", mu.to_string(), opts.n_max, {}};
  s.run("orthonormality of phi_n", 1e-10, [&] {
    const int n = opts.n_max;
    const QuadratureRule rule = gauss_hermite_mu(mu, n + 24);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes(i);
      const Eigen::VectorXd p = phi_eval_all(mu, n, x) * std::exp(0.5 * x * x);
      gram += rule.weights(i) * p * p.transpose();
    }
    return (gram - Eigen::MatrixXd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff();
  });
  s.run("Fourier eigenfunctions (-i)^n", 1e-8, [&] {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const DensePoly<double> h = hermite_coeffs<double>(mu, n);
      const EnvelopedFunction f{[&](double t) { return std::complex<double>(h(t)); }, 0.5};
      for (double x : {-2.83, -1.91, -0.77, 0.41, 1.36, 2.29}) {
        const std::complex<double> target = fourier_phase<std::complex<double>>(n) * f(x);
        worst = std::max(worst, std::abs(fourier_quadrature(mu, f, x) - target) / std::abs(target));
      }
    }
    return worst;
  });
  s.run("Mehler sum against closed form", 1e-12, [&] {
    // 101 terms; the tail at z = 0.6 is below 1e-15 for moderate mu.
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double x = u(rng), y = u(rng);
      const Eigen::VectorXd px = phi_eval_all(mu, 100, x), py = phi_eval_all(mu, 100, y);
      for (double z : {0.2, 0.4, 0.6}) {
        double sum = 0.0, zn = 1.0;
        for (int n = 0; n <= 100; ++n, zn *= z) sum += px(n) * py(n) * zn;
        worst = std::max(worst, std::abs(sum - mehler_rhs(mu, x, y, z).real()));
      }
    }
    return worst;
  });
  return s.out;
}

Records heat_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"heat", mu.to_string(), opts.n_max, {}};
  s.run("kernel, closed form and spectral routes agree", 1e-6, [&] {
    double worst = 0.0;
    const EnvelopedFunction gauss{[](double) { return std::complex<double>(1.0); }, 1.0};
    for (double t : {0.1, 0.5, 2.0}) {
      for (double x : {-1.6, -0.35, 0.5, 1.2, 2.1}) {
        const double closed = heat_gaussian(mu, 1.0, 0.0, t, x).real();
        const double kernel = heat_apply_kernel(mu, [](double y) { return std::exp(-y * y); }, t, x);
        const double spectral = heat_spectral(mu, gauss, t, x);
        worst = std::max({worst, std::abs(closed - kernel), std::abs(closed - spectral)});
      }
    }
    return worst;
  });
  s.run("semigroup composition", 1e-10, [&] {
    // Flow the closed form to time 0.3 and push it through the kernel for
    // another 0.4; compare with the closed form at 0.7.
    double worst = 0.0;
    for (double x : {-1.3, 0.2, 0.9, 1.7}) {
      const double two_step = heat_apply_kernel(
          mu, [&](double y) { return heat_gaussian(mu, 1.0, 0.25, 0.3, y).real(); }, 0.4, x);
      worst = std::max(worst, std::abs(two_step - heat_gaussian(mu, 1.0, 0.25, 0.7, x).real()));
    }
    return worst;
  });
  s.run("PDE residuals of closed-form families", 1e-6, [&] {
    double worst = 0.0;
    for (HeatFamily fam : {HeatFamily::Even, HeatFamily::Odd, HeatFamily::Shifted})
      for (double t : {0.2, 0.8})
        for (double x : {-1.4, -0.3, 0.6, 1.5}) worst = std::max(worst, heat_pde_residual(mu, fam, t, x, 1e-4));
    return worst;
  });
  return s.out;
}

Records translate_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"translate", mu.to_string(), opts.n_max, {}};
  const std::vector<std::pair<double, double>> pts = {{1.2, 0.5},   {-0.7, 1.4}, {0.9, -1.8}, {-1.1, -0.6},
                                                      {2.0, 0.3},   {0.4, -0.9}, {-1.7, 1.1}, {1.5, 1.5}};
  auto g = [](double t) { return std::exp(-0.8 * t * t) * (1.0 + 0.4 * t); };
  s.run("average form against Heron form", 1e-9, [&] {
    double worst = 0.0;
    for (auto [x, y] : pts) worst = std::max(worst, std::abs(translate_alpha(mu, g, x, y) - translate_xi(mu, g, x, y)));
    return worst;
  });
  s.run("Gaussian product formula", 1e-9, [&] {
    double worst = 0.0;
    for (auto [x, y] : pts) {
      const double lambda = 0.8;
      const double closed = std::exp(-lambda * (x * x + y * y)) * e_mu(mu, -2.0 * lambda * x * y);
      const double even = translate_alpha(mu, [&](double t) { return std::exp(-lambda * t * t); }, x, y);
      const double odd = translate_alpha(mu, [&](double t) { return t * std::exp(-lambda * t * t); }, x, y);
      worst = std::max({worst, std::abs(even - closed), std::abs(odd - (x + y) * closed)});
    }
    return worst;
  });
  s.run("symmetry in x and y", 1e-9, [&] {
    double worst = 0.0;
    for (auto [x, y] : pts) worst = std::max(worst, std::abs(translate_xi(mu, g, x, y) - translate_xi(mu, g, y, x)));
    return worst;
  });
  return s.out;
}

Records oscillator_suite(const MuParam& mu, const VerifyOptions& opts) {
  Suite s{"oscillator", mu.to_string(), opts.n_max, {}};
  const OscillatorRep rep = build(mu, opts.oscillator_size);
  const int depth = std::min(opts.n_max, rep.interior(1));
  auto add = [&](const OscillatorReport& r, double tol) {
    for (const auto& d : r.identities) s.add(r.check + ": " + d.identity, d.max_defect, tol);
  };
  add(check_equations_of_motion(rep), 1e-10);
  add(check_commutation(rep), 1e-10);
  add(check_ladder_powers(rep, depth), 1e-10);
  add(check_rodrigues_operator(rep, depth), 1e-10);
  add(check_structure(rep), 1e-10);
  add(check_representation(rep), 1e-8);
  return s.out;
}

}  // namespace

std::vector<VerificationRecord> run_verification(const MuParam& mu, const VerifyOptions& opts) {
  std::vector<std::future<Records>> jobs;
  if (opts.run_exact && mu.has_exact())
    jobs.push_back(std::async(std::launch::async, exact_suite, mu, opts));
  if (opts.run_numeric) {
    mu.require_numeric();
    for (auto* suite : {quadrature_suite, transform_suite, heat_suite, oscillator_suite})
      jobs.push_back(std::async(std::launch::async, suite, mu, opts));
    if (mu.value() > 0.0) jobs.push_back(std::async(std::launch::async, translate_suite, mu, opts));
  }
  Records all;
  for (auto& j : jobs) {
    Records r = j.get();
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

}  // namespace ghermite
