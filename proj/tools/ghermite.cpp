// Command-line front end for the generalized Hermite library.
#include "ghermite/ghermite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ghermite;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Grid {
  double x0 = -3.0;
  double x1 = 3.0;
  int points = 61;

  double at(int i) const { return points == 1 ? x0 : x0 + (x1 - x0) * i / (points - 1); }
};

void add_grid(CLI::App* app, Grid& g) {
  app->add_option("--x0", g.x0, "Grid start")->capture_default_str();
  app->add_option("--x1", g.x1, "Grid end")->capture_default_str();
  app->add_option("--points", g.points, "Grid size")->check(CLI::PositiveNumber)->capture_default_str();
}

bool is_rational_syntax(const std::string& s) { return s.find('/') != std::string::npos; }

std::optional<Rational> try_rational(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hermite calculus: special functions, transforms, heat flow, translation, oscillator checks"};
  app.require_subcommand(1);
  std::string mu_text;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mu", mu_text, "Deformation parameter, decimal or p/q")->required();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one special function at a point");
  add_common(eval);
  std::string fn = "hermite";
  int n = 0;
  std::string x_text = "0";
  double y = 0.0, t = 1.0;
  eval->add_option("--fn", fn, "hermite | gamma | e_mu | c_mu | s_mu | phi | heat_poly | heat_kernel")
      ->check(CLI::IsMember({"hermite", "gamma", "e_mu", "c_mu", "s_mu", "phi", "heat_poly", "heat_kernel"}));
  eval->add_option("--n", n, "Degree or index")->check(CLI::NonNegativeNumber);
  eval->add_option("--x", x_text, "Argument (decimal or p/q)");
  eval->add_option("--y", y, "Second argument (heat_kernel)");
  eval->add_option("--t", t, "Time (heat_poly, heat_kernel)");

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Generalized factorial gamma_mu(n)");
  add_common(gamma);
  int gamma_n = 0;
  gamma->add_option("--n", gamma_n, "Index")->required()->check(CLI::NonNegativeNumber);

  // table
  auto* table = app.add_subcommand("table", "Tables of Hermite coefficients, factorials or Hermite functions");
  add_common(table);
  std::string kind = "hermite";
  int n_max = 10;
  Grid table_grid;
  table->add_option("--kind", kind, "hermite | gamma | phi")->check(CLI::IsMember({"hermite", "gamma", "phi"}));
  table->add_option("--nmax", n_max, "Largest index")->check(CLI::NonNegativeNumber);
  add_grid(table, table_grid);

  // quad
  auto* quad = app.add_subcommand("quad", "Gauss rule as node,weight CSV");
  add_common(quad);
  int quad_n = 16;
  std::string measure = "hermite_mu";
  quad->add_option("--N", quad_n, "Number of nodes")->check(CLI::PositiveNumber);
  quad->add_option("--measure", measure, "hermite_mu | alpha_mu")->check(CLI::IsMember({"hermite_mu", "alpha_mu"}));

  // transform
  auto* transform = app.add_subcommand("transform", "Generalized Fourier transform on a grid (x,re,im CSV)");
  add_common(transform);
  std::string input = "gaussian";
  double sigma = 0.5;
  int quad_size = 120;
  bool inverse = false;
  std::string method = "quadrature";
  Grid tgrid;
  transform->add_option("--input", input, "gaussian: exp(-sigma t^2); hermite: H_n(t) exp(-t^2/2)")
      ->check(CLI::IsMember({"gaussian", "hermite"}));
  transform->add_option("--sigma", sigma, "Gaussian exponent")->check(CLI::PositiveNumber);
  transform->add_option("--n", n, "Degree for the hermite input")->check(CLI::NonNegativeNumber);
  transform->add_option("--method", method, "quadrature | spectral")->check(CLI::IsMember({"quadrature", "spectral"}));
  transform->add_option("--quad", quad_size, "Quadrature size")->check(CLI::PositiveNumber);
  transform->add_flag("--inverse", inverse, "Inverse transform");
  add_grid(transform, tgrid);

  // heat
  auto* heat = app.add_subcommand("heat", "Heat flow on a grid (x,t,psi CSV)");
  add_common(heat);
  std::string family = "even";
  double alpha = 1.0, z = 0.0;
  std::vector<double> times{0.5};
  std::string heat_method = "closed";
  Grid hgrid;
  heat->add_option("--family", family, "even | odd | shifted")->check(CLI::IsMember({"even", "odd", "shifted"}));
  heat->add_option("--alpha", alpha, "Gaussian exponent")->check(CLI::PositiveNumber);
  heat->add_option("--z", z, "Shift parameter of the shifted family");
  heat->add_option("--t", times, "Times (repeatable)")->check(CLI::NonNegativeNumber);
  heat->add_option("--method", heat_method, "closed | kernel | spectral")
      ->check(CLI::IsMember({"closed", "kernel", "spectral"}));
  add_grid(heat, hgrid);

  // translate
  auto* translate = app.add_subcommand("translate", "Generalized translation on a grid (x,value CSV)");
  add_common(translate);
  double shift = 1.0, lambda = 1.0;
  std::string parity = "even";
  std::string tr_method = "alpha";
  Grid trgrid;
  translate->add_option("--y", shift, "Shift")->required();
  translate->add_option("--lambda", lambda, "Gaussian exponent of the input")->check(CLI::PositiveNumber);
  translate->add_option("--input", parity, "even: exp(-l t^2); odd: t exp(-l t^2)")
      ->check(CLI::IsMember({"even", "odd"}));
  translate->add_option("--method", tr_method, "alpha | xi")->check(CLI::IsMember({"alpha", "xi"}));
  add_grid(translate, trgrid);

  // oscillator
  auto* osc = app.add_subcommand("oscillator", "Operator identity checks on truncated matrices (JSON)");
  add_common(osc);
  int osc_n = 32;
  int osc_depth = 12;
  std::string check = "all";
  osc->add_option("--N", osc_n, "Truncation size")->check(CLI::Range(4, 512));
  osc->add_option("--nmax", osc_depth, "Largest power in ladder and Rodrigues checks")->check(CLI::NonNegativeNumber);
  osc->add_option("--check", check, "all | motion | commutation | ladder | rodrigues | structure | representation")
      ->check(CLI::IsMember({"all", "motion", "commutation", "ladder", "rodrigues", "structure", "representation"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run exact and numeric verification suites (JSON); exit 1 on failure");
  add_common(verify);
  VerifyOptions vopts;
  verify->add_option("--nmax", vopts.n_max, "Degree bound")->check(CLI::Range(1, 40));
  verify->add_option("--N", vopts.oscillator_size, "Oscillator truncation")->check(CLI::Range(8, 256));
  bool exact_only = false, numeric_only = false;
  verify->add_flag("--exact-only", exact_only, "Skip numeric suites");
  verify->add_flag("--numeric-only", numeric_only, "Skip the exact suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream out;
  int status = 0;
  try {
    const MuParam mu = MuParam::parse(mu_text);
    const bool exact_out = is_rational_syntax(mu_text);

    if (*eval) {
      const auto xr = try_rational(x_text);
      double x = 0.0;
      if (xr)
        x = xr->convert_to<double>();
      else
        throw std::invalid_argument("--x is not a number: " + x_text);
      if ((fn == "hermite" || fn == "gamma") && mu.has_exact()) {
        const Rational v = fn == "hermite" ? hermite_coeffs<Rational>(mu, n)(*xr) : gamma_mu<Rational>(mu, n);
        out << (exact_out ? to_string(v) : num(v.convert_to<double>())) << "\n";
      } else if (fn == "hermite") {
        out << num(hermite_eval(mu, n, x)) << "\n";
      } else if (fn == "gamma") {
        out << num(gamma_mu<double>(mu, n)) << "\n";
      } else if (fn == "e_mu") {
        out << num(e_mu(mu, x)) << "\n";
      } else if (fn == "c_mu") {
        out << num(c_s_mu(mu, x).c) << "\n";
      } else if (fn == "s_mu") {
        out << num(c_s_mu(mu, x).s) << "\n";
      } else if (fn == "phi") {
        out << num(phi_eval(mu, n, x)) << "\n";
      } else if (fn == "heat_poly") {
        mu.require_numeric();
        out << num(heat_on_monomial(mu, n, t)(x)) << "\n";
      } else {
        out << num(heat_kernel(mu, x, y, t)) << "\n";
      }
    } else if (*gamma) {
      if (mu.has_exact() && exact_out)
        out << to_string(gamma_mu<Rational>(mu, gamma_n)) << "\n";
      else if (mu.has_exact())
        out << num(gamma_mu<Rational>(mu, gamma_n).convert_to<double>()) << "\n";
      else
        out << num(gamma_mu<double>(mu, gamma_n)) << "\n";
    } else if (*table) {
      if (kind == "hermite") {
        out << "n,k,coefficient\n";
        for (int m = 0; m <= n_max; ++m) {
          if (exact_out) {
            const DensePoly<Rational> h = hermite_coeffs<Rational>(mu, m);
            for (int k = 0; k <= h.degree(); ++k)
              if (h.coeff(k) != 0) out << m << "," << k << "," << to_string(h.coeff(k)) << "\n";
          } else {
            mu.require_numeric();
            const DensePoly<double> h = hermite_coeffs<double>(mu, m);
            for (int k = 0; k <= h.degree(); ++k)
              if (h.coeff(k) != 0.0) out << m << "," << k << "," << num(h.coeff(k)) << "\n";
          }
        }
      } else if (kind == "gamma") {
        out << "n,gamma\n";
        for (int m = 0; m <= n_max; ++m)
          out << m << ","
              << (exact_out ? to_string(gamma_mu<Rational>(mu, m)) : num(gamma_mu<double>(mu, m))) << "\n";
      } else {
        out << "x";
        for (int m = 0; m <= n_max; ++m) out << ",phi_" << m;
        out << "\n";
        for (int i = 0; i < table_grid.points; ++i) {
          const double x = table_grid.at(i);
          const Eigen::VectorXd v = phi_eval_all(mu, n_max, x);
          out << num(x);
          for (int m = 0; m <= n_max; ++m) out << "," << num(v(m));
          out << "\n";
        }
      }
    } else if (*quad) {
      const QuadratureRule rule = measure == "hermite_mu" ? gauss_hermite_mu(mu, quad_n) : gauss_alpha_mu(mu, quad_n);
      out << to_csv(rule);
    } else if (*transform) {
      mu.require_numeric();
      DensePoly<double> h = DensePoly<double>::constant(1.0);
      if (input == "hermite") {
        h = hermite_coeffs<double>(mu, n);
        sigma = 0.5;
      }
      const EnvelopedFunction f{[&](double s) { return std::complex<double>(h(s)); }, sigma};
      SpectralVector v{mu, Eigen::VectorXcd(), 0.0};
      if (method == "spectral") {
        v = expand(mu, f, 64);
        v = inverse ? inverse_fourier_spectral(v) : fourier_spectral(v);
      }
      out << "x,re,im\n";
      for (int i = 0; i < tgrid.points; ++i) {
        const double x = tgrid.at(i);
        std::complex<double> r;
        if (method == "spectral")
          r = v.evaluate(x);
        else
          r = inverse ? inverse_fourier_quadrature(mu, f, x, quad_size) : fourier_quadrature(mu, f, x, quad_size);
        out << num(x) << "," << num(r.real()) << "," << num(r.imag()) << "\n";
      }
    } else if (*heat) {
      mu.require_numeric();
      const HeatFamily fam = family == "even" ? HeatFamily::Even : family == "odd" ? HeatFamily::Odd : HeatFamily::Shifted;
      const HeatFamilyParams params{alpha, z};
      auto initial = [&](double s) { return heat_family_value(mu, fam, params, 0.0, s); };
      out << "x,t,psi\n";
      for (double tt : times) {
        for (int i = 0; i < hgrid.points; ++i) {
          const double x = hgrid.at(i);
          double psi;
          if (heat_method == "closed" || tt == 0.0) {
            psi = heat_family_value(mu, fam, params, tt, x);
          } else if (heat_method == "kernel") {
            psi = heat_apply_kernel(mu, initial, tt, x);
          } else {
            const EnvelopedFunction f{[&](double s) { return std::complex<double>(initial(s) * std::exp(alpha * s * s)); },
                                      alpha};
            psi = heat_spectral(mu, f, tt, x);
          }
          out << num(x) << "," << num(tt) << "," << num(psi) << "\n";
        }
      }
    } else if (*translate) {
      mu.require_positive();
      auto g = [&](double s) { return (parity == "odd" ? s : 1.0) * std::exp(-lambda * s * s); };
      out << "x,value\n";
      for (int i = 0; i < trgrid.points; ++i) {
        const double x = trgrid.at(i);
        const bool degenerate = x == 0.0 || shift == 0.0;
        const double v = (tr_method == "xi" && !degenerate) ? translate_xi(mu, g, x, shift)
                                                            : translate_alpha(mu, g, x, shift);
        out << num(x) << "," << num(v) << "\n";
      }
    } else if (*osc) {
      const OscillatorRep rep = build(mu, osc_n);
      nlohmann::json reports = nlohmann::json::array();
      bool ok = true;
      auto emit = [&](const OscillatorReport& r, double tol) {
        nlohmann::json j = r.to_json();
        j["tolerance"] = tol;
        j["pass"] = r.pass(tol);
        ok = ok && r.pass(tol);
        reports.push_back(std::move(j));
      };
      const int depth = std::min(osc_depth, rep.interior(1));
      if (check == "all" || check == "motion") emit(check_equations_of_motion(rep), 1e-10);
      if (check == "all" || check == "commutation") emit(check_commutation(rep), 1e-10);
      if (check == "all" || check == "ladder") emit(check_ladder_powers(rep, depth), 1e-10);
      if (check == "all" || check == "rodrigues") emit(check_rodrigues_operator(rep, depth), 1e-10);
      if (check == "all" || check == "structure") emit(check_structure(rep), 1e-10);
      if (check == "all" || check == "representation") emit(check_representation(rep), 1e-8);
      out << reports.dump(2) << "\n";
      status = ok ? 0 : 1;
    } else if (*verify) {
      vopts.run_exact = !numeric_only;
      vopts.run_numeric = !exact_only;
      const auto records = run_verification(mu, vopts);
      out << to_json(records).dump(2) << "\n";
      status = all_pass(records) ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << out.str();
  }
  return status;
}
