#include "ghermite/exact.hpp"

#include "ghermite/translate.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ghermite {

namespace {

using RPoly = DensePoly<Rational>;
using RBi = BivariatePoly<Rational>;
using Terms = std::map<std::pair<int, int>, Rational>;

struct TagName {
  IdentityTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {IdentityTag::recursion_2_6_3, "recursion_2_6_3"},
    {IdentityTag::lowering_2_6_1, "lowering_2_6_1"},
    {IdentityTag::raising_2_6_2, "raising_2_6_2"},
    {IdentityTag::rodrigues_2_6_5, "rodrigues_2_6_5"},
    {IdentityTag::iterated_raise_2_6_6, "iterated_raise_2_6_6"},
    {IdentityTag::inversion_2_6_7, "inversion_2_6_7"},
    {IdentityTag::generating_2_5_8, "generating_2_5_8"},
    {IdentityTag::binomial_4_2_1, "binomial_4_2_1"},
    {IdentityTag::odd_factor_4_4, "odd_factor_4_4"},
    {IdentityTag::heat_monomial_2_7_1, "heat_monomial_2_7_1"},
    {IdentityTag::dunkl_product_2_5_3, "dunkl_product_2_5_3"},
    {IdentityTag::dunkl_square_2_5_1, "dunkl_square_2_5_1"},
};

Terms terms_of(const RPoly& p) {
  Terms t;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) t[{k, 0}] = p.coeff(k);
  return t;
}

Terms terms_of(const RBi& p) {
  Terms t;
  const auto& c = p.coeffs();
  for (Eigen::Index j = 0; j < c.rows(); ++j)
    for (Eigen::Index k = 0; k < c.cols(); ++k)
      if (c(j, k) != 0) t[{static_cast<int>(j), static_cast<int>(k)}] = c(j, k);
  return t;
}

Rational lookup(const Terms& t, const std::pair<int, int>& key) {
  auto it = t.find(key);
  return it == t.end() ? Rational(0) : it->second;
}

// Collects comparisons for one identity and remembers the first mismatch.
class Checker {
 public:
  explicit Checker(std::optional<Mutation> mutation) : mutation_(mutation) {}

  template <class L, class R>
  void compare(int n, const L& lhs, const R& rhs) {
    Terms a = terms_of(lhs);
    const Terms b = terms_of(rhs);
    if (mutation_ && mutation_->n == n && mutated_.insert(n).second) {
      const std::pair<int, int> key{mutation_->x_power, mutation_->y_power};
      a[key] = lookup(a, key) + 1;
    }
    if (first_) return;
    std::set<std::pair<int, int>> keys;
    for (const auto& kv : a) keys.insert(kv.first);
    for (const auto& kv : b) keys.insert(kv.first);
    for (const auto& key : keys) {
      const Rational u = lookup(a, key);
      const Rational v = lookup(b, key);
      if (u != v) {
        first_ = Counterexample{n, key.first, key.second, to_string(u), to_string(v)};
        return;
      }
    }
  }

  const std::optional<Counterexample>& counterexample() const { return first_; }

 private:
  std::optional<Mutation> mutation_;
  std::set<int> mutated_;
  std::optional<Counterexample> first_;
};

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational pow_int(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<RPoly> hermite_table(const MuParam& mu, int n_max) {
  std::vector<RPoly> h;
  h.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) h.push_back(hermite_coeffs<Rational>(mu, n));
  return h;
}

// gamma_mu(n+1) / ((n+1) gamma_mu(n)).
Rational raise_factor(const Rational& mu, int n) { return gamma_step(mu, n + 1) / Rational(n + 1); }

void check_recursion(const MuParam& mu, int n_max, Checker& c) {
  const Rational m = mu.exact_value();
  const auto h = hermite_table(mu, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    RPoly lhs = h[n + 1] * raise_factor(m, n);
    if (n > 0) lhs += h[n - 1] * Rational(2 * n);
    c.compare(n, lhs, h[n].shift_up(1) * Rational(2));
  }
}

void check_lowering(const MuParam& mu, int n_max, Checker& c) {
  const Rational m = mu.exact_value();
  const auto h = hermite_table(mu, n_max);
  const Rational lambda(3, 2);
  for (int n = 0; n <= n_max; ++n) {
    const RPoly rhs = n > 0 ? h[n - 1] * Rational(2 * n) : RPoly{};
    c.compare(n, dunkl_apply(mu, h[n]), rhs);
    c.compare(n, dunkl_by_definition(m, h[n]), rhs);
    const RPoly scaled_rhs = n > 0 ? h[n - 1].scale_argument(lambda) * (2 * lambda * n) : RPoly{};
    c.compare(n, dunkl_apply(mu, h[n].scale_argument(lambda)), scaled_rhs);
  }
}

void check_raising(const MuParam& mu, int n_max, Checker& c) {
  const Rational m = mu.exact_value();
  const auto h = hermite_table(mu, n_max + 1);
  for (int n = 0; n <= n_max; ++n) c.compare(n, raise_apply(mu, h[n]), h[n + 1] * raise_factor(m, n));
}

// Polynomial factor of D^n exp(-lambda^2 x^2): q -> D q - 2 lambda^2 x q.
void check_rodrigues(const MuParam& mu, int n_max, Checker& c) {
  const auto h = hermite_table(mu, n_max);
  const GammaMuTable<Rational> g(mu, n_max);
  for (const Rational& lambda : {Rational(1), Rational(3, 2)}) {
    const Rational two_l2 = 2 * lambda * lambda;
    RPoly q = RPoly::constant(1);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) q = dunkl_apply(mu, q) - q.shift_up(1) * two_l2;
      Rational k = pow_int(lambda, n) * g[n] / factorial(n);
      if (n % 2) k = -k;
      c.compare(n, q, h[n].scale_argument(lambda) * k);
    }
  }
}

void check_iterated_raise(const MuParam& mu, int n_max, Checker& c) {
  const auto h = hermite_table(mu, n_max);
  const GammaMuTable<Rational> g(mu, n_max);
  RPoly r = RPoly::constant(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) r = raise_apply(mu, r);
    c.compare(n, h[n], r * (factorial(n) / g[n]));
  }
}

void check_inversion(const MuParam& mu, int n_max, Checker& c) {
  const auto h = hermite_table(mu, n_max);
  const GammaMuTable<Rational> g(mu, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const RPoly lhs = RPoly::monomial(n, pow_int(Rational(2), n) / g[n]);
    const auto ck = inversion_expand<Rational>(n);
    RPoly rhs;
    for (std::size_t k = 0; k < ck.size(); ++k) rhs += h[n - 2 * static_cast<int>(k)] * ck[k];
    c.compare(n, lhs, rhs);
  }
}

// Truncated product exp(-z^2) e_mu(2xz); the z^n coefficient against the
// Laguerre-type definition of H_n / n!.
void check_generating(const MuParam& mu, int n_max, Checker& c) {
  const Rational m = mu.exact_value();
  const GammaMuTable<Rational> g(mu, n_max);
  std::vector<RPoly> gauss(static_cast<std::size_t>(n_max) + 1);
  std::vector<RPoly> expo(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; 2 * k <= n_max; ++k) {
    Rational v = Rational(1) / factorial(k);
    gauss[2 * k] = RPoly::constant(k % 2 ? Rational(-v) : v);
  }
  for (int j = 0; j <= n_max; ++j) expo[j] = RPoly::monomial(j, pow_int(Rational(2), j) / g[j]);
  for (int n = 0; n <= n_max; ++n) {
    RPoly coeff;
    for (int a = 0; a <= n; ++a) coeff += gauss[a] * expo[n - a];
    c.compare(n, coeff, hermite_coeffs_definition(m, n) * (Rational(1) / factorial(n)));
  }
}

void check_binomial(const MuParam& mu, int n_max, Checker& c) {
  for (int n = 0; n <= n_max; ++n)
    c.compare(n, translate_poly_bivariate(mu, RPoly::monomial(n)), binomial_poly<Rational>(mu, n));
}

void check_odd_factor(const MuParam& mu, int n_max, Checker& c) {
  auto x_plus_y = RBi::zero(1);
  x_plus_y.set(1, 0, 1);
  x_plus_y.set(0, 1, 1);
  for (int n = 1; n <= n_max; n += 2)
    c.compare(n, binomial_poly<Rational>(mu, n), x_plus_y * binomial_poly<Rational>(mu, n - 1));
}

// exp(-y^2 D^2) x^n against gamma(n)/n! H_n(x/2y) y^n as polynomials in x, y;
// then the closed heat polynomial against exp(t D^2) x^n at rational t.
void check_heat_monomial(const MuParam& mu, int n_max, Checker& c) {
  const auto h = hermite_table(mu, n_max);
  const GammaMuTable<Rational> g(mu, n_max);
  for (int n = 0; n <= n_max; ++n) {
    auto lhs = RBi::zero(n);
    RPoly d = RPoly::monomial(n);
    for (int k = 0; 2 * k <= n; ++k) {
      if (k > 0) d = dunkl_apply(mu, dunkl_apply(mu, d));
      Rational s = Rational(1) / factorial(k);
      if (k % 2) s = -s;
      for (int j = 0; j <= d.degree(); ++j) lhs.add(j, 2 * k, d.coeff(j) * s);
    }
    auto rhs = RBi::zero(n);
    const Rational pre = g[n] / factorial(n);
    for (int j = 0; j <= h[n].degree(); ++j) rhs.add(j, n - j, pre * h[n].coeff(j) / pow_int(Rational(2), j));
    c.compare(n, lhs, rhs);

    for (const Rational& t : {Rational(2, 3), Rational(-5, 7)}) {
      RPoly series;
      RPoly dd = RPoly::monomial(n);
      for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) dd = dunkl_apply(mu, dunkl_apply(mu, dd));
        series += dd * (pow_int(t, k) / factorial(k));
      }
      c.compare(n, heat_poly<Rational>(mu, n, t), series);
    }
  }
}

void check_dunkl_product(const MuParam& mu, int n_max, Checker& c) {
  const auto h = hermite_table(mu, n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 0; 2 * j <= n; ++j) {
      const RPoly& even = h[2 * j];
      const RPoly lhs = dunkl_apply(mu, h[n] * even);
      const RPoly rhs = dunkl_apply(mu, h[n]) * even + h[n] * dunkl_apply(mu, even);
      c.compare(n, lhs, rhs);
    }
  }
}

// x^2 D^2 p against x^2 p'' + 2 mu x p' - mu (p(x) - p(-x)).
void check_dunkl_square(const MuParam& mu, int n_max, Checker& c) {
  const Rational m = mu.exact_value();
  const auto h = hermite_table(mu, n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (const RPoly& p : {h[n], RPoly::monomial(n)}) {
      const RPoly lhs = dunkl_apply(mu, dunkl_apply(mu, p)).shift_up(2);
      const RPoly rhs = p.derivative().derivative().shift_up(2) + p.derivative().shift_up(1) * (2 * m) -
                        (p - p.reflect()) * m;
      c.compare(n, lhs, rhs);
    }
  }
}

}  // namespace

const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags = [] {
    std::vector<IdentityTag> v;
    for (const auto& t : kTagNames) v.push_back(t.tag);
    return v;
  }();
  return tags;
}

std::string_view to_string(IdentityTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t.name;
  return "unknown";
}

IdentityTag parse_identity_tag(std::string_view name) {
  for (const auto& t : kTagNames)
    if (name == t.name) return t.tag;
  throw std::invalid_argument("unknown identity tag: " + std::string(name));
}

int default_n_max(IdentityTag tag) { return tag == IdentityTag::generating_2_5_8 ? 12 : 20; }

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["tag"] = std::string(ghermite::to_string(tag));
  j["mu"] = ghermite::to_string(mu);
  j["n_max"] = n_max;
  j["pass"] = pass;
  if (counterexample) {
    j["counterexample"] = {{"n", counterexample->n},
                           {"x_power", counterexample->x_power},
                           {"y_power", counterexample->y_power},
                           {"lhs", counterexample->lhs},
                           {"rhs", counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

DensePoly<Rational> hermite_coeffs_definition(const Rational& mu, int n) {
  if (n < 0) throw std::out_of_range("hermite_coeffs_definition: n must be nonnegative");
  const int m = n / 2;
  const bool odd = n % 2;
  const Rational a = mu + Rational(1, 2);
  Rational pre = factorial(n) / factorial(m);
  if (m % 2) pre = -pre;
  typename RPoly::Vector v = RPoly::Vector::Zero(n + 1);
  Rational rising(1);  // (a)_k, or (a)_{k+1} in the odd case
  if (odd) rising = a;
  Rational binom(1);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      rising *= odd ? a + k : a + (k - 1);
      binom = binom * (m - k + 1) / k;
    }
    Rational term = pre * binom / rising;
    v(2 * k + (odd ? 1 : 0)) = k % 2 ? Rational(-term) : term;
  }
  return RPoly(std::move(v));
}

DensePoly<Rational> dunkl_by_definition(const Rational& mu, const DensePoly<Rational>& p) {
  const RPoly r = p.derivative().shift_up(1) + (p - p.reflect()) * mu;
  if (r.coeff(0) != 0) throw std::logic_error("dunkl_by_definition: nonzero constant term");
  if (r.degree() < 1) return {};
  return RPoly(RPoly::Vector(r.coeffs().tail(r.degree())));
}

IdentityReport verify_identity(IdentityTag tag, const MuParam& mu, int n_max, std::optional<Mutation> mutation) {
  if (!mu.has_exact()) throw std::invalid_argument("exact verification needs a rational mu");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  Checker c(mutation);
  switch (tag) {
    case IdentityTag::recursion_2_6_3: check_recursion(mu, n_max, c); break;
    case IdentityTag::lowering_2_6_1: check_lowering(mu, n_max, c); break;
    case IdentityTag::raising_2_6_2: check_raising(mu, n_max, c); break;
    case IdentityTag::rodrigues_2_6_5: check_rodrigues(mu, n_max, c); break;
    case IdentityTag::iterated_raise_2_6_6: check_iterated_raise(mu, n_max, c); break;
    case IdentityTag::inversion_2_6_7: check_inversion(mu, n_max, c); break;
    case IdentityTag::generating_2_5_8: check_generating(mu, n_max, c); break;
    case IdentityTag::binomial_4_2_1: check_binomial(mu, n_max, c); break;
    case IdentityTag::odd_factor_4_4: check_odd_factor(mu, n_max, c); break;
    case IdentityTag::heat_monomial_2_7_1: check_heat_monomial(mu, n_max, c); break;
    case IdentityTag::dunkl_product_2_5_3: check_dunkl_product(mu, n_max, c); break;
    case IdentityTag::dunkl_square_2_5_1: check_dunkl_square(mu, n_max, c); break;
    default: throw std::invalid_argument("unknown identity tag");
  }
  IdentityReport r;
  r.tag = tag;
  r.mu = mu.exact_value();
  r.n_max = n_max;
  r.counterexample = c.counterexample();
  r.pass = !r.counterexample.has_value();
  return r;
}

}  // namespace ghermite
