#include <doctest.h>

#include "ghermite/oscillator.hpp"
#include "ghermite/verify.hpp"

#include <complex>

using namespace ghermite;

TEST_CASE("truncated matrices") {
  const OscillatorRep r = build(MuParam(0.5), 10);
  CHECK(r.n == 10);
  CHECK(r.interior(2) == 7);
  for (int k = 0; k < 10; ++k) {
    CHECK(r.J(k, k) == std::complex<double>(k % 2 ? -1.0 : 1.0));
    CHECK(r.H(k, k).real() == doctest::Approx(k + 1.0));
  }
  CHECK(r.ground()(0) == std::complex<double>(1.0));
  CHECK_THROWS_AS(build(MuParam(0.5), 3), std::invalid_argument);
}

TEST_CASE("all oscillator checks pass on the interior") {
  for (double mu : {0.0, 0.5, 1.5, 3.5}) {
    const OscillatorRep r = build(MuParam(mu), 32);
    INFO("mu=", mu);
    CHECK(check_equations_of_motion(r).pass(1e-10));
    CHECK(check_commutation(r).pass(1e-10));
    CHECK(check_ladder_powers(r, 20).pass(1e-10));
    CHECK(check_rodrigues_operator(r, 20).pass(1e-10));
    CHECK(check_structure(r).pass(1e-10));
    CHECK(check_representation(r).pass(1e-8));
  }
}

TEST_CASE("edge corruption stays visible outside the interior") {
  const OscillatorRep r = build(MuParam(0.5), 16);
  const OscillatorReport rep = check_commutation(r);
  bool edge_seen = false;
  for (const auto& d : rep.identities) {
    if (d.identity.find("[A,Adag] = I + 2 mu J") == std::string::npos) continue;
    // The last column picks up the truncated A Adag entry.
    if (!d.column_defects.empty() && d.column_defects.back() > 0.5) edge_seen = true;
  }
  CHECK(edge_seen);
  CHECK(rep.to_json().at("identities").size() == rep.identities.size());
}

TEST_CASE("verification runs are deterministic and complete") {
  const MuParam mu = MuParam::parse("1/3");
  const auto a = run_verification(mu);
  const auto b = run_verification(mu);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].max_defect == b[i].max_defect);
  }
  CHECK(all_pass(a));
  const auto j = to_json(a);
  for (const char* key : {"suite", "identity", "mu", "n_max", "max_defect", "pass"}) CHECK(j[0].contains(key));
  // Exact suite only when asked, numeric suites need mu > -1/2.
  VerifyOptions exact_only;
  exact_only.run_numeric = false;
  const auto e = run_verification(MuParam::parse("-7/10"), exact_only);
  CHECK(e.size() == 12);
  CHECK(all_pass(e));
  CHECK_THROWS_AS(run_verification(MuParam::parse("-7/10")), DomainError);
}
