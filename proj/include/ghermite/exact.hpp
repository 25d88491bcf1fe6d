#ifndef GHERMITE_EXACT_HPP
#define GHERMITE_EXACT_HPP

#include "ghermite/hermite.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghermite {

/// Polynomial identities the exact verifier knows how to check.
enum class IdentityTag {
  recursion_2_6_3,
  lowering_2_6_1,
  raising_2_6_2,
  rodrigues_2_6_5,
  iterated_raise_2_6_6,
  inversion_2_6_7,
  generating_2_5_8,
  binomial_4_2_1,
  odd_factor_4_4,
  heat_monomial_2_7_1,
  dunkl_product_2_5_3,
  dunkl_square_2_5_1,
};

const std::vector<IdentityTag>& all_identity_tags();
std::string_view to_string(IdentityTag tag);
/// Throws std::invalid_argument for unknown names.
IdentityTag parse_identity_tag(std::string_view name);

/// Largest index checked by default: product identities grow quadratically.
int default_n_max(IdentityTag tag);

/// First coefficient where the two sides disagree. For univariate
/// identities y_power is 0.
struct Counterexample {
  int n = 0;
  int x_power = 0;
  int y_power = 0;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityTag tag{};
  Rational mu;
  int n_max = 0;
  bool pass = false;
  std::optional<Counterexample> counterexample;

  nlohmann::json to_json() const;
};

/// Adds 1 to the left-hand coefficient of x^x_power y^y_power at index n.
/// Used to check that the verifier notices a single wrong coefficient.
struct Mutation {
  int n = 0;
  int x_power = 0;
  int y_power = 0;
};

/// Builds both sides of the tagged identity independently as exact
/// polynomials for every index n <= n_max and compares them coefficient-wise.
/// mu must carry an exact value and avoid the poles -1/2, -3/2, ...
IdentityReport verify_identity(IdentityTag tag, const MuParam& mu, int n_max,
                               std::optional<Mutation> mutation = std::nullopt);

/// H_n^mu from the Laguerre-type definition (rising factorials of mu + 1/2).
/// Serves as the reference the explicit sum is compared against.
DensePoly<Rational> hermite_coeffs_definition(const Rational& mu, int n);

/// p' + (mu/x)(p(x) - p(-x)) computed by differentiation and reflection.
DensePoly<Rational> dunkl_by_definition(const Rational& mu, const DensePoly<Rational>& p);

}  // namespace ghermite

#endif  // GHERMITE_EXACT_HPP
