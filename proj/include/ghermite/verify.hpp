#ifndef GHERMITE_VERIFY_HPP
#define GHERMITE_VERIFY_HPP

#include "ghermite/mu.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ghermite {

/// One line of a verification report.
struct VerificationRecord {
  std::string suite;
  std::string identity;
  std::string mu;
  int n_max = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int n_max = 20;
  int oscillator_size = 32;
  bool run_exact = true;
  bool run_numeric = true;
};

/// Runs the exact identity suite (when mu carries an exact value) and the
/// numeric property suites that apply at this mu. Suites run concurrently;
/// records come back in a fixed order.
std::vector<VerificationRecord> run_verification(const MuParam& mu, const VerifyOptions& opts = {});

nlohmann::json to_json(const std::vector<VerificationRecord>& records);
bool all_pass(const std::vector<VerificationRecord>& records);

}  // namespace ghermite

#endif  // GHERMITE_VERIFY_HPP
