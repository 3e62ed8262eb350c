#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subangle/io.hpp"

namespace subangle {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// nullptr when everything passed.
  const CheckResult* first_failure() const;
};

/// Golden values of the worked examples, then the identity suites on the
/// example subspaces and on seeded random ones. Comparisons use tol.match_tol.
VerifyReport verify_builtin(const Tolerance& tol, std::uint64_t seed);

/// Identity suites (route agreement, Pythagorean and sine identities, perp
/// duality, Upsilon/Psi symmetry, triangle inequalities) on the file's
/// subspaces plus seeded random subspaces of the same ambient space.
VerifyReport verify_file(const SubspaceFile& file, const Tolerance& tol, std::uint64_t seed);

}  // namespace subangle
