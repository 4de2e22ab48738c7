#pragma once

#include "lefschetz/operators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lefschetz {

enum class IdentityStatus { passed, failed, skipped };

struct IdentityResult {
  std::string name;
  IdentityStatus status = IdentityStatus::passed;
  int checked = 0;
  std::string detail; // skip reason, or minimized counterexample on failure
};

struct IdentitySuiteSummary {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<IdentityResult> results;

  int passed_count() const;
  int failed_count() const;
  int skipped_count() const;
  bool all_passed() const { return failed_count() == 0; }
};

/// Runs every operator identity of the calculus against `count` seeded
/// random forms (random transverse forms for the pointwise identities,
/// random basic forms for the differential ones). Identities whose
/// hypotheses the model does not satisfy are reported skipped with the
/// failing gate named. Everything is an exact equality; a failure carries a
/// term-minimized counterexample.
IdentitySuiteSummary run_identity_suite(const FoliationContext& ctx, std::uint64_t seed,
                                        int count);

} // namespace lefschetz
