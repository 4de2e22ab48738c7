#pragma once

#include "lefschetz/operators.hpp"

#include <optional>
#include <string>

namespace lefschetz {

/// Differential matrices d: Ω_B^r → Ω_B^{r+1} for r = 0..2n, verified to
/// square to zero. kind must be dB or dKappa; dKappa additionally requires
/// dκ = 0 (otherwise it does not square to zero and has no cohomology).
std::vector<RatMatrix> differential_matrices(const FoliationContext& ctx, OperatorKind kind);

struct CohomologyGroup {
  OperatorKind kind;
  int degree = 0;
  int dimension = 0;
  std::vector<Form> representatives;                  // cocycles spanning ker/im
  std::vector<std::vector<Rational>> representative_coords; // in the basic basis
};

CohomologyGroup cohomology_group(const FoliationContext& ctx, OperatorKind kind, int r);
/// All degrees 0..2n at once (shares the verified differentials).
std::vector<CohomologyGroup> cohomology(const FoliationContext& ctx, OperatorKind kind);

/// Matrix of L^r : H^{n−r} → H^{n+r} in the representative bases, for the
/// cohomology of `kind`. Surjective iff rank equals dim H^{n+r}.
struct LefschetzOnCohomology {
  int r = 0;
  int source_degree = 0;
  int target_degree = 0;
  RatMatrix matrix;
  bool surjective = false;
};
LefschetzOnCohomology lefschetz_on_cohomology(const FoliationContext& ctx,
                                              const std::vector<CohomologyGroup>& groups,
                                              int r);

enum class HarmonicKind { SB, ST, SK };
const char* harmonic_kind_name(HarmonicKind kind);

/// Exact basis of the kernel intersection: SB = ker d_B ∩ ker δ_B,
/// ST = ker d_B ∩ ker δ_T, SK = ker d_κ ∩ ker δ_κ.
struct HarmonicSpace {
  HarmonicKind kind;
  int degree = 0;
  std::vector<Form> basis;
  std::vector<std::vector<Rational>> basis_coords; // in the basic basis
};
HarmonicSpace harmonic_space(const FoliationContext& ctx, HarmonicKind kind, int r);

/// L^r between two harmonic spaces of the same kind, degrees n−r and n+r.
/// Both the membership of the images and the rank are checked exactly.
struct HarmonicLefschetzCheck {
  HarmonicKind kind;
  int r = 0;
  int source_dim = 0;
  int target_dim = 0;
  std::size_t rank = 0;
  bool images_in_target = false;
  bool bijective = false;
};
HarmonicLefschetzCheck harmonic_lefschetz_check(const FoliationContext& ctx,
                                                HarmonicKind kind, int r);

/// Modified-harmonic representative of a d_κ-class: solves
/// δ_κ(φ − d_κη) = 0 for η and returns φ − d_κη, or nullopt when the class
/// has no such representative (a mathematical outcome, not an error).
std::optional<Form> harmonic_representative(const FoliationContext& ctx, const Form& phi);

/// The two sides of the equivalence: (1) every modified basic class has a
/// modified symplectic harmonic representative; (2) L^r on H_κ is surjective
/// for every r ≤ n. Requires the isoparametric and dκ = 0 gates.
struct HardLefschetzReport {
  bool applicable = false;
  std::string reason;
  bool harmonic_in_every_class = false;
  bool lefschetz_surjective_all_r = false;
  bool equivalent = false;
  std::vector<LefschetzOnCohomology> lefschetz;
  /// (degree, representative index) of classes without harmonic representative.
  std::vector<std::pair<int, int>> classes_without_representative;
};
HardLefschetzReport hard_lefschetz_equivalence(const FoliationContext& ctx);

/// κ is d_B-exact in the basic complex. Requires κ basic.
bool tautness_check(const FoliationContext& ctx);

/// dim H_B^{2r} for 0 ≤ r ≤ n; asserted nonzero only on taut models.
struct EvenBettiReport {
  bool taut = false;
  std::vector<int> even_dims;
  bool all_nonzero = false;
  bool asserted = false; // assertion applies only when taut
};
EvenBettiReport even_betti_check(const FoliationContext& ctx,
                                 const std::vector<CohomologyGroup>& h_b, bool taut);

/// Ω_B is closed under L and Λ (sl(2)-submodule shadow used by the
/// equivalence theorem); reported per model rather than assumed.
bool basic_complex_sl2_closed(const FoliationContext& ctx);

} // namespace lefschetz
