#pragma once

#include "lefschetz/symplectic.hpp"

namespace lefschetz {
namespace sl2 {

/// L = ω∧·, raising the degree by 2.
Form L(const SymplecticStructure& s, const Form& phi);

/// Λ = i(ω♯), lowering the degree by 2; equals ⋆L⋆.
Form Lambda(const SymplecticStructure& s, const Form& phi);

/// Counting operator: multiplies a degree-r form by (n − r).
Form A(const SymplecticStructure& s, const Form& phi);

Form L_power(const SymplecticStructure& s, const Form& phi, int k);

/// Matrix of L^r from transverse degree n−r to degree n+r over the full
/// monomial bases. Square by symmetry of binomials; invertible for every
/// 0 ≤ r ≤ n (the pointwise Lefschetz isomorphism).
struct LefschetzPowerMatrix {
  int r = 0;
  int source_degree = 0;
  int target_degree = 0;
  RatMatrix matrix;
  std::size_t rank = 0;
  bool bijective = false;
};
LefschetzPowerMatrix lefschetz_power_matrix(const SymplecticStructure& s, int r);

/// φ = Σ_k L^k β_k with every β_k primitive (Λβ_k = 0), k running over
/// max(0, r−n) ≤ k ≤ ⌊r/2⌋. Unique; computed by one exact linear solve.
struct PrimitiveDecomposition {
  Form source;
  std::vector<std::pair<int, Form>> components; // (k, β_k), ascending k
};
PrimitiveDecomposition primitive_decompose(const SymplecticStructure& s, const Form& phi);

/// Λφ = 0, equivalently L^{n−r+1}φ = 0 in degree r ≤ n.
bool is_primitive(const SymplecticStructure& s, const Form& phi);

} // namespace sl2
} // namespace lefschetz
