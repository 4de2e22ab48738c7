#pragma once

// Shared builders for the test suites: pure transverse frames for the
// exterior-algebra tests and a few synthetic models that exercise paths the
// catalog does not (non-isoparametric mean curvature, a strict basic
// subcomplex, higher transverse dimension with nonzero curvature).

#include "lefschetz/model_library.hpp"
#include "lefschetz/operators.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace testsupport {

using namespace lefschetz;

/// Frame with no foliation and the standard ω = Σ v_a*∧w_a*, with basis
/// order v_1, w_1, v_2, w_2, ...
inline SymplecticStructure standard_symplectic(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a) {
    names.push_back("v" + std::to_string(a));
    names.push_back("w" + std::to_string(a));
  }
  auto frame = make_frame(0, n, std::move(names));
  Form omega(frame, 2);
  for (int a = 0; a < n; ++a)
    omega.add_term((Mask(1) << (2 * a)) | (Mask(1) << (2 * a + 1)), Rational(1));
  return make_symplectic(frame, omega);
}

inline Form omega_entry(const FramePtr& frame,
                        const std::vector<std::tuple<int, int, Rational>>& entries) {
  Form omega(frame, 2);
  for (const auto& [i, j, c] : entries)
    omega.add_term((Mask(1) << i) | (Mask(1) << j), c);
  return omega;
}

/// sol_hyperbolic extended by 2(n−1) abelian transverse directions; keeps
/// κ = e1* ≠ 0 and a nontrivial differential in any half-dimension n.
inline LieModel sol_torus_product(int n) {
  std::vector<std::string> names = {"e2", "e1", "e3"};
  for (int k = 4; k < 4 + 2 * (n - 1); ++k) names.push_back("e" + std::to_string(k));
  auto frame = make_frame(1, n, std::move(names));
  LieModel model("sol_torus_product_n" + std::to_string(n), frame);
  model.set_bracket(0, 1, {{0, Rational(-1)}});
  model.set_bracket(1, 2, {{2, Rational(-1)}});
  std::vector<std::tuple<int, int, Rational>> entries = {{1, 2, Rational(1)}};
  for (int a = 0; a < n - 1; ++a)
    entries.push_back({3 + 2 * a, 4 + 2 * a, Rational(1)});
  model.omega = omega_entry(frame, entries);
  return model;
}

/// Foliation along the nilpotent direction of sl(2): validation passes but
/// the mean curvature form is not basic, so every κ-gated path must refuse.
inline LieModel sl2_twisted() {
  auto frame = make_frame(1, 1, {"e1", "e2", "e3"});
  LieModel model("sl2_twisted", frame);
  model.set_bracket(0, 1, {{0, Rational(1)}});  // [e1, e2] = e1
  model.set_bracket(0, 2, {{1, Rational(1)}});  // [e1, e3] = e2
  model.set_bracket(1, 2, {{2, Rational(1)}});  // [e2, e3] = e3
  model.omega = omega_entry(frame, {{1, 2, Rational(1)}});
  return model;
}

/// Nilpotent twist with a strict basic subcomplex (dims 1,3,4,3,1 inside the
/// full 1,4,6,4,1): κ = 0 so the whole κ-pipeline stays available.
inline LieModel nil_twist() {
  auto frame = make_frame(1, 2, {"f", "e1", "e2", "e3", "e4"});
  LieModel model("nil_twist", frame);
  model.set_bracket(0, 1, {{2, Rational(1)}});  // [f, e1] = e2
  model.omega = omega_entry(frame, {{1, 2, Rational(1)}, {3, 4, Rational(1)}});
  return model;
}

/// Wedge of the named covectors in the listed order, so the sign of the
/// expectation matches the notation it was written in.
/// Two-dimensional foliation twisted into one transverse direction:
/// [f1, a] = f1 gives κ = −a* with p = 2, and the leaf algebra is abelian
/// while the full algebra is not unimodular. Exercises the multi-contraction
/// mean-curvature path and the unimodularity gate.
inline LieModel affine_twist_p2() {
  auto frame = make_frame(2, 1, {"f1", "f2", "a", "b"});
  LieModel model("affine_twist_p2", frame);
  model.set_bracket(0, 2, {{0, Rational(1)}}); // [f1, a] = f1
  model.omega = omega_entry(frame, {{2, 3, Rational(1)}});
  return model;
}

inline Form monomial_by_names(const FramePtr& frame, const std::vector<std::string>& names,
                              Rational coeff = Rational(1)) {
  Form out = Form::unit(frame, std::move(coeff));
  for (const auto& name : names) {
    bool found = false;
    for (int i = 0; i < frame->dim(); ++i)
      if (frame->names[i] == name) {
        out = wedge(out, Form::monomial(frame, Mask(1) << i));
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown basis name " + name);
  }
  return out;
}

inline Multivector vector_by_name(const FramePtr& frame, const std::string& name,
                                  Rational coeff = Rational(1)) {
  for (int i = 0; i < frame->dim(); ++i)
    if (frame->names[i] == name)
      return Multivector::monomial(frame, Mask(1) << i, std::move(coeff));
  throw std::invalid_argument("unknown basis name " + name);
}

} // namespace testsupport
