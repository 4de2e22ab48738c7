#pragma once

#include "lefschetz/frame.hpp"
#include "lefschetz/rational.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace lefschetz {

enum class Variance { covariant, contravariant };

/// Homogeneous element of the exterior algebra over a frame: a sparse table
/// from strictly increasing index sets (stored as bit masks) to rational
/// coefficients. Zero coefficients are never stored. The zero element is
/// degree-agnostic: it combines additively with any degree, which keeps
/// operator algebra free of empty-degree bookkeeping.
///
/// Covariant elements are forms (printed e1*∧e2*), contravariant ones are
/// multivectors (printed e1∧e2). Both are immutable in spirit: every
/// operation returns a new value.
template <Variance V>
class Element {
public:
  Element() = default;
  Element(FramePtr frame, int degree) : frame_(std::move(frame)), degree_(degree) {
    if (!frame_) throw std::invalid_argument("element needs a frame");
    if (degree_ < 0 || degree_ > frame_->dim())
      throw std::invalid_argument("element degree out of range");
  }

  static Element monomial(FramePtr frame, Mask key, Rational coeff = Rational(1)) {
    Element e(std::move(frame), mask_degree(key));
    e.add_term(key, std::move(coeff));
    return e;
  }
  static Element unit(FramePtr frame, Rational coeff = Rational(1)) {
    return monomial(std::move(frame), 0, std::move(coeff));
  }

  const FramePtr& frame() const { return frame_; }
  int degree() const { return degree_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(Mask key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Mask support() const {
    Mask s = 0;
    for (const auto& [k, c] : terms_) s |= k;
    return s;
  }

  void add_term(Mask key, Rational coeff) {
    if (mask_degree(key) != degree_)
      throw std::invalid_argument("term degree does not match element degree");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    require_compatible(o);
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_compatible(o);
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Element& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element e) { return e *= c; }
  friend Element operator-(Element e) { return e *= Rational(-1); }

  bool operator==(const Element& o) const {
    if (!same_frame(frame_, o.frame_)) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  std::string to_string() const;

private:
  void require_compatible(const Element& o) const {
    if (!same_frame(frame_, o.frame_))
      throw std::invalid_argument("frame mismatch");
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
      throw std::invalid_argument("degree mismatch");
  }

  FramePtr frame_;
  int degree_ = 0;
  std::map<Mask, Rational> terms_;
};

using Form = Element<Variance::covariant>;
using Multivector = Element<Variance::contravariant>;

/// Parity sign accumulated when moving the factors of `b` past those of `a`
/// to merge two disjoint increasing index sets.
int merge_sign(Mask a, Mask b);

template <Variance V>
Element<V> wedge(const Element<V>& a, const Element<V>& b) {
  if (!same_frame(a.frame(), b.frame())) throw std::invalid_argument("wedge: frame mismatch");
  if (a.is_zero() || b.is_zero() || a.degree() + b.degree() > a.frame()->dim())
    return Element<V>(a.frame(), 0);
  Element<V> out(a.frame(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka & kb) continue;
      const int s = merge_sign(ka, kb);
      out.add_term(ka | kb, s > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

/// Interior product i(P)φ. For a decomposable P = X_1∧…∧X_r the factors act
/// in reversed order, i(X_r)…i(X_1)φ; that convention fixes every sign in
/// the star operator and its adjoints. deg(P) > deg(φ) gives 0.
Form contract(const Multivector& p, const Form& phi);

/// i(e_k)φ for a single frame direction.
Form contract_dir(int index, const Form& phi);

std::string mask_to_string(const Frame& frame, Mask key, bool covariant);

template <Variance V>
std::string Element<V>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string key = mask_to_string(*frame_, k, V == Variance::covariant);
    if (key.empty()) {
      out += lefschetz::to_string(mag);
    } else {
      if (mag != 1) out += lefschetz::to_string(mag) + "·";
      out += key;
    }
  }
  return out;
}

} // namespace lefschetz
