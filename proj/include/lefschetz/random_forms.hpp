#pragma once

#include "lefschetz/basic_complex.hpp"
#include "lefschetz/symplectic.hpp"

#include <cstdint>
#include <stdexcept>

namespace lefschetz {

/// splitmix64; hand-rolled so that seeded runs are byte-identical across
/// platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive).
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

private:
  std::uint64_t state_;
};

/// Sparse random form: each monomial enters with probability 1/2, with a
/// uniform coefficient in {−3..3}. Small integers keep the exact arithmetic
/// fast and counterexamples readable.
Form random_transverse_form(Rng& rng, const SymplecticStructure& s, int degree);

/// Random rational combination of the degree-r basic basis (same coefficient
/// law), so differential-operator identities can be fuzzed without leaving
/// the basic complex.
Form random_basic_form(Rng& rng, const BasicComplex& complex, int degree);

Multivector random_transverse_vector(Rng& rng, const SymplecticStructure& s);

} // namespace lefschetz
