#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lefschetz {

/// Basis subset, one bit per frame index (bit i = frame index i, 0-based).
using Mask = std::uint32_t;

/// A fixed frame e_1..e_m for the ambient algebra. The first `leaf_dim`
/// indices span the foliation; the remaining 2n span the transverse
/// distribution. All forms and multivectors are coefficient tables over
/// the exterior basis of one frame.
struct Frame {
  int leaf_dim = 0;        // p
  int half_transverse = 0; // n
  std::vector<std::string> names;

  int dim() const { return leaf_dim + 2 * half_transverse; }
  bool is_leaf_index(int i) const { return i < leaf_dim; }

  Mask leaf_mask() const { return (Mask(1) << leaf_dim) - 1; }
  Mask transverse_mask() const {
    return ((Mask(1) << dim()) - 1) & ~leaf_mask();
  }

  bool operator==(const Frame& o) const = default;
};

using FramePtr = std::shared_ptr<const Frame>;

/// Frame with default names e1..em when none are given.
FramePtr make_frame(int leaf_dim, int half_transverse,
                    std::vector<std::string> names = {});

bool same_frame(const FramePtr& a, const FramePtr& b);

/// All degree-`degree` monomial masks drawn from `allowed`, in increasing
/// numeric mask order. This ordering is the canonical basis ordering used
/// everywhere (bases, matrices, printing).
std::vector<Mask> monomials(Mask allowed, int degree);

int mask_degree(Mask m);

} // namespace lefschetz
