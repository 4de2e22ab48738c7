#include "lefschetz/frame.hpp"

#include <bit>
#include <stdexcept>

namespace lefschetz {

FramePtr make_frame(int leaf_dim, int half_transverse, std::vector<std::string> names) {
  if (leaf_dim < 0 || half_transverse < 0)
    throw std::invalid_argument("frame dimensions must be nonnegative");
  const int m = leaf_dim + 2 * half_transverse;
  if (m > 30) throw std::invalid_argument("frame dimension too large");
  if (names.empty()) {
    names.reserve(m);
    for (int i = 1; i <= m; ++i) names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != m)
    throw std::invalid_argument("frame needs exactly p + 2n names");
  Frame f;
  f.leaf_dim = leaf_dim;
  f.half_transverse = half_transverse;
  f.names = std::move(names);
  return std::make_shared<const Frame>(std::move(f));
}

bool same_frame(const FramePtr& a, const FramePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::vector<Mask> monomials(Mask allowed, int degree) {
  std::vector<Mask> out;
  if (degree < 0) return out;
  if (degree == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (allowed & (Mask(1) << i)) idx.push_back(i);
  const int n = static_cast<int>(idx.size());
  if (degree > n) return out;
  // enumerate index combinations; emitted masks are then sorted numerically
  std::vector<int> c(degree);
  for (int i = 0; i < degree; ++i) c[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : c) m |= Mask(1) << idx[i];
    out.push_back(m);
    int i = degree - 1;
    while (i >= 0 && c[i] == n - degree + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < degree; ++j) c[j] = c[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mask_degree(Mask m) { return std::popcount(m); }

} // namespace lefschetz
