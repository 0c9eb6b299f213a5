#include "qpert/quaternion.hpp"

#include <cmath>

namespace qpert {

double norm(const Quaternion& q) {
  // hypot chains keep large components from overflowing the square.
  return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z));
}

bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

ComplexBlock operator*(const ComplexBlock& lhs, const ComplexBlock& rhs) {
  ComplexBlock out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
    }
  }
  return out;
}

ComplexBlock embed_block(complex z1, complex z2) {
  ComplexBlock b;
  b(0, 0) = z1;
  b(0, 1) = -std::conj(z2);
  b(1, 0) = z2;
  b(1, 1) = std::conj(z1);
  return b;
}

}  // namespace qpert
