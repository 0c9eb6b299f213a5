#pragma once

#include <array>
#include <complex>

namespace qpert {

using complex = std::complex<double>;

/// Real quaternion w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds a complex number a + b i.
  static constexpr Quaternion from_complex(complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

/// Hamilton product. Associative, not commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_squared(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

double norm(const Quaternion& q);

bool is_finite(const Quaternion& q);

/// Complex-pair form q = z1 + j z2.
///
/// With z1 = w + x i and z2 = y - z i the product j z2 expands to y j + z k,
/// so the pair reproduces q exactly. Moving j past a complex number
/// conjugates it: j c = conj(c) j.
struct SymplecticPair {
  complex z1;
  complex z2;

  friend bool operator==(const SymplecticPair&, const SymplecticPair&) = default;
};

constexpr SymplecticPair to_symplectic(const Quaternion& q) {
  return {complex(q.w, q.x), complex(q.y, -q.z)};
}

constexpr Quaternion from_symplectic(const SymplecticPair& p) {
  return {p.z1.real(), p.z1.imag(), p.z2.real(), -p.z2.imag()};
}

/// Row-major 2x2 complex matrix.
struct ComplexBlock {
  std::array<complex, 4> a{};

  complex operator()(int row, int col) const { return a[static_cast<std::size_t>(2 * row + col)]; }
  complex& operator()(int row, int col) { return a[static_cast<std::size_t>(2 * row + col)]; }

  friend bool operator==(const ComplexBlock&, const ComplexBlock&) = default;
};

ComplexBlock operator*(const ComplexBlock& lhs, const ComplexBlock& rhs);

/// Matrix of left multiplication by z1 + j z2 acting on (phi, psi) ~ phi + j psi:
/// [[z1, -conj(z2)], [z2, conj(z1)]]. The map is an injective algebra
/// homomorphism, so embed_block(q) * embed_block(r) == embed_block(q * r).
ComplexBlock embed_block(complex z1, complex z2);

inline ComplexBlock embed_block(const Quaternion& q) {
  const auto p = to_symplectic(q);
  return embed_block(p.z1, p.z2);
}

}  // namespace qpert
