// Fixed-size 3D vectors, bases and unit-cell parameters.

#ifndef ROOTINV_LINALG_HPP_
#define ROOTINV_LINALG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

namespace rootinv {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double d) const { return {x * d, y * d, z * d}; }
  Vec3& operator+=(const Vec3& o) { *this = *this + o; return *this; }
  bool operator==(const Vec3&) const = default;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double length_sq() const { return dot(*this); }
  double length() const { return std::sqrt(length_sq()); }
};

inline Vec3 operator*(double d, const Vec3& v) { return v * d; }

using IVec3 = std::array<std::int64_t, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using IMat3 = std::array<std::array<std::int64_t, 3>, 3>;

// Three generating vectors of a lattice, stored as rows.
struct Basis3 {
  Vec3 v1, v2, v3;

  const Vec3& operator[](int i) const { return i == 0 ? v1 : i == 1 ? v2 : v3; }
  // Lattice vector with integer coefficients c over (v1, v2, v3).
  Vec3 combine(const IVec3& c) const {
    return v1 * double(c[0]) + v2 * double(c[1]) + v3 * double(c[2]);
  }
  bool operator==(const Basis3&) const = default;
};

// Lengths a, b, c and angles alpha (v2,v3), beta (v1,v3), gamma (v1,v2)
// in degrees.
struct CellParams {
  double a, b, c;
  double alpha, beta, gamma;
};

// Lower-triangular embedding: v1 on the x-axis, v2 in the xy-plane, v3.z > 0.
// Throws RealizabilityError for parameters that are not a parallelepiped.
Basis3 basis_from_cell(const CellParams& params);
CellParams cell_from_basis(const Basis3& basis);

// Signed volume: determinant of the matrix with columns v1, v2, v3.
double det3(const Basis3& basis);
double det(const Mat3& m);
std::int64_t det(const IMat3& m);

Mat3 identity3();
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& m);
Mat3 to_real(const IMat3& m);
Vec3 apply(const Mat3& m, const Vec3& v);

// Basis change: new i-th vector is sum_j m[i][j] * basis[j].
Basis3 transform(const Mat3& m, const Basis3& basis);
Basis3 transform(const IMat3& m, const Basis3& basis);
// Ambient map x -> q x applied to every basis vector.
Basis3 rotate(const Mat3& q, const Basis3& basis);
Basis3 scaled(const Basis3& basis, double s);

// Elementary row operations over the integers; each has determinant +-1.
struct ElementaryOp {
  enum class Kind { AddMultiple, Swap, Negate };
  Kind kind;
  int target;      // row changed
  int source = 0;  // AddMultiple and Swap only
  std::int64_t factor = 1;  // AddMultiple only
};

IMat3 unimodular_from_ops(std::span<const ElementaryOp> ops);

// Integer matrix with |det| = 1 and all |entries| <= entry_bound, built from
// random elementary operations. Deterministic for a fixed seed.
IMat3 random_unimodular(std::uint64_t seed, int entry_bound);

// Orthogonal matrix from the QR factorisation of a Gaussian matrix; about
// half of the seeds give a reflection (det = -1).
Mat3 random_orthogonal(std::uint64_t seed);

} // namespace rootinv
#endif
