#include "rootinv/linalg.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "rootinv/errors.hpp"

namespace rootinv {

namespace {

// Exact values at the right angle, so that orthogonal cells embed exactly.
double cos_deg(double deg) {
  if (deg == 90.0)
    return 0.0;
  return std::cos(deg * std::numbers::pi / 180.0);
}

double sin_deg(double deg) {
  if (deg == 90.0)
    return 1.0;
  return std::sin(deg * std::numbers::pi / 180.0);
}

double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

double angle_deg(const Vec3& u, const Vec3& v) {
  double c = u.dot(v) / (u.length() * v.length());
  return rad2deg(std::acos(std::clamp(c, -1.0, 1.0)));
}

} // namespace

Basis3 basis_from_cell(const CellParams& p) {
  for (double len : {p.a, p.b, p.c})
    if (!std::isfinite(len) || len <= 0)
      throw RealizabilityError("cell lengths must be positive");
  for (double ang : {p.alpha, p.beta, p.gamma})
    if (!std::isfinite(ang) || ang <= 0 || ang >= 180)
      throw RealizabilityError("cell angles must lie strictly between 0 and 180");
  if (p.alpha + p.beta + p.gamma >= 360 || p.alpha >= p.beta + p.gamma ||
      p.beta >= p.alpha + p.gamma || p.gamma >= p.alpha + p.beta)
    throw RealizabilityError("cell angles do not form a parallelepiped");

  double ca = cos_deg(p.alpha), cb = cos_deg(p.beta), cg = cos_deg(p.gamma);
  double sg = sin_deg(p.gamma);
  Vec3 v1{p.a, 0, 0};
  Vec3 v2{p.b * cg, p.b * sg, 0};
  double x = p.c * cb;
  double y = p.c * (ca - cb * cg) / sg;
  double zz = p.c * p.c - x * x - y * y;
  if (!(zz > 0))
    throw RealizabilityError("cell Gram matrix is not positive definite");
  return {v1, v2, Vec3{x, y, std::sqrt(zz)}};
}

CellParams cell_from_basis(const Basis3& b) {
  return {b.v1.length(), b.v2.length(), b.v3.length(),
          angle_deg(b.v2, b.v3), angle_deg(b.v1, b.v3), angle_deg(b.v1, b.v2)};
}

double det3(const Basis3& b) { return b.v1.dot(b.v2.cross(b.v3)); }

double det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::int64_t det(const IMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = m[j][i];
  return r;
}

Mat3 to_real(const IMat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = double(m[i][j]);
  return r;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Basis3 transform(const Mat3& m, const Basis3& b) {
  auto row = [&](int i) {
    return b.v1 * m[i][0] + b.v2 * m[i][1] + b.v3 * m[i][2];
  };
  return {row(0), row(1), row(2)};
}

Basis3 transform(const IMat3& m, const Basis3& b) {
  return {b.combine(m[0]), b.combine(m[1]), b.combine(m[2])};
}

Basis3 rotate(const Mat3& q, const Basis3& b) {
  return {apply(q, b.v1), apply(q, b.v2), apply(q, b.v3)};
}

Basis3 scaled(const Basis3& b, double s) { return {b.v1 * s, b.v2 * s, b.v3 * s}; }

namespace {

void apply_op(IMat3& m, const ElementaryOp& op) {
  switch (op.kind) {
    case ElementaryOp::Kind::AddMultiple:
      for (int j = 0; j < 3; ++j)
        m[op.target][j] += op.factor * m[op.source][j];
      break;
    case ElementaryOp::Kind::Swap:
      std::swap(m[op.target], m[op.source]);
      break;
    case ElementaryOp::Kind::Negate:
      for (auto& x : m[op.target])
        x = -x;
      break;
  }
}

} // namespace

IMat3 unimodular_from_ops(std::span<const ElementaryOp> ops) {
  IMat3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (const ElementaryOp& op : ops)
    apply_op(m, op);
  return m;
}

IMat3 random_unimodular(std::uint64_t seed, int entry_bound) {
  if (entry_bound < 1)
    throw DomainError("entry_bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind_dist(0, 9);
  std::uniform_int_distribution<int> row_dist(0, 2);
  std::uniform_int_distribution<int> factor_dist(-entry_bound, entry_bound - 1);
  IMat3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int attempt = 0; attempt < 24; ++attempt) {
    int k = kind_dist(rng);
    ElementaryOp op{ElementaryOp::Kind::AddMultiple, row_dist(rng)};
    if (k < 6) {
      op.source = (op.target + 1 + row_dist(rng) % 2) % 3;
      int f = factor_dist(rng);
      op.factor = f >= 0 ? f + 1 : f;  // never zero
    } else if (k < 8) {
      op.kind = ElementaryOp::Kind::Swap;
      op.source = (op.target + 1 + row_dist(rng) % 2) % 3;
    } else {
      op.kind = ElementaryOp::Kind::Negate;
    }
    IMat3 next = m;
    apply_op(next, op);
    bool within = true;
    for (const auto& row : next)
      for (auto x : row)
        within = within && (x <= entry_bound && x >= -entry_bound);
    if (within)
      m = next;
  }
  return m;
}

Mat3 random_orthogonal(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Vec3 a{normal(rng), normal(rng), normal(rng)};
    Vec3 b{normal(rng), normal(rng), normal(rng)};
    double la = a.length();
    if (la < 1e-6)
      continue;
    Vec3 e1 = a * (1 / la);
    Vec3 w = b - e1 * e1.dot(b);
    double lw = w.length();
    if (lw < 1e-6)
      continue;
    Vec3 e2 = w * (1 / lw);
    Vec3 e3 = e1.cross(e2);
    if (rng() & 1)
      e3 = -e3;
    return {{{e1.x, e1.y, e1.z}, {e2.x, e2.y, e2.z}, {e3.x, e3.y, e3.z}}};
  }
}

} // namespace rootinv
