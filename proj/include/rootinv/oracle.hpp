// Brute-force checks over a window of integer coefficients: Voronoi vectors
// from 2-Lambda classes, exhaustive obtuse superbase enumeration and the
// distance vector DC7.

#ifndef ROOTINV_ORACLE_HPP_
#define ROOTINV_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "rootinv/linalg.hpp"
#include "rootinv/reduction.hpp"
#include "rootinv/superbase.hpp"

namespace rootinv {

inline constexpr std::array<int, 3> kWindowSchedule{3, 6, 8};

// Lattice vectors v + 2L of one parity class, restricted to the window.
struct TwoLambdaClass {
  IVec3 representative{};            // in {0,1}^3, not all zero
  std::vector<IVec3> shortest_vectors;
  double norm_sq = 0;

  // Exactly one pair +-v attains the minimum.
  bool strict() const { return shortest_vectors.size() == 2; }
};

// The 7 non-zero parity classes with their shortest vectors among
// coefficients in [-bound, bound]^3. Norm ties are taken within 1e-9
// relative. Throws DomainError for bound < 2 and WindowTooSmallError if a
// shortest vector touches the window boundary.
std::array<TwoLambdaClass, 7> voronoi_vectors(const Basis3& basis, int bound);
// Same after reducing the basis, growing the window along kWindowSchedule.
// Coefficients are over the reduced basis returned in `reduced`.
std::array<TwoLambdaClass, 7> voronoi_vectors_auto(const Basis3& basis, Basis3* reduced = nullptr);
int strict_count(const Basis3& basis);

// 100 x1 + 10 x2 + x3.
std::int64_t digital_image(const IVec3& c);

// All obtuse superbases {u0, u1, u2, u3} with coefficients in
// [-bound, bound]^3 over `basis`, each stored as its four coefficient
// triples in sorted order; the list itself is sorted. Conorms down to
// -1e-12 * (max squared length) count as non-negative. Throws DomainError
// for bound < 2 and WindowTooSmallError if a found vector touches the
// window boundary.
std::vector<SuperbaseCoefficients> enumerate_obtuse_superbases(const Basis3& basis, int bound);
// Reduces first, grows the window along kWindowSchedule and returns
// coefficients over the input basis.
std::vector<SuperbaseCoefficients> enumerate_obtuse_superbases(const Basis3& basis);

// Sorted squared lengths of the four vectors.
std::array<double, 4> squared_length_signature(const Basis3& basis,
                                               const SuperbaseCoefficients& c);

struct DC7Vector {
  std::array<double, 7> d{};  // non-decreasing
};

// Sorted square roots of the seven vonorms of the reduced superbase.
DC7Vector dc7(const Basis3& basis);
double dc7_distance(const DC7Vector& a, const DC7Vector& b);

// The pair (5+q23, 3+q13, 4+q12; 1+q01, 1+q02, 4+q03) and
// (6+q23, 3+q13, 3+q12; 2+q01, 1+q02, 3+q03); q in slot order.
// Throws DomainError for a negative or non-finite q.
std::pair<CoForm, CoForm> dc7_family(const std::array<double, 6>& q);

} // namespace rootinv
#endif
