// Reduction of an arbitrary superbase to an obtuse one (all conorms >= 0).
//
// One step on a pair (i, j) with k, l the remaining indices replaces
//   v_i -> -v_i,  v_j -> v_j,  v_k -> v_i + v_k,  v_l -> v_i + v_l.
// With eps = v_i.v_j the conorms change as
//   q_ij = eps,       q_kl = p_kl + eps,
//   q_jk = p_jk - eps, q_jl = p_jl - eps,
//   q_ik = p_il - eps, q_il = p_ik - eps,
// and the vonorm v_ij^2 drops by 4 eps while the other six are permuted.

#ifndef ROOTINV_REDUCTION_HPP_
#define ROOTINV_REDUCTION_HPP_

#include <array>
#include <vector>

#include "rootinv/errors.hpp"
#include "rootinv/superbase.hpp"

namespace rootinv {

struct ReductionStep {
  int i, j;
  double epsilon;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  int iterations = 0;
};

struct NonTerminationError : Error {
  NonTerminationError(const std::string& what, ReductionTrace t)
    : Error(what), trace(std::move(t)) {}
  ReductionTrace trace;
};

// Integer coordinates of the four superbase vectors over an input basis.
using SuperbaseCoefficients = std::array<IVec3, 4>;

// The remaining two indices (k < l) for a pair i != j.
std::array<int, 2> complement_pair(int i, int j);

// Throws IndexError for i == j or indices outside 0..3.
Superbase reduction_step(const Superbase& sb, int i, int j);
SuperbaseCoefficients reduction_step(const SuperbaseCoefficients& c, int i, int j);
// Closed-form conorm update; eps is -p_ij.
CoForm reduction_step_conorms(const CoForm& cf, int i, int j);

struct Reduction {
  Superbase superbase;
  ReductionTrace trace;
  SuperbaseCoefficients coefficients;  // over the input basis
};

inline constexpr int kDefaultMaxIterations = 1000;

// Repeatedly applies a step at the most negative conorm (ties: slot order)
// until every conorm is >= -1e-12 * max vonorm. Throws NonTerminationError
// after max_iters steps and DegenerateBasisError for a flat basis.
Reduction reduce_to_obtuse(const Basis3& basis, int max_iters = kDefaultMaxIterations);

} // namespace rootinv
#endif
