// Rebuilding an explicit obtuse superbase from a root invariant.

#ifndef ROOTINV_RECONSTRUCT_HPP_
#define ROOTINV_RECONSTRUCT_HPP_

#include "rootinv/invariant.hpp"
#include "rootinv/superbase.hpp"

namespace rootinv {

// Places the values into a fixed template of their type and squares them:
//   V1  (r23, r13, r12; r01, r02, r03)
//   V2  (0, r13, r12; r01, r02, r03)
//   V3  (0, x, y; 0, z, w)
//   V4  (0, 0, x; y, z, d)      d distinguished
//   V5  (0, 0, 0; a, b, c)
// Throws InvalidInvariantError for a wrong length, negative or non-finite
// values, or values out of canonical order, and NotRealizableError for a
// zero value (the template would change type or collapse).
CoForm coform_from_invariant(const RootInvariant& ri);

// Superbase with v0 on the positive x-axis, v1 in the upper half of the
// xy-plane and v2.z >= 0. Throws NotRealizableError unless the Gram matrix of
// (v0, v1, v2) is positive definite.
Superbase superbase_from_coform(const CoForm& cf);

// Invariant of the superbase rebuilt from ri.
RootInvariant round_trip(const RootInvariant& ri, const InvariantOptions& opt = {});

} // namespace rootinv
#endif
