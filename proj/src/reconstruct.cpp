#include "rootinv/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "rootinv/errors.hpp"

namespace rootinv {

namespace {

void require(bool ok, const char* msg) {
  if (!ok)
    throw InvalidInvariantError(msg);
}

// Clamps tiny negative radicands; anything below -1e-12 * scale is an error.
double safe_sqrt(double x, double scale) {
  if (x < -1e-12 * scale)
    throw NotRealizableError("Gram matrix is not positive definite");
  return std::sqrt(std::max(x, 0.0));
}

} // namespace

CoForm coform_from_invariant(const RootInvariant& ri) {
  const auto& v = ri.values;
  require(int(v.size()) == invariant_size(ri.type), "wrong number of values for the type");
  for (double x : v)
    require(std::isfinite(x) && x >= 0, "invariant values must be finite and non-negative");
  if (std::any_of(v.begin(), v.end(), [](double x) { return x == 0; }))
    throw NotRealizableError("a zero value leaves no lattice of type " + to_string(ri.type));
  RootForm rf;
  switch (ri.type) {
    case VoronoiType::V1: rf.r = {v[0], v[1], v[2], v[3], v[4], v[5]}; break;
    case VoronoiType::V2: rf.r = {0, v[1], v[2], v[0], v[3], v[4]}; break;
    case VoronoiType::V3: rf.r = {0, v[0], v[1], 0, v[2], v[3]}; break;
    case VoronoiType::V4: rf.r = {0, 0, v[0], v[1], v[2], v[3]}; break;
    case VoronoiType::V5: rf.r = {0, 0, 0, v[0], v[1], v[2]}; break;
  }
  RootInvariant canonical = canonicalize(rf, ri.type);
  double scale = canonical.max_value();
  for (std::size_t k = 0; k < v.size(); ++k)
    require(std::fabs(canonical.values[k] - v[k]) <= kDefaultCompareTol * scale,
            "values are not in canonical order");
  CoForm cf;
  for (int s = 0; s < 6; ++s)
    cf[s] = rf.r[s] * rf.r[s];
  return cf;
}

Superbase superbase_from_coform(const CoForm& cf) {
  for (double p : cf.p)
    if (!std::isfinite(p))
      throw NotRealizableError("conorms must be finite");
  double g00 = cf.at(0, 1) + cf.at(0, 2) + cf.at(0, 3);
  double g11 = cf.at(0, 1) + cf.at(1, 2) + cf.at(1, 3);
  double g22 = cf.at(0, 2) + cf.at(1, 2) + cf.at(2, 3);
  double g01 = -cf.at(0, 1), g02 = -cf.at(0, 2), g12 = -cf.at(1, 2);
  double scale = std::max({std::fabs(g00), std::fabs(g11), std::fabs(g22)});
  if (!(g00 > 0))
    throw NotRealizableError("v0 has non-positive squared length");
  double a = std::sqrt(g00);
  Vec3 v0{a, 0, 0};
  double x1 = g01 / a;
  double y1 = safe_sqrt(g11 - x1 * x1, scale);
  if (y1 == 0)
    throw NotRealizableError("v0 and v1 are parallel");
  Vec3 v1{x1, y1, 0};
  double x2 = g02 / a;
  double y2 = (g12 - x1 * x2) / y1;
  double z2 = safe_sqrt(g22 - x2 * x2 - y2 * y2, scale);
  if (z2 == 0)
    throw NotRealizableError("superbase vectors are coplanar");
  Vec3 v2{x2, y2, z2};
  return {{v0, v1, v2, -(v0 + v1 + v2)}};
}

RootInvariant round_trip(const RootInvariant& ri, const InvariantOptions& opt) {
  Superbase sb = superbase_from_coform(coform_from_invariant(ri));
  return root_invariant(sb.basis(), opt);
}

} // namespace rootinv
