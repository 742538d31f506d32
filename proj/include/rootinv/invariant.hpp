// Voronoi types, root forms and the root invariant of a 3D lattice.
//
// The root products r_ij = sqrt(p_ij) of an obtuse superbase are defined up
// to a permutation group that depends on the Voronoi type, read off from the
// zero conorms:
//
//   V1  no zeros                 full S4 on the 2x3 matrix (24 elements)
//   V2  one zero                 D4 on the 2x2 block beside the zero column
//   V3  two zeros, one column    S4 on the four non-zero entries
//   V4  two zeros sharing index  S3 on three entries, one entry fixed
//   V5  three zeros              S3 on the three non-zero entries
//
// The root invariant is the lexicographically smallest arrangement in the
// orbit; it coincides for two lattices iff they are isometric.

#ifndef ROOTINV_INVARIANT_HPP_
#define ROOTINV_INVARIANT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootinv/superbase.hpp"

namespace rootinv {

inline constexpr double kDefaultSnapTol = 1e-9;
inline constexpr double kDefaultCompareTol = 1e-9;

enum class VoronoiType { V1 = 1, V2, V3, V4, V5 };

std::string to_string(VoronoiType t);
// Accepts "V1".."V5"; throws ParseError otherwise.
VoronoiType parse_voronoi_type(std::string_view s);
// Number of values in the root invariant: 6, 5, 4, 4, 3.
int invariant_size(VoronoiType t);

struct RootForm {
  std::array<double, 6> r{};  // same slot order as CoForm

  double operator[](int slot) const { return r[slot]; }
  double at(int i, int j) const { return r[slot_of(i, j)]; }
  bool operator==(const RootForm&) const = default;
};

// values layout by type:
//   V1: (r23, r13, r12, r01, r02, r03) of the canonical root form
//   V2: (r01, r13, r12, r02, r03)
//   V3: four sorted values
//   V4: three sorted values, then the distinguished value
//   V5: three sorted values
struct RootInvariant {
  VoronoiType type = VoronoiType::V1;
  std::vector<double> values;

  bool operator==(const RootInvariant&) const = default;
  double max_value() const;
};

// Entries <= rel_tol * (max vonorm) become exactly 0. Throws NotObtuseError
// when an entry is below -rel_tol * (max vonorm).
CoForm snap_zeros(const CoForm& cf, double rel_tol = kDefaultSnapTol);

// Type from the exact zero pattern of a snapped coform. Throws
// DegenerateLatticeError for patterns no lattice has (more than three zeros,
// or a vanishing vonorm) and NotObtuseError for negative entries.
VoronoiType classify(const CoForm& snapped);

RootForm root_form(const CoForm& snapped);

// Throws TypePatternError when the zero pattern of rf does not match vtype.
// Orbit comparisons treat entries within rel_tol * (max entry) as equal and
// fall back to exact order only between tolerance-equal arrangements.
RootInvariant canonicalize(const RootForm& rf, VoronoiType vtype,
                           double rel_tol = kDefaultCompareTol);

struct InvariantOptions {
  double snap_tol = kDefaultSnapTol;
  double compare_tol = kDefaultCompareTol;
  int max_iters = 1000;
};

RootInvariant root_invariant_from_coform(const CoForm& obtuse, const InvariantOptions& opt = {});
RootInvariant root_invariant(const Basis3& basis, const InvariantOptions& opt = {});

// Equal type and max |difference| <= tol * (largest value of either).
bool invariants_equal(const RootInvariant& a, const RootInvariant& b,
                      double tol = kDefaultCompareTol);
bool isometric(const Basis3& b1, const Basis3& b2, double tol = kDefaultCompareTol);

// Returns s with b = s * a entrywise, estimated from the largest entries.
std::optional<double> similarity_factor(const RootInvariant& a, const RootInvariant& b,
                                        double tol = kDefaultCompareTol);
std::optional<double> similar(const Basis3& b1, const Basis3& b2,
                              double tol = kDefaultCompareTol);

struct ContinuityReport {
  int trials = 0;
  int skipped = 0;      // perturbed superbase not obtuse
  int violations = 0;   // |dr| above sqrt(2 l delta) + 1e-9
  double max_change = 0;
  double max_ratio = 0; // largest |dr| / sqrt(2 l delta)
};

// Perturbs v1, v2, v3 of the reduced obtuse superbase of b by random vectors
// of length <= delta / 3 (so every superbase vector moves by <= delta) and
// compares root products pairwise against sqrt(2 l delta).
ContinuityReport continuity_check(const Basis3& b, double delta, int trials,
                                  std::uint64_t seed = 1);

} // namespace rootinv
#endif
