// Superbases and their vonorm/conorm algebra.
//
// A superbase is v0, v1, v2, v3 with v0 + v1 + v2 + v3 = 0. Its six conorms
// p_ij = -v_i.v_j are stored as the 2x3 matrix
//
//     p23 p13 p12
//     p01 p02 p03
//
// in slot order (p23, p13, p12, p01, p02, p03): column c holds the pair of
// conorms whose index pairs are complementary, {0,c} below the other one.
// Its seven vonorms are the squared lengths v_i^2 and v_0i^2 = (v_0+v_i)^2.

#ifndef ROOTINV_SUPERBASE_HPP_
#define ROOTINV_SUPERBASE_HPP_

#include <array>
#include <vector>

#include "rootinv/linalg.hpp"

namespace rootinv {

inline constexpr std::array<std::array<int, 2>, 6> kSlotPairs{
    {{2, 3}, {1, 3}, {1, 2}, {0, 1}, {0, 2}, {0, 3}}};

// Slot of the unordered pair {i, j}, i != j, both in 0..3.
int slot_of(int i, int j);

struct Superbase {
  std::array<Vec3, 4> v;

  const Vec3& operator[](int i) const { return v[i]; }
  Basis3 basis() const { return {v[1], v[2], v[3]}; }
};

// Adds v0 = -v1 - v2 - v3. Throws DegenerateBasisError for a flat basis.
Superbase make_superbase(const Basis3& basis);

struct CoForm {
  std::array<double, 6> p{};

  double operator[](int slot) const { return p[slot]; }
  double& operator[](int slot) { return p[slot]; }
  double at(int i, int j) const { return p[slot_of(i, j)]; }
  bool operator==(const CoForm&) const = default;
  auto operator<=>(const CoForm&) const = default;
};

struct VoForm {
  double sq0 = 0, sq1 = 0, sq2 = 0, sq3 = 0;
  double sq01 = 0, sq02 = 0, sq03 = 0;

  std::array<double, 7> values() const { return {sq0, sq1, sq2, sq3, sq01, sq02, sq03}; }
  // v_i^2 for i in 0..3.
  double single(int i) const;
  // v_ij^2 = v_kl^2 for the pair {i, j}.
  double pair(int i, int j) const;
  double max() const;
  // sq0 + sq1 + sq2 + sq3 - sq01 - sq02 - sq03, which is 4 * p0 = 0.
  double defect() const { return sq0 + sq1 + sq2 + sq3 - sq01 - sq02 - sq03; }
  bool operator==(const VoForm&) const = default;
};

CoForm conorms(const Superbase& sb);
VoForm vonorms(const Superbase& sb);

// p_ij = (v_i^2 + v_j^2 - v_ij^2) / 2. Throws InconsistentVoFormError when
// |defect| exceeds rel_tol * max vonorm.
CoForm conorms_from_vonorms(const VoForm& vf, double rel_tol = 1e-9);
// v_S^2 = sum of p_ij over i in S, j outside S.
VoForm vonorms_from_conorms(const CoForm& cf);

// A permutation of the superbase indices 0..3.
class IndexPermutation {
public:
  IndexPermutation() : map_{0, 1, 2, 3} {}
  // Throws IndexError unless `images` is a bijection of {0,1,2,3}.
  explicit IndexPermutation(std::array<int, 4> images);

  static IndexPermutation transposition(int i, int j);
  // All 24 permutations in lexicographic order of their image tuples.
  static const std::array<IndexPermutation, 24>& all();

  int operator()(int i) const { return map_[i]; }
  const std::array<int, 4>& images() const { return map_; }
  // (*this) after `first`: i -> (*this)(first(i)).
  IndexPermutation after(const IndexPermutation& first) const;
  IndexPermutation inverse() const;
  // Destination slot of every conorm slot under p_ij -> p_{s(i)s(j)}.
  std::array<int, 6> slot_images() const;
  bool operator==(const IndexPermutation&) const = default;

private:
  std::array<int, 4> map_;
};

// Moves the value in slot {i,j} to slot {sigma(i), sigma(j)}.
template <typename T>
std::array<T, 6> permute_slots(const std::array<T, 6>& in, const IndexPermutation& sigma) {
  std::array<T, 6> out{};
  auto dest = sigma.slot_images();
  for (int s = 0; s < 6; ++s)
    out[dest[s]] = in[s];
  return out;
}

CoForm apply_index_permutation(const CoForm& cf, const IndexPermutation& sigma);

// Images of cf under all 24 index permutations, duplicates kept.
std::vector<CoForm> orbit24(const CoForm& cf);
// Number of distinct coforms (exact comparison) in orbit24(cf).
int orbit24_distinct(const CoForm& cf);

} // namespace rootinv
#endif
