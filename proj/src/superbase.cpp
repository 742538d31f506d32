#include "rootinv/superbase.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rootinv/errors.hpp"

namespace rootinv {

int slot_of(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw IndexError("conorm indices must be distinct and in 0..3");
  if (i > j)
    std::swap(i, j);
  if (i == 0)
    return 2 + j;  // p01 -> 3, p02 -> 4, p03 -> 5
  return 3 - (i + j - 2);  // p12 -> 2, p13 -> 1, p23 -> 0
}

Superbase make_superbase(const Basis3& b) {
  double scale = b.v1.length() * b.v2.length() * b.v3.length();
  if (!(std::fabs(det3(b)) > 1e-12 * scale))
    throw DegenerateBasisError("basis vectors are linearly dependent");
  return {{-(b.v1 + b.v2 + b.v3), b.v1, b.v2, b.v3}};
}

double VoForm::single(int i) const {
  switch (i) {
    case 0: return sq0;
    case 1: return sq1;
    case 2: return sq2;
    case 3: return sq3;
  }
  throw IndexError("vonorm index must be in 0..3");
}

double VoForm::pair(int i, int j) const {
  int s = slot_of(i, j);
  // {0,1}~{2,3}, {0,2}~{1,3}, {0,3}~{1,2}
  switch (s) {
    case 0: case 3: return sq01;
    case 1: case 4: return sq02;
    default: return sq03;
  }
}

double VoForm::max() const {
  auto v = values();
  return *std::max_element(v.begin(), v.end());
}

CoForm conorms(const Superbase& sb) {
  CoForm cf;
  for (int s = 0; s < 6; ++s)
    cf[s] = -sb[kSlotPairs[s][0]].dot(sb[kSlotPairs[s][1]]);
  return cf;
}

VoForm vonorms(const Superbase& sb) {
  return {sb[0].length_sq(), sb[1].length_sq(), sb[2].length_sq(), sb[3].length_sq(),
          (sb[0] + sb[1]).length_sq(), (sb[0] + sb[2]).length_sq(),
          (sb[0] + sb[3]).length_sq()};
}

CoForm conorms_from_vonorms(const VoForm& vf, double rel_tol) {
  if (std::fabs(vf.defect()) > rel_tol * vf.max())
    throw InconsistentVoFormError("vonorms violate the sum identity");
  CoForm cf;
  for (int s = 0; s < 6; ++s) {
    auto [i, j] = kSlotPairs[s];
    cf[s] = 0.5 * (vf.single(i) + vf.single(j) - vf.pair(i, j));
  }
  return cf;
}

VoForm vonorms_from_conorms(const CoForm& cf) {
  auto single = [&](int i) {
    double sum = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i)
        sum += cf.at(i, j);
    return sum;
  };
  // v_0i^2: S = {0, i} against its complement {j, k}
  auto pair0 = [&](int i) {
    double sum = 0;
    for (int j = 1; j < 4; ++j)
      if (j != i)
        sum += cf.at(0, j) + cf.at(i, j);
    return sum;
  };
  return {single(0), single(1), single(2), single(3), pair0(1), pair0(2), pair0(3)};
}

IndexPermutation::IndexPermutation(std::array<int, 4> images) : map_(images) {
  std::array<bool, 4> seen{};
  for (int x : images) {
    if (x < 0 || x > 3 || seen[x])
      throw IndexError("index permutation must be a bijection of {0,1,2,3}");
    seen[x] = true;
  }
}

IndexPermutation IndexPermutation::transposition(int i, int j) {
  std::array<int, 4> m{0, 1, 2, 3};
  if (i < 0 || j < 0 || i > 3 || j > 3)
    throw IndexError("transposition indices must be in 0..3");
  std::swap(m[i], m[j]);
  return IndexPermutation(m);
}

const std::array<IndexPermutation, 24>& IndexPermutation::all() {
  static const std::array<IndexPermutation, 24> table = [] {
    std::array<IndexPermutation, 24> t;
    std::array<int, 4> m{0, 1, 2, 3};
    int n = 0;
    do
      t[n++] = IndexPermutation(m);
    while (std::next_permutation(m.begin(), m.end()));
    return t;
  }();
  return table;
}

IndexPermutation IndexPermutation::after(const IndexPermutation& first) const {
  std::array<int, 4> m;
  for (int i = 0; i < 4; ++i)
    m[i] = map_[first.map_[i]];
  return IndexPermutation(m);
}

IndexPermutation IndexPermutation::inverse() const {
  std::array<int, 4> m;
  for (int i = 0; i < 4; ++i)
    m[map_[i]] = i;
  return IndexPermutation(m);
}

std::array<int, 6> IndexPermutation::slot_images() const {
  std::array<int, 6> dest;
  for (int s = 0; s < 6; ++s)
    dest[s] = slot_of(map_[kSlotPairs[s][0]], map_[kSlotPairs[s][1]]);
  return dest;
}

CoForm apply_index_permutation(const CoForm& cf, const IndexPermutation& sigma) {
  return {permute_slots(cf.p, sigma)};
}

std::vector<CoForm> orbit24(const CoForm& cf) {
  std::vector<CoForm> out;
  out.reserve(24);
  for (const IndexPermutation& sigma : IndexPermutation::all())
    out.push_back(apply_index_permutation(cf, sigma));
  return out;
}

int orbit24_distinct(const CoForm& cf) {
  auto orbit = orbit24(cf);
  return int(std::set<CoForm>(orbit.begin(), orbit.end()).size());
}

} // namespace rootinv
