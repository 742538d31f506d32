#include "rootinv/reduction.hpp"

#include <cmath>
#include <string>

namespace rootinv {

namespace {

void check_pair(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw IndexError("reduction step needs two distinct indices in 0..3");
}

Superbase from_coefficients(const Basis3& basis, const SuperbaseCoefficients& c) {
  Vec3 v1 = basis.combine(c[1]), v2 = basis.combine(c[2]), v3 = basis.combine(c[3]);
  return {{-(v1 + v2 + v3), v1, v2, v3}};
}

} // namespace

std::array<int, 2> complement_pair(int i, int j) {
  check_pair(i, j);
  std::array<int, 2> kl{};
  int n = 0;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j)
      kl[n++] = m;
  return kl;
}

Superbase reduction_step(const Superbase& sb, int i, int j) {
  auto [k, l] = complement_pair(i, j);
  Superbase out = sb;
  out.v[i] = -sb[i];
  out.v[k] = sb[i] + sb[k];
  out.v[l] = sb[i] + sb[l];
  return out;
}

SuperbaseCoefficients reduction_step(const SuperbaseCoefficients& c, int i, int j) {
  auto [k, l] = complement_pair(i, j);
  SuperbaseCoefficients out = c;
  for (int n = 0; n < 3; ++n) {
    out[i][n] = -c[i][n];
    out[k][n] = c[i][n] + c[k][n];
    out[l][n] = c[i][n] + c[l][n];
  }
  return out;
}

CoForm reduction_step_conorms(const CoForm& p, int i, int j) {
  auto [k, l] = complement_pair(i, j);
  double eps = -p.at(i, j);
  CoForm q;
  q[slot_of(i, j)] = eps;
  q[slot_of(j, k)] = p.at(j, k) - eps;
  q[slot_of(j, l)] = p.at(j, l) - eps;
  q[slot_of(i, k)] = p.at(i, l) - eps;
  q[slot_of(i, l)] = p.at(i, k) - eps;
  q[slot_of(k, l)] = p.at(k, l) + eps;
  return q;
}

Reduction reduce_to_obtuse(const Basis3& basis, int max_iters) {
  if (max_iters < 1)
    throw DomainError("max_iters must be at least 1");
  Reduction r;
  r.coefficients = {{{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  r.superbase = make_superbase(basis);
  for (;;) {
    CoForm cf = conorms(r.superbase);
    double threshold = -1e-12 * vonorms(r.superbase).max();
    int pivot = -1;
    for (int s = 0; s < 6; ++s)
      if (cf[s] < threshold && (pivot < 0 || cf[s] < cf[pivot]))
        pivot = s;
    if (pivot < 0)
      return r;
    if (r.trace.iterations == max_iters)
      throw NonTerminationError("reduction did not finish in " +
                                std::to_string(max_iters) + " steps", r.trace);
    auto [i, j] = kSlotPairs[pivot];
    r.coefficients = reduction_step(r.coefficients, i, j);
    r.superbase = from_coefficients(basis, r.coefficients);
    r.trace.steps.push_back({i, j, -cf[pivot]});
    ++r.trace.iterations;
#ifndef NDEBUG
    CoForm expected = reduction_step_conorms(cf, i, j);
    CoForm actual = conorms(r.superbase);
    double scale = vonorms(r.superbase).max();
    for (int s = 0; s < 6; ++s)
      if (std::fabs(expected[s] - actual[s]) > 1e-9 * scale)
        throw std::logic_error("closed-form conorm update disagrees with geometry");
#endif
  }
}

} // namespace rootinv
