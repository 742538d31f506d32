#include "doctest.h"
#include "rootinv/errors.hpp"
#include "rootinv/reduction.hpp"
#include "test_support.hpp"

using namespace rootinv;
using doctest::Approx;

namespace {

bool obtuse(const Superbase& sb) {
  CoForm p = conorms(sb);
  double tol = 1e-12 * vonorms(sb).max();
  for (double x : p.p)
    if (x < -tol)
      return false;
  return true;
}

} // namespace

TEST_CASE("complement_pair") {
  CHECK(complement_pair(0, 1) == std::array<int, 2>{2, 3});
  CHECK(complement_pair(3, 1) == std::array<int, 2>{0, 2});
  CHECK_THROWS_AS(complement_pair(2, 2), IndexError);
  CHECK_THROWS_AS(complement_pair(0, 5), IndexError);
}

TEST_CASE("obtuse input needs no steps") {
  Reduction r = reduce_to_obtuse({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(r.trace.iterations == 0);
  CHECK(conorms(r.superbase) == CoForm{{0, 0, 0, 1, 4, 9}});
}

TEST_CASE("a skewed basis of the cubic lattice reduces to the cubic coform") {
  Basis3 b{{1, 0, 0}, {5, 1, 0}, {3, 7, 1}};
  Reduction r = reduce_to_obtuse(b);
  CHECK(r.trace.iterations >= 1);
  CHECK(obtuse(r.superbase));
  auto p = conorms(r.superbase).p;
  std::sort(p.begin(), p.end());
  CHECK(p == std::array<double, 6>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("single step matches the closed form") {
  Superbase sb = make_superbase({{1, 0, 0}, {0.9, 1, 0}, {0.2, 0.3, 1}});
  CoForm p = conorms(sb);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j)
        continue;
      Superbase next = reduction_step(sb, i, j);
      CoForm q = conorms(next);
      CoForm expected = reduction_step_conorms(p, i, j);
      for (int s = 0; s < 6; ++s)
        CHECK(q[s] == Approx(expected[s]));
      Vec3 sum = next[0] + next[1] + next[2] + next[3];
      CHECK(sum.length() < 1e-14);
    }
  CHECK_THROWS_AS(reduction_step(sb, 1, 1), IndexError);
}

TEST_CASE("closed form and vonorm drop on random superbases") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5000; ++t) {
    Superbase sb = make_superbase(testing::random_basis(rng));
    CoForm p = conorms(sb);
    VoForm v = vonorms(sb);
    int s = int(std::min_element(p.p.begin(), p.p.end()) - p.p.begin());
    auto [i, j] = kSlotPairs[s];
    double eps = -p[s];
    CoForm q = conorms(reduction_step(sb, i, j));
    CoForm expected = reduction_step_conorms(p, i, j);
    for (int k = 0; k < 6; ++k)
      CHECK(std::fabs(q[k] - expected[k]) <= 1e-9 * v.max());
    VoForm w = vonorms(reduction_step(sb, i, j));
    CHECK(std::fabs(v.pair(i, j) - w.pair(i, j) - 4 * eps) <= 1e-9 * v.max());
  }
}

TEST_CASE("reduction output is an obtuse superbase of the same lattice") {
  std::mt19937_64 rng(9);
  int worst = 0;
  for (int t = 0; t < 500; ++t) {
    Basis3 b = testing::random_copy(testing::random_basis(rng), rng, 6);
    Reduction r = reduce_to_obtuse(b);
    CHECK(obtuse(r.superbase));
    worst = std::max(worst, r.trace.iterations);
    IMat3 m{r.coefficients[1], r.coefficients[2], r.coefficients[3]};
    CHECK(std::abs(det(m)) == 1);
    for (int i = 0; i < 4; ++i) {
      Vec3 expect = b.combine(r.coefficients[i]);
      CHECK((expect - r.superbase[i]).length() <= 1e-12 * (1 + expect.length()));
    }
    CHECK(int(r.trace.steps.size()) == r.trace.iterations);
    for (const auto& s : r.trace.steps)
      CHECK(s.epsilon > 0);
  }
  CHECK(worst < kDefaultMaxIterations);
  MESSAGE("most steps over 500 random inputs: ", worst);
}

TEST_CASE("unimodular copies reduce to the same coform orbit") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    Basis3 b = testing::random_basis(rng);
    CoForm p = conorms(reduce_to_obtuse(b).superbase);
    CoForm q = conorms(reduce_to_obtuse(transform(random_unimodular(rng(), 5), b)).superbase);
    double scale = vonorms_from_conorms(p).max();
    double best = INFINITY;
    for (const CoForm& o : orbit24(q)) {
      double d = 0;
      for (int s = 0; s < 6; ++s)
        d = std::max(d, std::fabs(o[s] - p[s]));
      best = std::min(best, d);
    }
    CHECK(best <= 1e-9 * scale);
  }
}

TEST_CASE("step cap and degenerate input") {
  Basis3 b{{1, 0, 0}, {5, 1, 0}, {3, 7, 1}};
  try {
    reduce_to_obtuse(b, 2);
    FAIL("expected NonTerminationError");
  } catch (const NonTerminationError& e) {
    CHECK(e.trace.iterations == 2);
    CHECK(e.trace.steps.size() == 2);
  }
  CHECK_THROWS_AS(reduce_to_obtuse(b, 0), DomainError);
  CHECK_THROWS_AS(reduce_to_obtuse({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}}), DegenerateBasisError);
}
