#include "doctest.h"
#include "rootinv/errors.hpp"
#include "rootinv/invariant.hpp"
#include "rootinv/oracle.hpp"
#include "rootinv/reconstruct.hpp"
#include "test_support.hpp"

using namespace rootinv;
using doctest::Approx;

namespace {

CoForm cf(double p23, double p13, double p12, double p01, double p02, double p03) {
  return {{p23, p13, p12, p01, p02, p03}};
}

Basis3 lattice(const CoForm& c) { return superbase_from_coform(c).basis(); }

// Entries of different superbases carry rounding noise, so ties within 1e-9
// must not decide the order.
bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    double tol = 1e-9 * std::max(std::fabs(a[i]), std::fabs(b[i]));
    if (a[i] < b[i] - tol)
      return true;
    if (a[i] > b[i] + tol)
      return false;
  }
  return false;
}

// Brute force: every obtuse superbase under all 24 index permutations, kept
// when its zero pattern fits the type template, read in template order and
// minimised lexicographically.
RootInvariant brute_force_invariant(const Basis3& basis) {
  std::vector<std::array<double, 6>> forms;
  for (const auto& c : enumerate_obtuse_superbases(basis)) {
    Superbase sb{{basis.combine(c[0]), basis.combine(c[1]), basis.combine(c[2]),
                  basis.combine(c[3])}};
    CoForm p = conorms(sb);
    double scale = vonorms(sb).max();
    for (const auto& s : IndexPermutation::all()) {
      auto q = permute_slots(p.p, s);
      std::array<double, 6> r;
      for (int k = 0; k < 6; ++k)
        r[k] = q[k] <= 1e-9 * scale ? 0.0 : std::sqrt(q[k]);
      forms.push_back(r);
    }
  }
  int zeros = 0;
  for (double x : forms[0])
    zeros += x == 0;
  auto pick = [&](auto fits, auto read, VoronoiType t) {
    RootInvariant best{t, {}};
    for (const auto& r : forms)
      if (fits(r)) {
        std::vector<double> v = read(r);
        if (best.values.empty() || lex_less(v, best.values))
          best.values = v;
      }
    return best;
  };
  if (zeros == 0)
    return pick([](auto&) { return true; },
                [](auto& r) { return std::vector<double>(r.begin(), r.end()); }, VoronoiType::V1);
  if (zeros == 1)
    return pick([](auto& r) { return r[0] == 0; },
                [](auto& r) { return std::vector<double>{r[3], r[1], r[2], r[4], r[5]}; },
                VoronoiType::V2);
  if (zeros == 3)
    return pick([](auto& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0; },
                [](auto& r) { return std::vector<double>{r[3], r[4], r[5]}; }, VoronoiType::V5);
  RootInvariant v3 = pick([](auto& r) { return r[0] == 0 && r[3] == 0; },
                          [](auto& r) { return std::vector<double>{r[1], r[2], r[4], r[5]}; },
                          VoronoiType::V3);
  if (!v3.values.empty())
    return v3;
  return pick([](auto& r) { return r[0] == 0 && r[1] == 0; },
              [](auto& r) { return std::vector<double>{r[2], r[3], r[4], r[5]}; },
              VoronoiType::V4);
}

CoForm random_coform(std::mt19937_64& rng, VoronoiType t) {
  CoForm c;
  for (double& p : c.p)
    p = testing::uniform(rng, 0.2, 3.0);
  switch (t) {
    case VoronoiType::V1: break;
    case VoronoiType::V2: c[0] = 0; break;
    case VoronoiType::V3: c[0] = c[3] = 0; break;
    case VoronoiType::V4: c[0] = c[1] = 0; break;
    case VoronoiType::V5: c[0] = c[1] = c[2] = 0; break;
  }
  return apply_index_permutation(c, IndexPermutation::all()[rng() % 24]);
}

const VoronoiType kTypes[] = {VoronoiType::V1, VoronoiType::V2, VoronoiType::V3,
                              VoronoiType::V4, VoronoiType::V5};

} // namespace

TEST_CASE("type names and sizes") {
  CHECK(to_string(VoronoiType::V3) == "V3");
  CHECK(parse_voronoi_type("V5") == VoronoiType::V5);
  CHECK_THROWS_AS(parse_voronoi_type("V6"), ParseError);
  CHECK_THROWS_AS(parse_voronoi_type("v1"), ParseError);
  CHECK(invariant_size(VoronoiType::V1) == 6);
  CHECK(invariant_size(VoronoiType::V2) == 5);
  CHECK(invariant_size(VoronoiType::V3) == 4);
  CHECK(invariant_size(VoronoiType::V4) == 4);
  CHECK(invariant_size(VoronoiType::V5) == 3);
}

TEST_CASE("snap_zeros") {
  CoForm c = snap_zeros(cf(-1e-13, 1e-12, 2, 1, 4, 9));
  CHECK(c == cf(0, 0, 2, 1, 4, 9));
  CHECK_THROWS_AS(snap_zeros(cf(-0.5, 1, 2, 1, 4, 9)), NotObtuseError);
  CHECK(snap_zeros(cf(1e-6, 1, 1, 1, 1, 1), 1e-5)[0] == 0);
}

TEST_CASE("classify by zero pattern") {
  CHECK(classify(cf(1, 2, 3, 4, 5, 6)) == VoronoiType::V1);
  CHECK(classify(cf(1, 2, 3, 0, 5, 6)) == VoronoiType::V2);
  CHECK(classify(cf(0, 2, 3, 0, 5, 6)) == VoronoiType::V3);
  CHECK(classify(cf(1, 0, 3, 4, 0, 6)) == VoronoiType::V3);
  CHECK(classify(cf(0, 0, 3, 4, 5, 6)) == VoronoiType::V4);
  CHECK(classify(cf(1, 2, 3, 0, 0, 6)) == VoronoiType::V4);
  CHECK(classify(cf(0, 0, 0, 1, 4, 9)) == VoronoiType::V5);
  CHECK(classify(cf(0, 0, 1, 0, 4, 9)) == VoronoiType::V5);
  CHECK_THROWS_AS(classify(cf(1, 1, 1, 0, 0, 0)), DegenerateLatticeError);
  CHECK_THROWS_AS(classify(cf(0, 0, 0, 0, 1, 1)), DegenerateLatticeError);
  CHECK_THROWS_AS(classify(cf(-1, 1, 1, 1, 1, 1)), NotObtuseError);
}

TEST_CASE("canonicalize: fixed examples") {
  RootInvariant v5 = canonicalize({{0, 0, 0, 3, 1, 2}}, VoronoiType::V5);
  CHECK(v5.values == std::vector<double>{1, 2, 3});
  RootInvariant v1 = canonicalize({{1, 1, 1, 1, 1, 1}}, VoronoiType::V1);
  CHECK(v1.values == std::vector<double>(6, 1.0));
  RootInvariant v3 = canonicalize({{4, 0, 2, 3, 0, 1}}, VoronoiType::V3);
  CHECK(v3.values == std::vector<double>{1, 2, 3, 4});
  // zeros p23, p13 share index 3; the distinguished entry is r03
  RootInvariant v4 = canonicalize({{0, 0, 5, 3, 1, 2}}, VoronoiType::V4);
  CHECK(v4.values == std::vector<double>{1, 3, 5, 2});
  RootInvariant v2 = canonicalize({{0, 2, 1, 5, 3, 4}}, VoronoiType::V2);
  CHECK(v2.values == std::vector<double>{5, 1, 2, 4, 3});
  CHECK_THROWS_AS(canonicalize({{0, 1, 1, 1, 1, 1}}, VoronoiType::V1), TypePatternError);
  CHECK_THROWS_AS(canonicalize({{0, 0, 1, 1, 1, 1}}, VoronoiType::V3), TypePatternError);
  CHECK_THROWS_AS(canonicalize({{0, 1, 1, 0, 1, 1}}, VoronoiType::V4), TypePatternError);
}

TEST_CASE("canonicalize V2 example against the brute-force oracle") {
  Basis3 b = lattice(cf(0, 4, 1, 25, 9, 16));
  RootInvariant expected = brute_force_invariant(b);
  CHECK(expected.type == VoronoiType::V2);
  CHECK(testing::close(root_invariant(b), expected, 1e-9));
  CHECK(testing::close(expected, {VoronoiType::V2, {5, 1, 2, 4, 3}}, 1e-9));
}

TEST_CASE("canonical forms agree with the brute-force oracle for every type") {
  std::mt19937_64 rng(17);
  for (VoronoiType t : kTypes)
    for (int n = 0; n < 12; ++n) {
      Basis3 b = testing::random_copy(lattice(random_coform(rng, t)), rng);
      RootInvariant ri = root_invariant(b);
      RootInvariant bf = brute_force_invariant(b);
      auto show = [](const RootInvariant& r) {
        std::string s = to_string(r.type);
        for (double x : r.values)
          s += " " + std::to_string(x);
        return s;
      };
      INFO("library ", show(ri), ", brute force ", show(bf));
      CHECK(ri.type == t);
      CHECK(testing::close(ri, bf, 1e-9));
    }
}

TEST_CASE("every obtuse superbase yields the same invariant") {
  std::mt19937_64 rng(23);
  for (VoronoiType t : kTypes) {
    Basis3 b = lattice(random_coform(rng, t));
    RootInvariant ref = root_invariant(b);
    for (const auto& c : enumerate_obtuse_superbases(b)) {
      Superbase sb{{b.combine(c[0]), b.combine(c[1]), b.combine(c[2]), b.combine(c[3])}};
      CHECK(testing::close(root_invariant_from_coform(conorms(sb)), ref, 1e-9));
    }
  }
}

TEST_CASE("orthorhombic closed forms") {
  const double a = 1.0, b = 1.3, c = 1.7;
  auto ri = [](Basis3 basis) { return root_invariant(basis); };
  CHECK(ri({{b, 0, 0}, {0, c, 0}, {0, 0, a}}).values == std::vector<double>{a, b, c});
  RootInvariant os = ri({{2 * a, 0, 0}, {-a, b, 0}, {0, 0, c}});
  CHECK(os.type == VoronoiType::V4);
  CHECK(os.values[0] == Approx(std::sqrt(b * b - a * a)));
  CHECK(os.values[1] == Approx(a * std::sqrt(2.0)));
  CHECK(os.values[3] == Approx(c));
  RootInvariant of = ri({{a, b, 0}, {a, -b, 0}, {-a, 0, c}});
  CHECK(of.type == VoronoiType::V1);
  std::vector<double> expect{std::sqrt(b * b - a * a), a, a, std::sqrt(c * c - a * a), a, a};
  for (int k = 0; k < 6; ++k)
    CHECK(of.values[k] == Approx(expect[k]));
}

TEST_CASE("isometry invariance, scaling and similarity") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    Basis3 b = testing::random_basis(rng);
    Basis3 copy = testing::random_copy(b, rng);
    CHECK(isometric(b, copy));
    RootInvariant r = root_invariant(b), r2 = root_invariant(scaled(copy, 2.5));
    for (std::size_t k = 0; k < r.values.size(); ++k)
      CHECK(r2.values[k] == Approx(2.5 * r.values[k]).epsilon(1e-9));
    auto s = similar(b, scaled(copy, 2.5));
    REQUIRE(s);
    CHECK(*s == Approx(2.5).epsilon(1e-9));
  }
  Basis3 cube{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_FALSE(isometric(cube, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1.001}}));
  CHECK_FALSE(similar(cube, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1.001}}));
  CHECK(similar(cube, scaled(cube, 3)).value() == Approx(3));
}

TEST_CASE("invariants_equal and similarity_factor need matching types") {
  RootInvariant a{VoronoiType::V5, {1, 2, 3}}, b{VoronoiType::V3, {1, 2, 3, 4}};
  CHECK_FALSE(invariants_equal(a, b));
  CHECK_FALSE(similarity_factor(a, b));
  CHECK(invariants_equal(a, {VoronoiType::V5, {1, 2, 3 + 1e-10}}));
  CHECK_FALSE(invariants_equal(a, {VoronoiType::V5, {1, 2, 3 + 1e-6}}));
}

TEST_CASE("DC7 pair has different invariants") {
  RootInvariant a = root_invariant(lattice(cf(5, 3, 4, 1, 1, 4)));
  RootInvariant b = root_invariant(lattice(cf(6, 3, 3, 2, 1, 3)));
  CHECK(a.type == VoronoiType::V1);
  CHECK(b.type == VoronoiType::V1);
  CHECK_FALSE(invariants_equal(a, b));
}

TEST_CASE("continuity bound") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 5; ++n) {
    Basis3 b = testing::random_basis(rng);
    for (double delta : {1e-2, 1e-4}) {
      ContinuityReport rep = continuity_check(b, delta, 200, n);
      CHECK(rep.trials == 200);
      CHECK(rep.violations == 0);
      CHECK(rep.max_ratio <= 1.0);
    }
  }
  ContinuityReport cube = continuity_check({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1e-3, 200);
  CHECK(cube.violations == 0);
  CHECK(cube.skipped > 0);
  CHECK_THROWS_AS(continuity_check({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, -1, 1), DomainError);
}
