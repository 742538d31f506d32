#include "rootinv/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rootinv/errors.hpp"
#include "rootinv/reduction.hpp"

namespace rootinv {

namespace {

// Lexicographic order that treats entries within tol as equal, falling back
// to the exact order when the two sequences agree within tol everywhere.
template <typename Seq>
bool tol_less(const Seq& a, const Seq& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - tol)
      return true;
    if (a[i] > b[i] + tol)
      return false;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename Seq>
double max_entry(const Seq& s) {
  double m = 0;
  for (double x : s)
    m = std::max(m, x);
  return m;
}

std::vector<int> zero_slots(const std::array<double, 6>& v) {
  std::vector<int> z;
  for (int s = 0; s < 6; ++s)
    if (v[s] == 0.0)
      z.push_back(s);
  return z;
}

bool share_index(int s, int t) {
  auto [a, b] = kSlotPairs[s];
  auto [c, d] = kSlotPairs[t];
  return a == c || a == d || b == c || b == d;
}

// The eight arrangements of the 2x2 block (r13, r12, r02, r03) beside a
// zero in slot p23. The four index permutations fixing {2,3} give the first
// four; the swap r13 <-> r03 of the second superbase class gives the rest.
constexpr std::array<std::array<int, 4>, 8> kD4{{
    {0, 1, 2, 3}, {1, 0, 3, 2}, {3, 2, 1, 0}, {2, 3, 0, 1},
    {3, 1, 2, 0}, {1, 3, 0, 2}, {0, 2, 1, 3}, {2, 0, 3, 1},
}};

std::vector<double> nonzero_sorted(const std::array<double, 6>& r) {
  std::vector<double> out;
  for (double x : r)
    if (x != 0.0)
      out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::string to_string(VoronoiType t) { return "V" + std::to_string(int(t)); }

VoronoiType parse_voronoi_type(std::string_view s) {
  if (s.size() == 2 && s[0] == 'V' && s[1] >= '1' && s[1] <= '5')
    return VoronoiType(s[1] - '0');
  throw ParseError("unknown Voronoi type '" + std::string(s) + "'");
}

int invariant_size(VoronoiType t) {
  switch (t) {
    case VoronoiType::V1: return 6;
    case VoronoiType::V2: return 5;
    case VoronoiType::V3: return 4;
    case VoronoiType::V4: return 4;
    case VoronoiType::V5: return 3;
  }
  return 0;
}

double RootInvariant::max_value() const { return max_entry(values); }

CoForm snap_zeros(const CoForm& cf, double rel_tol) {
  double scale = vonorms_from_conorms(cf).max();
  CoForm out = cf;
  for (double& p : out.p) {
    if (p < -rel_tol * scale)
      throw NotObtuseError("conorm " + std::to_string(p) + " is negative beyond tolerance");
    if (p <= rel_tol * scale)
      p = 0.0;
  }
  return out;
}

VoronoiType classify(const CoForm& cf) {
  for (double p : cf.p)
    if (p < 0)
      throw NotObtuseError("classify needs a snapped obtuse coform");
  VoForm vf = vonorms_from_conorms(cf);
  for (int i = 0; i < 4; ++i)
    if (!(vf.single(i) > 0))
      throw DegenerateLatticeError("a superbase vector has zero length");
  auto zeros = zero_slots(cf.p);
  switch (zeros.size()) {
    case 0: return VoronoiType::V1;
    case 1: return VoronoiType::V2;
    case 2: return share_index(zeros[0], zeros[1]) ? VoronoiType::V4 : VoronoiType::V3;
    case 3: return VoronoiType::V5;
  }
  throw DegenerateLatticeError("more than three zero conorms");
}

RootForm root_form(const CoForm& cf) {
  RootForm rf;
  for (int s = 0; s < 6; ++s) {
    if (cf[s] < 0)
      throw NotObtuseError("root products need non-negative conorms");
    rf.r[s] = std::sqrt(cf[s]);
  }
  return rf;
}

RootInvariant canonicalize(const RootForm& rf, VoronoiType vtype, double rel_tol) {
  for (double x : rf.r)
    if (!(x >= 0) || !std::isfinite(x))
      throw TypePatternError("root form entries must be finite and non-negative");
  const double tol = rel_tol * max_entry(rf.r);
  auto zeros = zero_slots(rf.r);
  auto mismatch = [&] {
    return TypePatternError("zero pattern of the root form does not match " + to_string(vtype));
  };
  RootInvariant ri{vtype, {}};
  switch (vtype) {
    case VoronoiType::V1: {
      if (!zeros.empty())
        throw mismatch();
      std::array<double, 6> best = rf.r;
      for (const IndexPermutation& sigma : IndexPermutation::all()) {
        auto cand = permute_slots(rf.r, sigma);
        if (tol_less(cand, best, tol))
          best = cand;
      }
      ri.values.assign(best.begin(), best.end());
      break;
    }
    case VoronoiType::V2: {
      if (zeros.size() != 1)
        throw mismatch();
      std::array<double, 6> r = rf.r;
      for (const IndexPermutation& sigma : IndexPermutation::all())
        if (sigma.slot_images()[zeros[0]] == 0) {
          r = permute_slots(rf.r, sigma);
          break;
        }
      const std::array<double, 4> block{r[1], r[2], r[4], r[5]};
      std::array<double, 4> best = block;
      for (const auto& g : kD4) {
        std::array<double, 4> cand{block[g[0]], block[g[1]], block[g[2]], block[g[3]]};
        if (tol_less(cand, best, tol))
          best = cand;
      }
      ri.values = {r[3], best[0], best[1], best[2], best[3]};
      break;
    }
    case VoronoiType::V3:
    case VoronoiType::V4: {
      if (zeros.size() != 2)
        throw mismatch();
      bool shared = share_index(zeros[0], zeros[1]);
      if (shared != (vtype == VoronoiType::V4))
        throw mismatch();
      if (vtype == VoronoiType::V3) {
        ri.values = nonzero_sorted(rf.r);
        break;
      }
      auto [a, b] = kSlotPairs[zeros[0]];
      auto [c, d] = kSlotPairs[zeros[1]];
      int common = (a == c || a == d) ? a : b;
      int other = 6 - common - (a + b - common) - (c + d - common);
      int fixed = slot_of(common, other);
      std::array<double, 6> rest = rf.r;
      rest[fixed] = 0.0;
      ri.values = nonzero_sorted(rest);
      ri.values.push_back(rf.r[fixed]);
      break;
    }
    case VoronoiType::V5:
      if (zeros.size() != 3)
        throw mismatch();
      ri.values = nonzero_sorted(rf.r);
      break;
  }
  return ri;
}

RootInvariant root_invariant_from_coform(const CoForm& obtuse, const InvariantOptions& opt) {
  CoForm snapped = snap_zeros(obtuse, opt.snap_tol);
  VoronoiType t = classify(snapped);
  return canonicalize(root_form(snapped), t, opt.compare_tol);
}

RootInvariant root_invariant(const Basis3& basis, const InvariantOptions& opt) {
  Reduction red = reduce_to_obtuse(basis, opt.max_iters);
  return root_invariant_from_coform(conorms(red.superbase), opt);
}

bool invariants_equal(const RootInvariant& a, const RootInvariant& b, double tol) {
  if (a.type != b.type || a.values.size() != b.values.size())
    return false;
  double scale = std::max(a.max_value(), b.max_value());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (std::fabs(a.values[i] - b.values[i]) > tol * scale)
      return false;
  return true;
}

bool isometric(const Basis3& b1, const Basis3& b2, double tol) {
  InvariantOptions opt;
  opt.compare_tol = tol;
  return invariants_equal(root_invariant(b1, opt), root_invariant(b2, opt), tol);
}

std::optional<double> similarity_factor(const RootInvariant& a, const RootInvariant& b,
                                        double tol) {
  if (a.type != b.type || a.values.size() != b.values.size() || a.max_value() <= 0)
    return std::nullopt;
  double s = b.max_value() / a.max_value();
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (std::fabs(b.values[i] - s * a.values[i]) > tol * b.max_value())
      return std::nullopt;
  return s;
}

std::optional<double> similar(const Basis3& b1, const Basis3& b2, double tol) {
  InvariantOptions opt;
  opt.compare_tol = tol;
  return similarity_factor(root_invariant(b1, opt), root_invariant(b2, opt), tol);
}

ContinuityReport continuity_check(const Basis3& b, double delta, int trials,
                                  std::uint64_t seed) {
  if (delta < 0 || trials < 0)
    throw DomainError("delta and trials must be non-negative");
  const Superbase sb = reduce_to_obtuse(b).superbase;
  CoForm base = conorms(sb);
  for (double& p : base.p)
    p = std::max(p, 0.0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  auto random_in_ball = [&](double radius) {
    Vec3 d{normal(rng), normal(rng), normal(rng)};
    double len = d.length();
    if (len == 0)
      return Vec3{};
    return d * (radius * std::cbrt(uniform(rng)) / len);
  };

  ContinuityReport rep;
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    Vec3 u1 = sb[1] + random_in_ball(delta / 3);
    Vec3 u2 = sb[2] + random_in_ball(delta / 3);
    Vec3 u3 = sb[3] + random_in_ball(delta / 3);
    Superbase moved{{-(u1 + u2 + u3), u1, u2, u3}};
    CoForm q = conorms(moved);
    if (std::any_of(q.p.begin(), q.p.end(), [](double x) { return x < 0; })) {
      ++rep.skipped;
      continue;
    }
    double l = 0;
    for (int i = 0; i < 4; ++i)
      l = std::max({l, sb[i].length(), moved[i].length()});
    double bound = std::sqrt(2 * l * delta);
    for (int s = 0; s < 6; ++s) {
      double change = std::fabs(std::sqrt(q[s]) - std::sqrt(base[s]));
      rep.max_change = std::max(rep.max_change, change);
      if (change > bound + 1e-9)
        ++rep.violations;
      if (bound > 0)
        rep.max_ratio = std::max(rep.max_ratio, change / bound);
    }
  }
  return rep;
}

} // namespace rootinv
