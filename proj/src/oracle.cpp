#include "rootinv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "rootinv/errors.hpp"

namespace rootinv {

namespace {

struct Window {
  std::vector<IVec3> coeffs;
  std::vector<Vec3> vecs;
};

Window window(const Basis3& basis, int bound) {
  if (bound < 2)
    throw DomainError("coefficient window must be at least 2");
  Window w;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        if (a || b || c) {
          w.coeffs.push_back({a, b, c});
          w.vecs.push_back(basis.combine({a, b, c}));
        }
  return w;
}

bool on_boundary(const IVec3& c, int bound) {
  return std::abs(c[0]) == bound || std::abs(c[1]) == bound || std::abs(c[2]) == bound;
}

int parity_index(const IVec3& c) {
  auto bit = [](std::int64_t x) { return int(((x % 2) + 2) % 2); };
  return 4 * bit(c[0]) + 2 * bit(c[1]) + bit(c[2]);
}

std::int64_t det_coeffs(const IVec3& a, const IVec3& b, const IVec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

IVec3 over(const IVec3& c, const SuperbaseCoefficients& sb) {
  IVec3 out{};
  for (int n = 0; n < 3; ++n)
    out[n] = c[0] * sb[1][n] + c[1] * sb[2][n] + c[2] * sb[3][n];
  return out;
}

template <typename F>
auto with_window_growth(F&& f) {
  for (std::size_t n = 0;; ++n) {
    try {
      return f(kWindowSchedule[n]);
    } catch (const WindowTooSmallError&) {
      if (n + 1 == kWindowSchedule.size())
        throw;
    }
  }
}

} // namespace

std::array<TwoLambdaClass, 7> voronoi_vectors(const Basis3& basis, int bound) {
  Window w = window(basis, bound);
  std::array<TwoLambdaClass, 7> classes;
  std::array<double, 7> best;
  best.fill(INFINITY);
  for (std::size_t n = 0; n < w.vecs.size(); ++n) {
    int k = parity_index(w.coeffs[n]) - 1;
    if (k >= 0)
      best[k] = std::min(best[k], w.vecs[n].length_sq());
  }
  for (int k = 0; k < 7; ++k) {
    int m = k + 1;
    classes[k].representative = {(m >> 2) & 1, (m >> 1) & 1, m & 1};
    classes[k].norm_sq = best[k];
  }
  for (std::size_t n = 0; n < w.vecs.size(); ++n) {
    int k = parity_index(w.coeffs[n]) - 1;
    if (k >= 0 && w.vecs[n].length_sq() <= best[k] * (1 + 1e-9)) {
      if (on_boundary(w.coeffs[n], bound))
        throw WindowTooSmallError("shortest vector on the boundary of window " +
                                  std::to_string(bound));
      classes[k].shortest_vectors.push_back(w.coeffs[n]);
    }
  }
  return classes;
}

std::array<TwoLambdaClass, 7> voronoi_vectors_auto(const Basis3& basis, Basis3* reduced) {
  Basis3 red = reduce_to_obtuse(basis).superbase.basis();
  if (reduced)
    *reduced = red;
  return with_window_growth([&](int bound) { return voronoi_vectors(red, bound); });
}

int strict_count(const Basis3& basis) {
  auto classes = voronoi_vectors_auto(basis);
  return int(std::count_if(classes.begin(), classes.end(),
                           [](const TwoLambdaClass& c) { return c.strict(); }));
}

std::int64_t digital_image(const IVec3& c) { return 100 * c[0] + 10 * c[1] + c[2]; }

std::vector<SuperbaseCoefficients> enumerate_obtuse_superbases(const Basis3& basis, int bound) {
  Window w = window(basis, bound);
  const std::size_t n = w.vecs.size();
  std::vector<double> norm(n);
  for (std::size_t a = 0; a < n; ++a)
    norm[a] = w.vecs[a].length_sq();
  auto obtuse = [&](const Vec3& x, double nx, const Vec3& y, double ny) {
    return x.dot(y) <= 1e-12 * std::max(nx, ny);
  };

  std::set<SuperbaseCoefficients> found;
  std::vector<std::size_t> partners;
  for (std::size_t a = 0; a < n; ++a) {
    partners.clear();
    for (std::size_t b = a + 1; b < n; ++b)
      if (obtuse(w.vecs[a], norm[a], w.vecs[b], norm[b]))
        partners.push_back(b);
    for (std::size_t pb = 0; pb < partners.size(); ++pb) {
      std::size_t b = partners[pb];
      for (std::size_t pc = pb + 1; pc < partners.size(); ++pc) {
        std::size_t c = partners[pc];
        if (!obtuse(w.vecs[b], norm[b], w.vecs[c], norm[c]))
          continue;
        const IVec3 &ca = w.coeffs[a], &cb = w.coeffs[b], &cc = w.coeffs[c];
        if (std::abs(det_coeffs(ca, cb, cc)) != 1)
          continue;
        Vec3 u0 = -(w.vecs[a] + w.vecs[b] + w.vecs[c]);
        double n0 = u0.length_sq();
        if (!obtuse(u0, n0, w.vecs[a], norm[a]) || !obtuse(u0, n0, w.vecs[b], norm[b]) ||
            !obtuse(u0, n0, w.vecs[c], norm[c]))
          continue;
        IVec3 c0{-(ca[0] + cb[0] + cc[0]), -(ca[1] + cb[1] + cc[1]), -(ca[2] + cb[2] + cc[2])};
        SuperbaseCoefficients key{c0, ca, cb, cc};
        std::sort(key.begin(), key.end());
        found.insert(key);
      }
    }
  }
  for (const auto& sb : found)
    for (const IVec3& c : sb)
      if (on_boundary(c, bound))
        throw WindowTooSmallError("superbase vector on the boundary of window " +
                                  std::to_string(bound));
  return {found.begin(), found.end()};
}

std::vector<SuperbaseCoefficients> enumerate_obtuse_superbases(const Basis3& basis) {
  Reduction red = reduce_to_obtuse(basis);
  Basis3 reduced = red.superbase.basis();
  auto local = with_window_growth(
      [&](int bound) { return enumerate_obtuse_superbases(reduced, bound); });
  std::vector<SuperbaseCoefficients> out;
  out.reserve(local.size());
  for (const auto& sb : local) {
    SuperbaseCoefficients g;
    for (int i = 0; i < 4; ++i)
      g[i] = over(sb[i], red.coefficients);
    std::sort(g.begin(), g.end());
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<double, 4> squared_length_signature(const Basis3& basis,
                                               const SuperbaseCoefficients& c) {
  std::array<double, 4> s;
  for (int i = 0; i < 4; ++i)
    s[i] = basis.combine(c[i]).length_sq();
  std::sort(s.begin(), s.end());
  return s;
}

DC7Vector dc7(const Basis3& basis) {
  VoForm vf = vonorms(reduce_to_obtuse(basis).superbase);
  DC7Vector out;
  auto v = vf.values();
  for (int k = 0; k < 7; ++k)
    out.d[k] = std::sqrt(v[k]);
  std::sort(out.d.begin(), out.d.end());
  return out;
}

double dc7_distance(const DC7Vector& a, const DC7Vector& b) {
  double s = 0;
  for (int k = 0; k < 7; ++k)
    s += (a.d[k] - b.d[k]) * (a.d[k] - b.d[k]);
  return std::sqrt(s);
}

std::pair<CoForm, CoForm> dc7_family(const std::array<double, 6>& q) {
  for (double x : q)
    if (!(x >= 0) || !std::isfinite(x))
      throw DomainError("family offsets must be finite and non-negative");
  CoForm a{{5, 3, 4, 1, 1, 4}}, b{{6, 3, 3, 2, 1, 3}};
  for (int s = 0; s < 6; ++s) {
    a[s] += q[s];
    b[s] += q[s];
  }
  return {a, b};
}

} // namespace rootinv
