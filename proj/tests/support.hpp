#pragma once

// Shared test helpers: seeded random unimodular maps and oracles that avoid
// the facet machinery.

#include <algorithm>
#include <random>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

/// Product of random elementary moves; entries stay small.
inline UnimodularMap random_unimodular(std::mt19937_64& g, int steps = 6) {
  std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2), coin(0, 1);
  Matrix3 m = Matrix3::identity();
  for (int s = 0; s < steps; ++s) {
    const int i = pick(g);
    int j = pick(g);
    if (i == j) j = (j + 1) % 3;
    Matrix3 e = Matrix3::identity();
    switch (pick(g)) {
      case 0: e(i, j) = coef(g); break;                            // shear
      case 1: std::swap(e.a[i], e.a[j]); break;                    // swap
      default: e(i, i) = coin(g) ? -1 : 1; break;                  // sign
    }
    m = e * m;
  }
  return UnimodularMap(m);
}

inline Int leibniz_det(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return a.x * b.y * c.z - a.x * b.z * c.y - a.y * b.x * c.z + a.y * b.z * c.x + a.z * b.x * c.y -
         a.z * b.y * c.x;
}

/// Caratheodory: v is in conv(S) iff it lies in a tetrahedron on 4 points of
/// S (S full-dimensional).
inline bool in_hull_caratheodory(const std::vector<LatticeVector>& s, const LatticeVector& v) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const auto m = Matrix3::from_columns(s[b] - s[a], s[c] - s[a], s[d] - s[a]);
          const auto sol = solve3(m, v - s[a]);
          if (!sol) continue;
          const Rational t1 = (*sol)[0], t2 = (*sol)[1], t3 = (*sol)[2];
          if (t1 >= 0 && t2 >= 0 && t3 >= 0 && t1 + t2 + t3 <= 1) return true;
        }
  return false;
}

/// Lattice points of conv(S) by box scan and the Caratheodory test.
inline std::vector<LatticeVector> oracle_lattice_points(const std::vector<LatticeVector>& s) {
  LatticeVector lo = s[0], hi = s[0];
  for (const auto& v : s)
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<LatticeVector> out;
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      for (Int z = lo.z; z <= hi.z; ++z)
        if (in_hull_caratheodory(s, {x, y, z})) out.push_back({x, y, z});
  return out;
}

/// Fano by the oracle: the lattice points are exactly the given vertices and
/// 0, and the points +-e_i / N all lie in the hull (so 0 is interior).
inline bool oracle_is_fano(const std::vector<LatticeVector>& verts) {
  auto pts = oracle_lattice_points(verts);
  std::vector<LatticeVector> want = verts;
  want.push_back({0, 0, 0});
  std::sort(pts.begin(), pts.end());
  std::sort(want.begin(), want.end());
  if (pts != want) return false;
  constexpr Int N = 64;
  std::vector<LatticeVector> scaled;
  for (const auto& v : verts) scaled.push_back(N * v);
  for (const LatticeVector d : {e1, e2, e3, -e1, -e2, -e3})
    if (!in_hull_caratheodory(scaled, d)) return false;
  return true;
}

inline std::vector<LatticeVector> image(const UnimodularMap& u, const std::vector<LatticeVector>& vs) {
  return u(std::span<const LatticeVector>(vs));
}

}  // namespace fano::testing
