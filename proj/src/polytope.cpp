#include "fano/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace fano {

namespace {

struct Plane {
  LatticeVector normal;
  Int level;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

bool affinely_spans_3d(std::span<const LatticeVector> pts) {
  if (pts.size() < 4) return false;
  const LatticeVector& p0 = pts[0];
  std::size_t i1 = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i] != p0) {
      i1 = i;
      break;
    }
  }
  if (i1 == 0) return false;
  LatticeVector d1 = pts[i1] - p0;
  std::size_t i2 = 0;
  LatticeVector n;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    n = cross(d1, pts[i] - p0);
    if (!n.is_zero()) {
      i2 = i;
      break;
    }
  }
  if (i2 == 0) return false;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (dot(n, pts[i] - p0) != 0) return true;
  return false;
}

// Rank of a set of vectors, capped at 3.
int rank_of(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      LatticeVector c = cross(vs[i], vs[j]);
      if (c.is_zero()) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (dot(c, vs[k]) != 0) return 3;
    }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!cross(vs[i], vs[j]).is_zero()) return 2;
  for (const auto& v : vs)
    if (!v.is_zero()) return 1;
  return 0;
}

}  // namespace

Polytope Polytope::hull(std::span<const LatticeVector> input) {
  std::vector<LatticeVector> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (!affinely_spans_3d(pts)) throw DegenerateInput("hull: points do not span dimension 3");

  // Every supporting plane through three non-collinear input points bounds a
  // facet; enumerate them all. Point sets here are small.
  std::set<Plane> planes;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LatticeVector dij = pts[j] - pts[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        LatticeVector normal = cross(dij, pts[k] - pts[i]);
        if (normal.is_zero()) continue;
        normal = primitive_part(normal);
        Int c = dot(normal, pts[i]);
        bool any_pos = false, any_neg = false;
        for (const auto& p : pts) {
          Int s = checked::sub(dot(normal, p), c);
          any_pos |= s > 0;
          any_neg |= s < 0;
          if (any_pos && any_neg) break;
        }
        if (any_pos && any_neg) continue;
        if (any_neg) planes.insert({-normal, c});
        else planes.insert({normal, checked::neg(c)});
      }
    }
  }

  Polytope poly;
  for (const auto& p : pts) {
    std::vector<LatticeVector> normals;
    for (const auto& pl : planes)
      if (checked::add(dot(pl.normal, p), pl.level) == 0) normals.push_back(pl.normal);
    if (rank_of(normals) == 3) poly.vertices_.push_back(p);
  }

  for (const auto& pl : planes) {
    Facet f{pl.normal, pl.level, {}};
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i)
      if (f.distance(poly.vertices_[i]) == 0) f.vertices.push_back(i);
    const LatticeVector v0 = poly.vertices_[f.vertices.front()];
    const LatticeVector nrm = f.normal;
    const auto& vs = poly.vertices_;
    std::sort(f.vertices.begin() + 1, f.vertices.end(), [&](std::size_t u, std::size_t w) {
      return dot(nrm, cross(vs[u] - v0, vs[w] - v0)) > 0;
    });
    poly.facets_.push_back(std::move(f));
  }
  return poly;
}

Polytope Polytope::from_rows(std::span<const Int> row0, std::span<const Int> row1,
                             std::span<const Int> row2) {
  if (row0.size() != row1.size() || row1.size() != row2.size())
    throw std::invalid_argument("from_rows: rows of different lengths");
  std::vector<LatticeVector> pts;
  for (std::size_t j = 0; j < row0.size(); ++j) pts.push_back({row0[j], row1[j], row2[j]});
  return hull(pts);
}

bool Polytope::has_vertex(const LatticeVector& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Polytope::contains(const LatticeVector& v) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.distance(v) >= 0; });
}

bool Polytope::strictly_contains(const LatticeVector& v) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.distance(v) > 0; });
}

std::pair<LatticeVector, LatticeVector> Polytope::bounding_box() const {
  LatticeVector lo = vertices_.front(), hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  return {lo, hi};
}

Polytope Polytope::transformed(const UnimodularMap& u) const { return hull(u(vertices_)); }

std::ostream& operator<<(std::ostream& os, const Polytope& p) {
  for (std::size_t r = 0; r < 3; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t j = 0; j < p.vertex_count(); ++j) os << (j ? " " : "") << p.vertices()[j][r];
    os << (r == 2 ? "]" : "\n");
  }
  return os;
}

// ---------------------------------------------------------------------------

WeightSystem::WeightSystem(std::array<Int, 4> lambdas) : lambdas_(lambdas), h_(0) {
  std::sort(lambdas_.begin(), lambdas_.end());
  if (lambdas_[0] <= 0) throw std::invalid_argument("weight system entries must be positive");
  Int g = 0;
  for (Int l : lambdas_) {
    g = gcd(g, l);
    h_ = checked::add(h_, l);
  }
  if (g != 1) throw std::invalid_argument("weight system entries must be coprime");
}

std::ostream& operator<<(std::ostream& os, const WeightSystem& w) {
  return os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ")/" << w.h();
}

// ---------------------------------------------------------------------------

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  auto [lo, hi] = p.bounding_box();
  std::vector<LatticeVector> out;
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      for (Int z = lo.z; z <= hi.z; ++z)
        if (p.contains({x, y, z})) out.push_back({x, y, z});
  return out;
}

bool is_fano(const Polytope& p) {
  if (!p.strictly_contains({0, 0, 0})) return false;
  auto [lo, hi] = p.bounding_box();
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      for (Int z = lo.z; z <= hi.z; ++z) {
        LatticeVector v{x, y, z};
        if (v.is_zero() || !p.contains(v)) continue;
        if (!p.has_vertex(v)) return false;
      }
  return true;
}

bool is_empty_origin_simplex(const LatticeVector& a, const LatticeVector& b,
                             const LatticeVector& c) {
  const Matrix3 basis = Matrix3::from_columns(a, b, c);
  const Int det = det3(basis);
  if (det == 0) throw DegenerateInput("is_empty_origin_simplex: dependent vectors");
  if (det == 1 || det == -1) return true;
  const Int abs_det = det < 0 ? -det : det;
  const Int sign = det < 0 ? -1 : 1;
  const Matrix3 adj = basis.adjugate();

  // Coset representatives of Z^3 / basis*Z^3 form the box given by the
  // diagonal of the column Hermite form. For each nonzero coset, the point in
  // the half-open parallelepiped lies in the closed simplex iff its
  // barycentric numerators sum to at most |det|.
  const Matrix3 h = hermite_normal_form(basis.transpose()).h;
  for (Int i = 0; i < h(0, 0); ++i)
    for (Int j = 0; j < h(1, 1); ++j)
      for (Int k = 0; k < h(2, 2); ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        LatticeVector coeff = adj * LatticeVector{i, j, k};
        Int total = 0;
        for (std::size_t t = 0; t < 3; ++t)
          total += floor_mod(checked::mul(sign, coeff[t]), abs_det);
        if (total <= abs_det) return false;
      }
  return true;
}

bool facet_cone_is_empty(const Polytope& p, const Facet& f) {
  const auto& vs = p.vertices();
  const LatticeVector& v0 = vs[f.vertices[0]];
  for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
    if (!is_empty_origin_simplex(v0, vs[f.vertices[i]], vs[f.vertices[i + 1]])) return false;
  return true;
}

bool is_fano_by_cones(const Polytope& p) {
  if (!p.strictly_contains({0, 0, 0})) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return facet_cone_is_empty(p, f); });
}

bool is_simplicial(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.vertices.size() == 3; });
}

bool is_smooth(const Polytope& p) {
  if (!is_simplicial(p)) return false;
  const auto& vs = p.vertices();
  return std::all_of(p.facets().begin(), p.facets().end(), [&](const Facet& f) {
    Int d = det3(Matrix3::from_columns(vs[f.vertices[0]], vs[f.vertices[1]], vs[f.vertices[2]]));
    return d == 1 || d == -1;
  });
}

Int normalized_volume(const Polytope& p) {
  const auto& vs = p.vertices();
  const LatticeVector apex = vs.front();
  Int total = 0;
  for (const auto& f : p.facets()) {
    if (f.distance(apex) == 0) continue;
    const LatticeVector v0 = vs[f.vertices[0]] - apex;
    for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
      Int d = det3(Matrix3::from_columns(v0, vs[f.vertices[i]] - apex, vs[f.vertices[i + 1]] - apex));
      total = checked::add(total, d < 0 ? -d : d);
    }
  }
  return total;
}

std::array<Rational, 4> barycentric_coordinates(const std::array<LatticeVector, 4>& tet,
                                                const LatticeVector& point) {
  const Matrix3 m = Matrix3::from_columns(tet[0] - tet[3], tet[1] - tet[3], tet[2] - tet[3]);
  auto sol = solve3(m, point - tet[3]);
  if (!sol) throw DegenerateInput("barycentric coordinates: affinely dependent tetrahedron");
  const auto& mu = *sol;
  return {mu[0], mu[1], mu[2], Rational(1) - mu[0] - mu[1] - mu[2]};
}

std::optional<WeightSystem> barycentric_of_origin(const std::array<LatticeVector, 4>& tet) {
  const auto mu = barycentric_coordinates(tet, {0, 0, 0});
  if (!std::all_of(mu.begin(), mu.end(), [](const Rational& q) { return q > Rational(0); }))
    return std::nullopt;
  Int lcm = 1;
  for (const auto& q : mu) lcm = checked::mul(lcm / gcd(lcm, q.denominator()), q.denominator());
  std::array<Int, 4> lambdas{};
  for (std::size_t i = 0; i < 4; ++i) lambdas[i] = checked::mul(mu[i].numerator(), lcm / mu[i].denominator());
  Int g = 0;
  for (Int l : lambdas) g = gcd(g, l);
  for (Int& l : lambdas) l /= g;
  return WeightSystem(lambdas);
}

}  // namespace fano
