#pragma once

// Integer convex hulls in Z^3, facet data, lattice-point enumeration and the
// Fano / simplicial / smooth predicates.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// Supporting plane of a facet: every point v of the polytope satisfies
/// <normal, v> >= -level, with equality exactly on the facet.
struct Facet {
  LatticeVector normal;  ///< inward pointing, primitive
  Int level{0};
  /// Indices into Polytope::vertices(), in cyclic order around the facet.
  std::vector<std::size_t> vertices;

  /// <normal, v> + level; zero on the facet, positive inside.
  Int distance(const LatticeVector& v) const { return checked::add(dot(normal, v), level); }
};

/// A full-dimensional lattice polytope. The vertex list is sorted
/// lexicographically and duplicate free; facets are computed on construction.
class Polytope {
 public:
  /// Convex hull of a point set. Throws DegenerateInput if the points do not
  /// span dimension 3.
  static Polytope hull(std::span<const LatticeVector> points);
  static Polytope hull(std::initializer_list<LatticeVector> points) {
    return hull(std::span<const LatticeVector>(points.begin(), points.size()));
  }

  /// Builds a polytope from the columns of a 3 x k matrix given row by row.
  static Polytope from_rows(std::span<const Int> row0, std::span<const Int> row1,
                            std::span<const Int> row2);

  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_vertex(const LatticeVector& v) const;
  /// Closed membership via the facet inequalities.
  bool contains(const LatticeVector& v) const;
  bool strictly_contains(const LatticeVector& v) const;

  /// Lower and upper corners of the integer bounding box.
  std::pair<LatticeVector, LatticeVector> bounding_box() const;

  Polytope transformed(const UnimodularMap& u) const;

  friend bool operator==(const Polytope& p, const Polytope& q) { return p.vertices_ == q.vertices_; }

 private:
  Polytope() = default;

  std::vector<LatticeVector> vertices_;
  std::vector<Facet> facets_;
};

std::ostream& operator<<(std::ostream& os, const Polytope& p);

/// Sorted quadruple of coprime positive integers with h = sum.
class WeightSystem {
 public:
  /// Sorts the entries; throws std::invalid_argument unless all are positive
  /// with gcd 1.
  explicit WeightSystem(std::array<Int, 4> lambdas);

  const std::array<Int, 4>& lambdas() const { return lambdas_; }
  Int operator[](std::size_t i) const { return lambdas_[i]; }
  Int h() const { return h_; }

  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::array<Int, 4> lambdas_;
  Int h_;
};

std::ostream& operator<<(std::ostream& os, const WeightSystem& w);

/// All lattice points of p (closed), by scanning the bounding box. Sorted.
std::vector<LatticeVector> lattice_points(const Polytope& p);

/// True iff the only lattice points of p are its vertices and the origin, and
/// the origin is strictly interior.
bool is_fano(const Polytope& p);

/// True iff the tetrahedron conv{0, a, b, c} contains no lattice points other
/// than its four vertices. a, b, c must be linearly independent.
bool is_empty_origin_simplex(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c);

/// True iff the cone over the facet, cut at the facet, has no lattice points
/// besides the origin and the facet's vertices. Requires level > 0.
bool facet_cone_is_empty(const Polytope& p, const Facet& f);

/// Same answer as is_fano, decided facet by facet on the cones over the
/// facets instead of by a bounding-box scan.
bool is_fano_by_cones(const Polytope& p);

/// Every facet is a triangle.
bool is_simplicial(const Polytope& p);

/// Simplicial, and every facet's three vertices form a lattice basis.
bool is_smooth(const Polytope& p);

/// Six times the Euclidean volume (the origin must be interior).
Int normalized_volume(const Polytope& p);

/// Barycentric coordinates of the origin in the tetrahedron, cleared to a
/// coprime integer weight system. Returns nullopt when the origin is not
/// strictly interior. Throws DegenerateInput for affinely dependent input.
std::optional<WeightSystem> barycentric_of_origin(const std::array<LatticeVector, 4>& tet);

/// The rational barycentric coordinates themselves (may be non-positive).
std::array<Rational, 4> barycentric_coordinates(const std::array<LatticeVector, 4>& tet,
                                                const LatticeVector& point);

}  // namespace fano
