#pragma once

// The minimal Fano polytopes: eight tetrahedra built from their weight
// systems, five non-tetrahedra from the octahedron, antipodal-pair and
// parallelogram cases, and brute-force searches that cross-check both.

#include <optional>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano {

/// Vertex coordinates of a Fano tetrahedron normalized so that two vertices
/// are e1 and e2:
///   e1, e2, (k''l4 - a l1, k'l4 - a l2, k l4), (-k''l3 - b l1, -k'l3 - b l2, -k l3)
/// with a*l3 + b*l4 = 1.
struct TetParametrization {
  WeightSystem weights;
  Int a{0};
  Int b{0};
  Int k{1};
  Int kp{0};   ///< k'
  Int kpp{0};  ///< k''

  /// Fills (a, b) with the least positive a solving a*l3 + b*l4 = 1.
  static TetParametrization with_bezout(const WeightSystem& w, Int k, Int kp, Int kpp);

  /// 0 <= k''l4 - a l1 < k l4 and 0 <= k'l4 - a l2 < k l4, zero only if l4 = 1.
  bool satisfies_primary_bounds() const;
  /// 0 <= (k-k'')l3 - b l1 < k l3 and 0 <= (k-k')l3 - b l2 < k l3, zero only if l3 = 1.
  bool satisfies_secondary_bounds() const;

  std::array<LatticeVector, 4> vertices() const;
};

/// The tetrahedron of a parametrization. Throws DegenerateInput when the four
/// points are affinely dependent.
Polytope tet_from_params(const TetParametrization& p);

/// One row of the k, k', k'' relationship table: k' and k'' are either fixed
/// or k plus an offset. fixed_k restricts the row to k = 1.
struct KRelation {
  bool kp_relative{false};
  Int kp{0};
  bool kpp_relative{false};
  Int kpp{0};
  bool fixed_k{false};
};

/// Rows of the relationship table for an admissible weight system.
std::vector<KRelation> k_relations(const WeightSystem& w);

/// Candidate parametrizations for every admissible weight system, with
/// k = 1..k_max, including the two exceptional families with l3 = 1.
std::vector<TetParametrization> tetrahedron_parametrizations(Int k_max = 10);

/// The eight Fano tetrahedra up to equivalence, as canonical forms.
std::vector<Polytope> enumerate_fano_tetrahedra(Int k_max = 10);

/// Exhaustive search over {e1, e2, x, y} with x, y in [-box, box]^3.
/// Requires box >= 7 (throws std::invalid_argument otherwise).
std::vector<Polytope> brute_force_tetrahedra_oracle(Int box = 7, unsigned jobs = 1);

/// Unchecked variant used for small-box tests.
std::vector<Polytope> search_tetrahedra_in_box(Int box, unsigned jobs = 1);

/// Vertex-deletion test: no hull of all-but-one vertex is Fano.
bool is_minimal(const Polytope& p);

/// The five non-tetrahedral minimal polytopes: two octahedra, two bipyramids
/// over the Fano triangle with an antipodal pair, and the parallelogram case.
std::vector<Polytope> minimal_non_tetrahedra();

/// Brute force over {e1, e2, -e1-e2, x, y} and {+-e1, +-e2, x, y} with x, y
/// in [-box, box]^3, kept when Fano and minimal.
std::vector<Polytope> structural_non_tetrahedra_search(Int box = 3);

/// The thirteen minimal Fano polytopes, ordered by vertex count.
std::vector<Polytope> enumerate_minimal_polytopes();

}  // namespace fano
