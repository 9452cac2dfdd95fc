#pragma once

// Growing every Fano polytope from the minimal ones by adding one vertex at a
// time, with global deduplication and the parent/child graph.

#include <cstddef>
#include <optional>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano {

struct ClassificationRecord {
  std::size_t id{0};
  Polytope polytope;
  std::size_t vertex_count{0};
  bool simplicial{false};
  bool smooth{false};
  bool minimal{false};
  bool maximal{false};
  std::optional<Int> picard;  ///< vertex_count - 3, only when simplicial
  std::vector<std::size_t> parents;
  std::vector<std::size_t> children;
};

/// Points that could become a new vertex: -x_i, -x_i - x_j, and the integral
/// solutions x of l_a x_i + l_b x_j + l_c x_k + l_d x = 0 over vertex triples,
/// admissible weight systems and weight placements. Excludes the origin,
/// existing vertices and non-primitive points. Sorted.
std::vector<LatticeVector> candidate_vertices(const Polytope& p);

/// If hull(p + c) is Fano and keeps every vertex of p, returns it.
std::optional<Polytope> try_add_vertex(const Polytope& p, const LatticeVector& c);

/// All children of a Fano polytope up to equivalence (not canonicalized).
std::vector<Polytope> children(const Polytope& p);

/// No child exists.
bool is_maximal(const Polytope& p);

struct GrowthOptions {
  unsigned jobs{1};
  std::size_t class_cap{10000};
};

/// Breadth-first closure of the minimal catalog under children. Records are
/// ordered by vertex count then canonical key; ids are positions. Output does
/// not depend on jobs.
std::vector<ClassificationRecord> classify_all(const GrowthOptions& options = {});

}  // namespace fano
