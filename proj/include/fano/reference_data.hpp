#pragma once

// Published reference values: the vertex matrices of the Fano tetrahedra, the
// minimal and the maximal Fano polytopes, and the counts by vertex number.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano::reference {

/// A 3 x k vertex matrix, stored row by row, with a short label.
struct VertexMatrix {
  std::string label;
  std::array<std::vector<Int>, 3> rows;

  Polytope polytope() const { return Polytope::from_rows(rows[0], rows[1], rows[2]); }
  std::size_t columns() const { return rows[0].size(); }
};

/// Fano tetrahedra, each labelled by its weight system.
const std::vector<VertexMatrix>& tetrahedra();

/// Minimal Fano polytopes (tetrahedra first).
const std::vector<VertexMatrix>& minimal_polytopes();

/// Maximal Fano polytopes.
const std::vector<VertexMatrix>& maximal_polytopes();

/// The admissible weight systems.
const std::vector<std::array<Int, 4>>& weight_systems();

/// Columns of the count table are vertex numbers 4..14.
inline constexpr std::size_t kMinVertices = 4;
inline constexpr std::size_t kMaxVertices = 14;
using CountRow = std::array<std::size_t, kMaxVertices - kMinVertices + 1>;

struct PublishedCounts {
  Int h_bound{30};
  std::size_t weight_systems{7};
  std::size_t tetrahedra{8};
  std::size_t minimal{13};
  CountRow polytopes{8, 38, 95, 144, 151, 107, 59, 21, 8, 2, 1};
  CountRow simplicial{8, 35, 75, 74, 35, 5, 1, 0, 0, 0, 0};
  CountRow minimal_row{8, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0};
  CountRow maximal_row{0, 0, 0, 0, 3, 1, 2, 1, 1, 0, 1};
  std::size_t total{634};
  std::size_t simplicial_total{233};
  std::size_t non_simplicial_total{401};
  std::size_t smooth{18};
  std::size_t maximal{9};
  /// Picard number -> count among simplicial minimal polytopes.
  std::vector<std::pair<Int, std::size_t>> minimal_picard{{1, 8}, {2, 2}, {3, 2}};
  std::size_t minimal_non_simplicial{1};
};

}  // namespace fano::reference
