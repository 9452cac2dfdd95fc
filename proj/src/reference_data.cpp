#include "fano/reference_data.hpp"

namespace fano::reference {

const std::vector<VertexMatrix>& tetrahedra() {
  static const std::vector<VertexMatrix> table{
      {"1/4(1,1,1,1)", {{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}}},
      {"1/4(1,1,1,1)", {{{1, 0, 1, -2}, {0, 1, -3, 2}, {0, 0, 5, -5}}}},
      {"1/5(1,1,1,2)", {{{1, 0, 1, -1}, {0, 1, 1, -1}, {0, 0, 2, -1}}}},
      {"1/7(1,1,2,3)", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 3, -2}}}},
      {"1/11(1,2,3,5)", {{{1, 0, -2, 1}, {0, 1, 1, -1}, {0, 0, 5, -3}}}},
      {"1/13(1,3,4,5)", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 5, -4}}}},
      {"1/17(2,3,5,7)", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 7, -5}}}},
      {"1/19(3,4,5,7)", {{{1, 0, -2, 1}, {0, 1, 2, -2}, {0, 0, 7, -5}}}},
  };
  return table;
}

const std::vector<VertexMatrix>& minimal_polytopes() {
  static const std::vector<VertexMatrix> table{
      {"4 vertices, simplicial", {{{1, 0, 1, -2}, {0, 1, -3, 2}, {0, 0, 5, -5}}}},
      {"4 vertices, simplicial", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 7, -5}}}},
      {"4 vertices, simplicial", {{{1, 0, -2, 1}, {0, 1, 2, -2}, {0, 0, 7, -5}}}},
      {"4 vertices, simplicial", {{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}}},
      {"4 vertices, simplicial", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 5, -4}}}},
      {"4 vertices, simplicial", {{{1, 0, -2, 1}, {0, 1, 1, -1}, {0, 0, 5, -3}}}},
      {"4 vertices, simplicial", {{{1, 0, 1, -1}, {0, 1, 1, -1}, {0, 0, 2, -1}}}},
      {"4 vertices, simplicial", {{{1, 0, 1, -1}, {0, 1, -2, 1}, {0, 0, 3, -2}}}},
      {"5 vertices, simplicial", {{{1, 0, 1, -1, -1}, {0, 1, 2, -1, -2}, {0, 0, 3, 0, -3}}}},
      {"5 vertices, simplicial", {{{1, 0, 0, -1, 0}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}}}},
      {"5 vertices", {{{1, 0, 1, -1, 0}, {0, 1, 1, -1, 0}, {0, 0, 1, 0, -1}}}},
      {"6 vertices, simplicial", {{{1, 0, 1, -1, 0, -1}, {0, 1, 1, 0, -1, -1}, {0, 0, 2, 0, 0, -2}}}},
      {"6 vertices, simplicial", {{{1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, 0, -1}}}},
  };
  return table;
}

const std::vector<VertexMatrix>& maximal_polytopes() {
  static const std::vector<VertexMatrix> table{
      {"8 vertices, simplicial",
       {{{1, 0, 0, -1, -1, 0, -1, 3}, {0, 1, 0, -1, 0, -1, 1, -2}, {0, 0, 1, -1, 0, -1, 2, -1}}}},
      {"8 vertices, simplicial",
       {{{1, 0, 0, -1, -1, 1, -2, 3}, {0, 1, 0, -1, 0, -1, -1, -2}, {0, 0, 1, -1, 0, 0, -1, -1}}}},
      {"8 vertices, simplicial",
       {{{1, 0, 1, -2, -1, 1, 0, 0}, {0, 1, -3, 2, 1, -1, -1, 1}, {0, 0, 5, -5, -2, 2, 1, -1}}}},
      {"9 vertices",
       {{{1, 0, 0, -1, -1, 0, 1, -1, -2},
         {0, 1, 0, -1, 0, -1, 1, -2, 1},
         {0, 0, 1, -1, 0, 0, 0, -1, -1}}}},
      {"10 vertices",
       {{{1, 0, 0, -1, -1, 0, 0, -1, 0, -1},
         {0, 1, 0, -1, 0, -1, 0, 1, -1, 2},
         {0, 0, 1, -1, 0, 0, -1, 0, 1, 1}}}},
      {"10 vertices",
       {{{1, 0, 0, -1, -1, 0, 0, -1, 0, -1},
         {0, 1, 0, -1, 0, -1, 0, 1, 1, -2},
         {0, 0, 1, -1, 0, 0, -1, 0, -1, -1}}}},
      {"11 vertices",
       {{{1, 0, 0, -1, -1, 0, 0, 1, -1, 0, 1},
         {0, 1, 0, -1, 0, -1, 0, 1, 1, -1, 0},
         {0, 0, 1, -1, 0, 0, -1, 1, 0, 1, -1}}}},
      {"12 vertices",
       {{{1, 0, 0, -1, -1, 0, 0, 1, -1, 1, -1, 0},
         {0, 1, 0, -1, 0, -1, 0, 1, -1, 1, 0, 1},
         {0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 1, -1}}}},
      {"14 vertices",
       {{{1, 0, 0, -1, -1, 0, 0, 1, -1, 1, -1, 1, 0, 0},
         {0, 1, 0, -1, 0, -1, 0, 1, -1, 1, 0, 0, 1, -1},
         {0, 0, 1, -1, 0, 0, -1, 1, 0, 0, -1, 1, 1, -1}}}},
  };
  return table;
}

const std::vector<std::array<Int, 4>>& weight_systems() {
  static const std::vector<std::array<Int, 4>> table{
      {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 5},
      {1, 3, 4, 5}, {2, 3, 5, 7}, {3, 4, 5, 7},
  };
  return table;
}

}  // namespace fano::reference
