#include <doctest.h>

#include <map>
#include <set>

#include "fano/equivalence.hpp"
#include "fano/minimal_catalog.hpp"
#include "fano/reference_data.hpp"
#include "fano/verify.hpp"
#include "fano/weights.hpp"
#include "support.hpp"

using namespace fano;

namespace {

std::vector<Polytope> reference_polytopes(const std::vector<reference::VertexMatrix>& t) {
  std::vector<Polytope> out;
  for (const auto& m : t) out.push_back(m.polytope());
  return out;
}

std::string weight_label(const Polytope& t) {
  const auto& v = t.vertices();
  const auto w = barycentric_of_origin({v[0], v[1], v[2], v[3]});
  REQUIRE(w);
  std::string s = "1/" + std::to_string(w->h()) + "(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string((*w)[i]);
  return s + ")";
}

}  // namespace

TEST_CASE("parametrization examples") {
  const WeightSystem w1235({1, 2, 3, 5});
  const auto p = TetParametrization::with_bezout(w1235, 1, 1, 1);
  CHECK(p.a == 2);
  CHECK(p.b == -1);
  CHECK(p.a * 3 + p.b * 5 == 1);
  const auto t = tet_from_params(p);
  CHECK(is_fano(t));
  CHECK(are_equivalent(t, Polytope::hull({e1, e2, {-2, 1, 5}, {1, -1, -3}})));

  const auto q = TetParametrization::with_bezout(WeightSystem({1, 1, 1, 1}), 1, 1, 0);
  CHECK(q.a == 1);
  CHECK(q.b == 0);
  CHECK(are_equivalent(tet_from_params(q), Polytope::hull({e1, e2, e3, {-1, -1, -1}})));

  const auto r = TetParametrization::with_bezout(WeightSystem({1, 1, 1, 2}), 1, 1, 1);
  CHECK(are_equivalent(tet_from_params(r), reference::tetrahedra()[2].polytope()));
}

TEST_CASE("parametrized tetrahedra have the right weights") {
  for (const auto& p : tetrahedron_parametrizations(4)) {
    std::optional<Polytope> t;
    try {
      t = tet_from_params(p);
    } catch (const DegenerateInput&) {
      continue;
    }
    if (t->vertex_count() != 4) continue;
    const auto& v = t->vertices();
    const auto w = barycentric_of_origin({v[0], v[1], v[2], v[3]});
    REQUIRE(w);
    CHECK(*w == p.weights);
  }
}

TEST_CASE("no (1,1,2,3) tetrahedron survives for k >= 3") {
  const WeightSystem w({1, 1, 2, 3});
  for (const auto& p : tetrahedron_parametrizations(10)) {
    if (!(p.weights == w) || p.k < 3) continue;
    try {
      CHECK_FALSE(is_fano(tet_from_params(p)));
    } catch (const DegenerateInput&) {
    }
  }
}

TEST_CASE("the eight tetrahedra") {
  const auto tets = enumerate_fano_tetrahedra();
  CHECK(tets.size() == 8);
  CHECK(matches_bijectively(tets, reference_polytopes(reference::tetrahedra())));
  bool has_k5 = false;
  for (const auto& t : tets) {
    CHECK(is_fano(t));
    CHECK(is_minimal(t));
    has_k5 |= static_cast<bool>(are_equivalent(t, reference::tetrahedra()[1].polytope()));
  }
  CHECK(has_k5);

  std::multiset<std::string> labels, want;
  for (const auto& t : tets) labels.insert(weight_label(t));
  for (const auto& m : reference::tetrahedra()) want.insert(m.label);
  CHECK(labels == want);
}

TEST_CASE("box search agrees with the construction") {
  CHECK_THROWS(brute_force_tetrahedra_oracle(6));
  const auto found = brute_force_tetrahedra_oracle(7);
  CHECK(found.size() == 8);
  CHECK(matches_bijectively(found, enumerate_fano_tetrahedra()));
  std::multiset<std::string> labels;
  for (const auto& t : found) labels.insert(weight_label(t));
  CHECK(labels.count("1/4(1,1,1,1)") == 2);
  CHECK(labels.size() == 8);
}

TEST_CASE("box search at 9") {
  const auto found = search_tetrahedra_in_box(9);
  CHECK(found.size() == 8);
  CHECK(matches_bijectively(found, enumerate_fano_tetrahedra()));
}

TEST_CASE("minimality examples") {
  const auto oct = Polytope::hull({e1, -e1, e2, -e2, e3, -e3});
  CHECK(is_minimal(oct));
  const auto bigger = Polytope::hull({e1, -e1, e2, -e2, e3, -e3, {1, 1, 1}});
  CHECK(is_fano(bigger));
  CHECK_FALSE(is_minimal(bigger));
  for (const auto& m : reference::tetrahedra()) CHECK(is_minimal(m.polytope()));
}

TEST_CASE("the thirteen minimal polytopes") {
  const auto mins = enumerate_minimal_polytopes();
  CHECK(mins.size() == 13);
  std::map<std::size_t, std::size_t> hist;
  for (const auto& p : mins) ++hist[p.vertex_count()];
  CHECK(hist == std::map<std::size_t, std::size_t>{{4, 8}, {5, 3}, {6, 2}});
  CHECK(matches_bijectively(mins, reference_polytopes(reference::minimal_polytopes())));

  const auto contains = [&](const Polytope& q) {
    for (const auto& p : mins)
      if (are_equivalent(p, q)) return true;
    return false;
  };
  CHECK(contains(Polytope::hull({e1, -e1, e2, -e2, e3, -e3})));
  CHECK(contains(Polytope::hull({e1, e2, {-1, -1, 0}, {1, 2, 3}, {-1, -2, -3}})));

  std::size_t non_simplicial = 0;
  for (const auto& p : mins) {
    if (is_simplicial(p)) continue;
    ++non_simplicial;
    CHECK(p.vertex_count() == 5);
  }
  CHECK(non_simplicial == 1);
}

TEST_CASE("every vertex-deleted hull of a minimal polytope fails") {
  for (const auto& p : enumerate_minimal_polytopes()) {
    const auto& vs = p.vertices();
    for (std::size_t skip = 0; skip < vs.size(); ++skip) {
      std::vector<LatticeVector> rest;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (i != skip) rest.push_back(vs[i]);
      bool fano = false;
      try {
        fano = is_fano(Polytope::hull(rest));
      } catch (const DegenerateInput&) {
      }
      CHECK_FALSE(fano);
    }
  }
}

TEST_CASE("five-vertex minimal polytopes have an antipodal pair or a parallelogram") {
  for (const auto& p : enumerate_minimal_polytopes()) {
    if (p.vertex_count() != 5) continue;
    const auto& v = p.vertices();
    bool found = false;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) {
        if (v[i] + v[j] == LatticeVector{}) found = true;
        for (std::size_t k = 0; k < 5; ++k)
          for (std::size_t l = k + 1; l < 5; ++l)
            if (k != i && k != j && l != i && l != j && v[i] + v[j] == v[k] + v[l]) found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("structural search over small boxes finds the five non-tetrahedra") {
  const auto found = structural_non_tetrahedra_search(3);
  CHECK(matches_bijectively(found, minimal_non_tetrahedra()));
}
