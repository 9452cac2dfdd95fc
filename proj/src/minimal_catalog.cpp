#include "fano/minimal_catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "fano/equivalence.hpp"
#include "fano/weights.hpp"

namespace fano {

TetParametrization TetParametrization::with_bezout(const WeightSystem& w, Int k, Int kp, Int kpp) {
  const Int l3 = w[2], l4 = w[3];
  // a = l3^{-1} mod l4, taken in {1, ..., l4}.
  auto [g, s, t] = extended_gcd(l3, l4);
  if (g != 1) throw std::invalid_argument("with_bezout: l3 and l4 not coprime");
  Int a = floor_mod(s, l4);
  if (a == 0) a = l4;
  const Int b = (1 - a * l3) / l4;
  return {w, a, b, k, kp, kpp};
}

bool TetParametrization::satisfies_primary_bounds() const {
  const Int l1 = weights[0], l2 = weights[1], l4 = weights[3];
  for (Int v : {kpp * l4 - a * l1, kp * l4 - a * l2}) {
    if (v < 0 || v >= k * l4) return false;
    if (v == 0 && l4 != 1) return false;
  }
  return true;
}

bool TetParametrization::satisfies_secondary_bounds() const {
  const Int l1 = weights[0], l2 = weights[1], l3 = weights[2];
  for (Int v : {(k - kpp) * l3 - b * l1, (k - kp) * l3 - b * l2}) {
    if (v < 0 || v >= k * l3) return false;
    if (v == 0 && l3 != 1) return false;
  }
  return true;
}

std::array<LatticeVector, 4> TetParametrization::vertices() const {
  const Int l1 = weights[0], l2 = weights[1], l3 = weights[2], l4 = weights[3];
  using checked::mul;
  using checked::sub;
  const LatticeVector x{sub(mul(kpp, l4), mul(a, l1)), sub(mul(kp, l4), mul(a, l2)), mul(k, l4)};
  const LatticeVector y{sub(mul(-kpp, l3), mul(b, l1)), sub(mul(-kp, l3), mul(b, l2)), mul(-k, l3)};
  return {e1, e2, x, y};
}

Polytope tet_from_params(const TetParametrization& p) {
  const auto vs = p.vertices();
  return Polytope::hull(vs);
}

std::vector<KRelation> k_relations(const WeightSystem& w) {
  using L = std::array<Int, 4>;
  const L& l = w.lambdas();
  if (l == L{1, 1, 1, 1}) return {{true, -2, false, 2}, {false, 3, true, -1}};
  if (l == L{1, 1, 1, 2}) return {{true, -1, false, 1}, {true, -1, false, 2}};
  if (l == L{1, 1, 2, 3}) return {{true, 0, false, 1}, {false, 1, false, 1, true}};
  if (l == L{1, 2, 3, 5}) return {{false, 1, true, 0}};
  if (l == L{1, 3, 4, 5}) return {{true, -2, false, 1}, {true, 2, false, 1}};
  if (l == L{2, 3, 5, 7}) return {{true, 1, false, 1}};
  if (l == L{3, 4, 5, 7}) return {{false, 2, true, 1}};
  return {};
}

std::vector<TetParametrization> tetrahedron_parametrizations(Int k_max) {
  std::vector<TetParametrization> out;
  for (const auto& w : fano_weight_systems()) {
    for (const auto& rel : k_relations(w)) {
      for (Int k = 1; k <= (rel.fixed_k ? 1 : k_max); ++k) {
        const Int kp = rel.kp_relative ? k + rel.kp : rel.kp;
        const Int kpp = rel.kpp_relative ? k + rel.kpp : rel.kpp;
        out.push_back(TetParametrization::with_bezout(w, k, kp, kpp));
      }
    }
  }
  // l3 = 1 exceptions: l4 = 1 forces k' = 1; l4 = 2 gives k = k' = k'' = 1.
  const WeightSystem w1111({1, 1, 1, 1});
  for (Int k = 1; k <= k_max; ++k)
    for (Int kpp = 0; kpp <= k; ++kpp) out.push_back(TetParametrization::with_bezout(w1111, k, 1, kpp));
  out.push_back(TetParametrization::with_bezout(WeightSystem({1, 1, 1, 2}), 1, 1, 1));
  return out;
}

std::vector<Polytope> enumerate_fano_tetrahedra(Int k_max) {
  std::vector<Polytope> found;
  for (const auto& params : tetrahedron_parametrizations(k_max)) {
    std::optional<Polytope> tet;
    try {
      tet = tet_from_params(params);
    } catch (const DegenerateInput&) {
      continue;
    }
    if (tet->vertex_count() == 4 && is_fano(*tet)) found.push_back(*tet);
  }
  return unique_up_to_equivalence(found);
}

// ---------------------------------------------------------------------------

namespace {

bool empty_triangle_with_origin(const LatticeVector& a, const LatticeVector& b) {
  const LatticeVector n = cross(a, b);
  return n.is_zero() || is_primitive(n);
}

}  // namespace

std::vector<Polytope> search_tetrahedra_in_box(Int box, unsigned jobs) {
  // By the empty-triangle normalization every Fano tetrahedron has two
  // vertices at e1, e2; reflecting z lets the third have positive height.
  std::vector<LatticeVector> upper, lower;
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y)
      for (Int z = -box; z <= box; ++z) {
        const LatticeVector v{x, y, z};
        if (z == 0 || !is_primitive(v)) continue;
        if (!empty_triangle_with_origin(e1, v) || !empty_triangle_with_origin(e2, v)) continue;
        (z > 0 ? upper : lower).push_back(v);
      }

  jobs = std::max(1u, jobs);
  std::vector<std::vector<Polytope>> per_job(jobs);
  auto work = [&](unsigned job) {
    for (std::size_t i = job; i < upper.size(); i += jobs) {
      const LatticeVector& x = upper[i];
      for (const LatticeVector& y : lower) {
        if (!empty_triangle_with_origin(x, y)) continue;
        const std::array<LatticeVector, 4> tet{e1, e2, x, y};
        if (det3(Matrix3::from_columns(x - e1, y - e1, e2 - e1)) == 0) continue;  // flat
        if (!barycentric_of_origin(tet)) continue;
        const Polytope p = Polytope::hull(tet);
        if (is_fano_by_cones(p) && is_fano(p)) per_job[job].push_back(p);
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(work, j);
  work(0);
  for (auto& t : threads) t.join();

  std::vector<Polytope> all;
  for (auto& v : per_job) all.insert(all.end(), v.begin(), v.end());
  return unique_up_to_equivalence(all);
}

std::vector<Polytope> brute_force_tetrahedra_oracle(Int box, unsigned jobs) {
  if (box < 7) throw std::invalid_argument("brute_force_tetrahedra_oracle: box must be >= 7");
  return search_tetrahedra_in_box(box, jobs);
}

bool is_minimal(const Polytope& p) {
  const auto& vs = p.vertices();
  std::vector<LatticeVector> rest;
  for (std::size_t skip = 0; skip < vs.size(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != skip) rest.push_back(vs[i]);
    try {
      if (is_fano(Polytope::hull(rest))) return false;
    } catch (const DegenerateInput&) {
      // flat: not Fano
    }
  }
  return true;
}

std::vector<Polytope> minimal_non_tetrahedra() {
  const auto make = [](std::vector<Int> r0, std::vector<Int> r1, std::vector<Int> r2) {
    return Polytope::from_rows(r0, r1, r2);
  };
  return {
      // octahedra
      make({1, 0, -1, 0, 0, 0}, {0, 1, 0, -1, 0, 0}, {0, 0, 0, 0, 1, -1}),
      make({1, 0, -1, 0, 1, -1}, {0, 1, 0, -1, 1, -1}, {0, 0, 0, 0, 2, -2}),
      // Fano triangle plus an antipodal pair
      make({1, 0, -1, 0, 0}, {0, 1, -1, 0, 0}, {0, 0, 0, 1, -1}),
      make({1, 0, -1, 1, -1}, {0, 1, -1, 2, -2}, {0, 0, 0, 3, -3}),
      // parallelogram
      make({1, 0, -1, 1, 0}, {0, 1, -1, 1, 0}, {0, 0, 0, 1, -1}),
  };
}

std::vector<Polytope> structural_non_tetrahedra_search(Int box) {
  std::vector<LatticeVector> upper, lower;
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y)
      for (Int z = -box; z <= box; ++z) {
        const LatticeVector v{x, y, z};
        if (z == 0 || !is_primitive(v)) continue;
        (z > 0 ? upper : lower).push_back(v);
      }

  const std::vector<LatticeVector> triangle{e1, e2, {-1, -1, 0}};
  const std::vector<LatticeVector> square{e1, e2, -e1, -e2};
  std::vector<Polytope> found;
  for (const auto& base : {triangle, square}) {
    const std::size_t want = base.size() + 2;
    std::vector<LatticeVector> pts = base;
    pts.resize(want);
    for (const auto& x : upper)
      for (const auto& y : lower) {
        pts[want - 2] = x;
        pts[want - 1] = y;
        const Polytope p = Polytope::hull(pts);
        if (p.vertex_count() != want) continue;
        if (!is_fano_by_cones(p) || !is_fano(p) || !is_minimal(p)) continue;
        found.push_back(p);
      }
  }
  return unique_up_to_equivalence(found);
}

std::vector<Polytope> enumerate_minimal_polytopes() {
  std::vector<Polytope> candidates = enumerate_fano_tetrahedra();
  for (auto& p : minimal_non_tetrahedra()) candidates.push_back(std::move(p));
  std::vector<Polytope> kept;
  for (auto& p : candidates)
    if (is_fano(p) && is_minimal(p)) kept.push_back(std::move(p));
  return unique_up_to_equivalence(kept);
}

}  // namespace fano
