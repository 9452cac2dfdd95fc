#include <doctest.h>

#include <algorithm>
#include <map>

#include "fano/equivalence.hpp"
#include "fano/growth.hpp"
#include "fano/minimal_catalog.hpp"
#include "fano/reference_data.hpp"
#include "fano/report.hpp"
#include "support.hpp"

using namespace fano;

namespace {

const std::vector<ClassificationRecord>& all_records() {
  static const auto records = classify_all();
  return records;
}

bool has(const std::vector<LatticeVector>& vs, const LatticeVector& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST_CASE("candidate families") {
  const auto simplex = Polytope::hull({e1, e2, e3, {-1, -1, -1}});
  const auto c = candidate_vertices(simplex);
  for (const LatticeVector v : {-e1, -e2, -e3, LatticeVector{1, 1, 1}}) CHECK(has(c, v));
  CHECK_FALSE(has(c, e1));
  CHECK_FALSE(has(c, {0, 0, 0}));
  for (const auto& v : c) CHECK(is_primitive(v));

  const auto oct = Polytope::hull({e1, -e1, e2, -e2, e3, -e3});
  CHECK(has(candidate_vertices(oct), {-1, -1, 0}));
}

TEST_CASE("children examples") {
  const auto oct = Polytope::hull({e1, -e1, e2, -e2, e3, -e3});
  const auto kids = children(oct);
  CHECK_FALSE(kids.empty());
  const auto plus = Polytope::hull({e1, -e1, e2, -e2, e3, -e3, {1, 1, 1}});
  CHECK(testing::oracle_is_fano(plus.vertices()));
  bool found = false;
  for (const auto& k : kids) {
    CHECK(k.vertex_count() == 7);
    CHECK(is_fano(k));
    found |= static_cast<bool>(are_equivalent(k, plus));
  }
  CHECK(found);
  CHECK_FALSE(is_maximal(oct));

  CHECK(children(reference::maximal_polytopes().back().polytope()).empty());
  CHECK(is_maximal(reference::maximal_polytopes().front().polytope()));
  for (const auto& m : reference::tetrahedra()) CHECK_FALSE(is_maximal(m.polytope()));
}

TEST_CASE("try_add_vertex keeps every old vertex") {
  const auto simplex = Polytope::hull({e1, e2, e3, {-1, -1, -1}});
  for (const auto& c : candidate_vertices(simplex)) {
    const auto q = try_add_vertex(simplex, c);
    if (!q) continue;
    for (const auto& v : simplex.vertices()) CHECK(q->has_vertex(v));
    CHECK(q->has_vertex(c));
    CHECK(is_fano(*q));
  }
  CHECK_FALSE(try_add_vertex(simplex, e1));
  CHECK_FALSE(try_add_vertex(simplex, {2, 0, 0}));
}

TEST_CASE("classification totals") {
  const auto& recs = all_records();
  CHECK(recs.size() == 634);
  std::map<std::size_t, std::size_t> total, simplicial;
  std::size_t smooth = 0, maximal = 0;
  for (const auto& r : recs) {
    ++total[r.vertex_count];
    simplicial[r.vertex_count] += r.simplicial;
    smooth += r.smooth;
    maximal += r.maximal;
  }
  CHECK(total == std::map<std::size_t, std::size_t>{{4, 8}, {5, 38}, {6, 95}, {7, 144}, {8, 151}, {9, 107},
                                                    {10, 59}, {11, 21}, {12, 8}, {13, 2}, {14, 1}});
  CHECK(simplicial[7] == 74);
  CHECK(smooth == 18);
  CHECK(maximal == 9);
}

TEST_CASE("records are closed, consistent and duplicate free") {
  const auto& recs = all_records();
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  for (const auto& r : recs) {
    CHECK(r.id < recs.size());
    CHECK(is_fano(r.polytope));
    CHECK(lattice_points(r.polytope).size() == r.vertex_count + 1);
    CHECK(r.minimal == r.parents.empty());
    CHECK(r.maximal == r.children.empty());
    CHECK(r.picard.has_value() == r.simplicial);
    buckets[fingerprint(r.polytope)].push_back(r.id);
  }
  for (const auto& [fp, ids] : buckets)
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        CHECK_FALSE(are_equivalent(recs[ids[i]].polytope, recs[ids[j]].polytope));
  CHECK(recheck_records(recs).empty());
}

TEST_CASE("every edge adds one vertex to an equivalent copy of the parent") {
  const auto& recs = all_records();
  std::size_t edges = 0;
  for (const auto& child : recs)
    for (auto pid : child.parents) {
      const auto& parent = recs[pid];
      REQUIRE(parent.vertex_count + 1 == child.vertex_count);
      // some vertex of the child can be dropped to get the parent back
      bool found = false;
      const auto& vs = child.polytope.vertices();
      for (std::size_t skip = 0; skip < vs.size() && !found; ++skip) {
        std::vector<LatticeVector> rest;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != skip) rest.push_back(vs[i]);
        std::optional<Polytope> hull;
        try {
          hull = Polytope::hull(rest);
        } catch (const DegenerateInput&) {
          continue;
        }
        const Polytope& q = *hull;
        if (q.vertex_count() != rest.size()) continue;
        if (auto u = are_equivalent(q, parent.polytope)) {
          found = true;
          // new lattice points sit in tetrahedra {0, x_i, x_j, x_new}
          if (edges % 25 == 0) {
            const auto& added = vs[skip];
            for (const auto& pt : lattice_points(child.polytope)) {
              if (q.contains(pt)) continue;
              bool covered = false;
              for (std::size_t i = 0; i < rest.size() && !covered; ++i)
                for (std::size_t j = i + 1; j < rest.size() && !covered; ++j)
                  covered = testing::in_hull_caratheodory({{0, 0, 0}, rest[i], rest[j], added}, pt);
              CHECK(covered);
            }
          }
        }
      }
      CHECK(found);
      ++edges;
    }
  CHECK(edges > 634);
}

TEST_CASE("classification does not depend on the number of jobs") {
  GrowthOptions opts;
  opts.jobs = 4;
  const auto par = classify_all(opts);
  CHECK(serialize(par, OutputFormat::json) == serialize(all_records(), OutputFormat::json));
}

TEST_CASE("class cap aborts") {
  GrowthOptions opts;
  opts.class_cap = 100;
  CHECK_THROWS_AS(classify_all(opts), std::runtime_error);
}
