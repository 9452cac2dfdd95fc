#include "fano/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fano/equivalence.hpp"
#include "fano/minimal_catalog.hpp"
#include "fano/report.hpp"
#include "fano/weights.hpp"

namespace fano {

namespace {

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class Range>
std::string show_range(const Range& r, const char* sep = ",") {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : r) {
    os << (first ? "" : sep) << x;
    first = false;
  }
  os << ')';
  return os.str();
}

template <class T>
CheckResult same(std::string name, const T& expected, const T& actual) {
  return {std::move(name), expected == actual, show(expected), show(actual)};
}

template <class Range>
CheckResult same_range(std::string name, const Range& expected, const Range& actual) {
  return {std::move(name), expected == actual, show_range(expected), show_range(actual)};
}

std::vector<Polytope> polytopes_of(const std::vector<reference::VertexMatrix>& table) {
  std::vector<Polytope> out;
  for (const auto& m : table) out.push_back(m.polytope());
  return out;
}

void weight_checks(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const HBoundSearch search = run_h_bound_search();
  out.push_back(same("h bound from the sequence search", o.expected.h_bound, search.bound()));

  std::vector<std::string> expected, actual;
  for (const auto& l : reference::weight_systems()) expected.push_back(show(WeightSystem(l)));
  for (const auto& w : enumerate_weight_systems()) actual.push_back(show(w));
  out.push_back(same("number of admissible weight systems", o.expected.weight_systems, actual.size()));
  out.push_back(same_range("admissible weight systems", expected, actual));
}

void tetrahedron_checks(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto tets = enumerate_fano_tetrahedra();
  out.push_back(same("Fano tetrahedra classes", o.expected.tetrahedra, tets.size()));
  out.push_back({"tetrahedra match the reference matrices",
                 matches_bijectively(tets, polytopes_of(reference::tetrahedra())), "bijection", ""});

  std::vector<std::string> expected, actual;
  for (const auto& m : reference::tetrahedra()) expected.push_back(m.label);
  for (const auto& t : tets) {
    const auto& v = t.vertices();
    const auto w = barycentric_of_origin({v[0], v[1], v[2], v[3]});
    actual.push_back(w ? "1/" + show(w->h()) + show_range(w->lambdas()) : "none");
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  out.push_back(same_range("tetrahedron weight systems", expected, actual));

  if (o.oracle) {
    const auto found = brute_force_tetrahedra_oracle(o.box, o.jobs);
    out.push_back({"box " + std::to_string(o.box) + " search agrees with tetrahedra",
                   found.size() == tets.size() && matches_bijectively(found, tets), show(tets.size()),
                   show(found.size())});
  }
}

void minimal_checks(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto mins = enumerate_minimal_polytopes();
  out.push_back(same("minimal classes", o.expected.minimal, mins.size()));

  std::map<std::size_t, std::size_t> hist;
  for (const auto& p : mins) ++hist[p.vertex_count()];
  reference::CountRow row{};
  for (const auto& [n, c] : hist)
    if (n >= reference::kMinVertices && n <= reference::kMaxVertices) row[n - reference::kMinVertices] = c;
  out.push_back(same_range("minimal vertex-count histogram", o.expected.minimal_row, row));
  out.push_back({"minimal polytopes match the reference matrices",
                 matches_bijectively(mins, polytopes_of(reference::minimal_polytopes())), "bijection",
                 ""});

  if (o.oracle) {
    std::vector<Polytope> beyond_tets;
    for (const auto& p : mins)
      if (p.vertex_count() > 4) beyond_tets.push_back(p);
    const auto found = structural_non_tetrahedra_search();
    out.push_back({"box 3 structural search agrees with minimal non-tetrahedra",
                   matches_bijectively(found, beyond_tets), show(beyond_tets.size()),
                   show(found.size())});
  }
}

}  // namespace

reference::PublishedCounts perturbed(reference::PublishedCounts c) {
  c.h_bound += 1;
  c.weight_systems += 1;
  c.tetrahedra += 1;
  c.minimal += 1;
  c.total += 1;
  c.polytopes[0] += 1;
  c.smooth += 1;
  c.maximal += 1;
  return c;
}

bool matches_bijectively(const std::vector<Polytope>& found, const std::vector<Polytope>& reference) {
  if (found.size() != reference.size()) return false;
  std::vector<bool> used(found.size(), false);
  for (const auto& r : reference) {
    std::size_t hits = 0, at = 0;
    for (std::size_t i = 0; i < found.size(); ++i)
      if (are_equivalent(found[i], r)) ++hits, at = i;
    if (hits != 1 || used[at]) return false;
    used[at] = true;
  }
  return true;
}

std::vector<CheckResult> verify_classification(const std::vector<ClassificationRecord>& records,
                                               const reference::PublishedCounts& e) {
  std::vector<CheckResult> out;
  const ClassificationReport r = summarize(records);
  out.push_back(same("total classes", e.total, r.total));
  out.push_back(same_range("polytopes by vertex count", e.polytopes, count_row(r, &HistogramRow::total)));
  out.push_back(
      same_range("simplicial by vertex count", e.simplicial, count_row(r, &HistogramRow::simplicial)));
  out.push_back(same("simplicial total", e.simplicial_total, r.simplicial));
  out.push_back(same("non-simplicial total", e.non_simplicial_total, r.non_simplicial));
  out.push_back(same("smooth classes", e.smooth, r.smooth));
  out.push_back(same_range("minimal by vertex count", e.minimal_row, count_row(r, &HistogramRow::minimal)));
  out.push_back(same("maximal classes", e.maximal, r.maximal));
  out.push_back(same_range("maximal by vertex count", e.maximal_row, count_row(r, &HistogramRow::maximal)));

  std::vector<Polytope> maximal;
  std::vector<std::size_t> simplicial_maximal, maximal_counts;
  for (const auto& rec : records)
    if (rec.maximal) {
      maximal.push_back(rec.polytope);
      if (rec.simplicial) simplicial_maximal.push_back(rec.vertex_count);
      if (rec.vertex_count == 8) maximal_counts.push_back(rec.vertex_count);
    }
  out.push_back({"maximal polytopes match the reference matrices",
                 matches_bijectively(maximal, polytopes_of(reference::maximal_polytopes())), "bijection",
                 ""});
  out.push_back(same_range("simplicial maximal are exactly the 8-vertex ones", maximal_counts,
                           simplicial_maximal));

  std::map<Int, std::size_t> picard;
  std::size_t min_non_simplicial = 0, min_non_simplicial_5 = 0;
  for (const auto& rec : records) {
    if (!rec.minimal) continue;
    if (rec.picard) ++picard[*rec.picard];
    else {
      ++min_non_simplicial;
      if (rec.vertex_count == 5) ++min_non_simplicial_5;
    }
  }
  std::vector<std::string> expected_picard, actual_picard;
  for (const auto& [p, c] : e.minimal_picard) expected_picard.push_back(show(c) + "x" + show(p));
  for (const auto& [p, c] : picard) actual_picard.push_back(show(c) + "x" + show(p));
  out.push_back(same_range("Picard numbers of simplicial minimal", expected_picard, actual_picard));
  out.push_back(same("non-simplicial minimal classes", e.minimal_non_simplicial, min_non_simplicial));
  out.push_back(same("non-simplicial minimal classes with 5 vertices", e.minimal_non_simplicial,
                     min_non_simplicial_5));

  const auto problems = recheck_records(records);
  out.push_back({"records re-derive their flags and edges", problems.empty(), "0 problems",
                 show(problems.size()) + " problems" + (problems.empty() ? "" : ", first: " + problems[0])});
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto want = [&](VerifyScope s) { return o.scope == VerifyScope::all || o.scope == s; };
  if (want(VerifyScope::weights)) weight_checks(o, out);
  if (want(VerifyScope::tetrahedra)) tetrahedron_checks(o, out);
  if (want(VerifyScope::minimal)) minimal_checks(o, out);
  if (want(VerifyScope::classification)) {
    GrowthOptions g;
    g.jobs = o.jobs;
    auto more = verify_classification(classify_all(g), o.expected);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

}  // namespace fano
