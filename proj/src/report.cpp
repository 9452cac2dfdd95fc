#include "fano/report.hpp"

#include "fano/minimal_catalog.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fano {

ClassificationReport summarize(const std::vector<ClassificationRecord>& records,
                               std::vector<WeightSystem> weights, Int h_bound) {
  ClassificationReport r;
  r.weights = std::move(weights);
  r.h_bound = h_bound;
  for (const auto& rec : records) {
    HistogramRow& row = r.by_vertices[rec.vertex_count];
    ++row.total;
    ++r.total;
    if (rec.simplicial) ++row.simplicial, ++r.simplicial;
    else ++r.non_simplicial;
    if (rec.smooth) ++row.smooth, ++r.smooth;
    if (rec.minimal) ++row.minimal, ++r.minimal;
    if (rec.maximal) ++row.maximal, ++r.maximal;
  }
  return r;
}

reference::CountRow count_row(const ClassificationReport& r, std::size_t HistogramRow::*field) {
  reference::CountRow out{};
  for (const auto& [n, row] : r.by_vertices)
    if (n >= reference::kMinVertices && n <= reference::kMaxVertices)
      out[n - reference::kMinVertices] = row.*field;
  return out;
}

std::string format_stats(const ClassificationReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "Vertices";
  for (std::size_t n = reference::kMinVertices; n <= reference::kMaxVertices; ++n)
    os << std::right << std::setw(5) << n;
  os << std::right << std::setw(7) << "Total" << '\n';
  const std::pair<const char*, std::size_t HistogramRow::*> rows[] = {
      {"Polytopes", &HistogramRow::total},
      {"Simplicial", &HistogramRow::simplicial},
      {"Minimal", &HistogramRow::minimal},
      {"Maximal", &HistogramRow::maximal},
  };
  for (const auto& [name, field] : rows) {
    os << std::left << std::setw(12) << name;
    std::size_t sum = 0;
    for (std::size_t c : count_row(r, field)) {
      os << std::right << std::setw(5) << c;
      sum += c;
    }
    os << std::right << std::setw(7) << sum << '\n';
  }
  os << "smooth " << r.smooth << ", non-simplicial " << r.non_simplicial << '\n';
  if (!r.weights.empty()) {
    os << "weight systems:";
    for (const auto& w : r.weights) os << ' ' << w;
    os << '\n';
  }
  if (r.h_bound) os << "h bound " << r.h_bound << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const std::vector<ClassificationRecord>& records) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : rec.polytope.vertices()) verts.push_back({v.x, v.y, v.z});
    j["vertices"] = std::move(verts);
    j["simplicial"] = rec.simplicial;
    j["smooth"] = rec.smooth;
    j["minimal"] = rec.minimal;
    j["maximal"] = rec.maximal;
    if (rec.picard) j["picard"] = *rec.picard;
    j["parents"] = rec.parents;
    j["children"] = rec.children;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<ClassificationRecord> from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of records");
  std::vector<ClassificationRecord> out;
  out.reserve(j.size());
  try {
    for (const auto& r : j) {
      std::vector<LatticeVector> pts;
      for (const auto& v : r.at("vertices")) {
        if (v.size() != 3) throw std::invalid_argument("vertex must have three coordinates");
        pts.push_back({v[0].get<Int>(), v[1].get<Int>(), v[2].get<Int>()});
      }
      ClassificationRecord rec{r.at("id").get<std::size_t>(), Polytope::hull(pts), pts.size(), false, false, false,
                               false, std::nullopt, {}, {}};
      if (rec.polytope.vertex_count() != pts.size())
        throw std::invalid_argument("record " + std::to_string(rec.id) + ": listed point is not a vertex");
      rec.simplicial = r.at("simplicial").get<bool>();
      rec.smooth = r.at("smooth").get<bool>();
      rec.minimal = r.at("minimal").get<bool>();
      rec.maximal = r.at("maximal").get<bool>();
      if (r.contains("picard")) rec.picard = r["picard"].get<Int>();
      rec.parents = r.at("parents").get<std::vector<std::size_t>>();
      rec.children = r.at("children").get<std::vector<std::size_t>>();
      out.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  return out;
}

std::string to_tsv(const std::vector<ClassificationRecord>& records) {
  std::ostringstream os;
  os << "id\tvertex_count\tsimplicial\tsmooth\tminimal\tmaximal\tpicard\tparents\tchildren\tvertices\n";
  const auto ids = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  for (const auto& rec : records) {
    os << rec.id << '\t' << rec.vertex_count << '\t' << rec.simplicial << '\t' << rec.smooth << '\t'
       << rec.minimal << '\t' << rec.maximal << '\t';
    if (rec.picard) os << *rec.picard;
    os << '\t' << ids(rec.parents) << '\t' << ids(rec.children) << '\t';
    // column-major: x1 y1 z1 x2 y2 z2 ...
    bool first = true;
    for (const auto& v : rec.polytope.vertices())
      for (Int c : {v.x, v.y, v.z}) {
        os << (first ? "" : ",") << c;
        first = false;
      }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const std::vector<ClassificationRecord>& records) {
  std::ostringstream os;
  for (const auto& rec : records) {
    os << "#" << rec.id << "  " << rec.vertex_count << " vertices";
    if (rec.simplicial) os << ", simplicial";
    if (rec.smooth) os << ", smooth";
    if (rec.minimal) os << ", minimal";
    if (rec.maximal) os << ", maximal";
    if (rec.picard) os << ", picard " << *rec.picard;
    os << '\n';
    const auto& vs = rec.polytope.vertices();
    std::size_t width = 1;
    for (const auto& v : vs)
      for (Int c : {v.x, v.y, v.z}) width = std::max(width, std::to_string(c).size());
    for (int row = 0; row < 3; ++row) {
      os << "  [";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const Int c = row == 0 ? vs[i].x : row == 1 ? vs[i].y : vs[i].z;
        os << (i ? " " : "") << std::setw(static_cast<int>(width)) << c;
      }
      os << "]\n";
    }
    if (!rec.parents.empty()) {
      os << "  parents:";
      for (auto p : rec.parents) os << ' ' << p;
      os << '\n';
    }
    if (!rec.children.empty()) {
      os << "  children:";
      for (auto c : rec.children) os << ' ' << c;
      os << '\n';
    }
  }
  return os.str();
}

std::string serialize(const std::vector<ClassificationRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return to_json(records).dump(2) + "\n";
    case OutputFormat::tsv:
      return to_tsv(records);
    case OutputFormat::text:
      return to_text(records);
  }
  throw std::logic_error("unknown output format");
}

std::vector<std::string> recheck_records(const std::vector<ClassificationRecord>& records) {
  std::vector<std::string> problems;
  const auto say = [&](const ClassificationRecord& r, const std::string& what) {
    problems.push_back("record " + std::to_string(r.id) + ": " + what);
  };
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.id != i) say(r, "id does not match position");
    if (!is_fano(r.polytope)) say(r, "not Fano");
    const bool simplicial = is_simplicial(r.polytope);
    if (r.simplicial != simplicial) say(r, "simplicial flag differs");
    if (r.smooth != (simplicial && is_smooth(r.polytope))) say(r, "smooth flag differs");
    if (r.minimal != is_minimal(r.polytope)) say(r, "minimal flag differs");
    if (r.minimal != r.parents.empty()) say(r, "minimal flag disagrees with parents");
    if (r.maximal != r.children.empty()) say(r, "maximal flag disagrees with children");
    if (r.picard.has_value() != simplicial) say(r, "picard present iff simplicial fails");
    if (r.picard && *r.picard != static_cast<Int>(r.vertex_count) - 3) say(r, "wrong picard number");
    for (auto p : r.parents) {
      if (p >= records.size()) {
        say(r, "parent id out of range");
        continue;
      }
      const auto& ch = records[p].children;
      if (!std::binary_search(ch.begin(), ch.end(), r.id)) say(r, "parent does not list it as child");
      if (records[p].vertex_count + 1 != r.vertex_count) say(r, "parent vertex count off");
    }
    for (auto c : r.children)
      if (c >= records.size()) say(r, "child id out of range");
  }
  return problems;
}

}  // namespace fano
