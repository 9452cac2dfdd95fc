#include "fano/growth.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "fano/equivalence.hpp"
#include "fano/minimal_catalog.hpp"
#include "fano/weights.hpp"

namespace fano {

namespace {

const std::vector<std::array<Int, 4>>& weight_placements() {
  static const std::vector<std::array<Int, 4>> placements = [] {
    std::vector<std::array<Int, 4>> out;
    for (const auto& w : fano_weight_systems()) {
      std::array<Int, 4> l = w.lambdas();
      do {
        out.push_back(l);
      } while (std::next_permutation(l.begin(), l.end()));
    }
    return out;
  }();
  return placements;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

}  // namespace

std::vector<LatticeVector> candidate_vertices(const Polytope& p) {
  const auto& vs = p.vertices();
  const std::size_t n = vs.size();
  std::unordered_set<LatticeVector, LatticeVectorHash> found;

  for (std::size_t i = 0; i < n; ++i) {
    found.insert(-vs[i]);
    for (std::size_t j = i + 1; j < n; ++j) found.insert(-(vs[i] + vs[j]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (const auto& l : weight_placements()) {
          const LatticeVector s = l[0] * vs[i] + l[1] * vs[j] + l[2] * vs[k];
          if (s.x % l[3] != 0 || s.y % l[3] != 0 || s.z % l[3] != 0) continue;
          found.insert({-s.x / l[3], -s.y / l[3], -s.z / l[3]});
        }

  std::vector<LatticeVector> out;
  for (const auto& c : found)
    if (!c.is_zero() && is_primitive(c) && !p.has_vertex(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Polytope> try_add_vertex(const Polytope& p, const LatticeVector& c) {
  if (c.is_zero() || !is_primitive(c) || p.has_vertex(c) || p.contains(c)) return std::nullopt;
  // Each triangle {0, v, c} sits inside the new polytope and must be empty.
  for (const auto& v : p.vertices()) {
    const LatticeVector n = cross(v, c);
    if (!n.is_zero() && !is_primitive(n)) return std::nullopt;
  }
  std::vector<LatticeVector> pts = p.vertices();
  pts.push_back(c);
  Polytope q = Polytope::hull(pts);
  if (q.vertex_count() != p.vertex_count() + 1) return std::nullopt;
  // Facets avoiding c are facets of p, whose cones are already empty.
  for (const auto& f : q.facets())
    if (f.distance(c) == 0 && !facet_cone_is_empty(q, f)) return std::nullopt;
  return q;
}

std::vector<Polytope> children(const Polytope& p) {
  EquivalenceRegistry reg;
  for (const auto& c : candidate_vertices(p))
    if (auto q = try_add_vertex(p, c)) reg.insert(*q);
  return reg.representatives();
}

bool is_maximal(const Polytope& p) {
  for (const auto& c : candidate_vertices(p))
    if (try_add_vertex(p, c)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct Node {
  Polytope polytope;
  std::vector<std::size_t> parents;  // final ids
  bool seeded{false};
};

struct Level {
  EquivalenceRegistry registry;
  std::vector<Node> nodes;  // parallel to registry
};

}  // namespace

std::vector<ClassificationRecord> classify_all(const GrowthOptions& options) {
  std::map<std::size_t, Level> levels;
  for (const auto& m : enumerate_minimal_polytopes()) {
    Level& lvl = levels[m.vertex_count()];
    auto [idx, inserted] = lvl.registry.insert(m);
    if (!inserted) throw InvariantViolation("minimal catalog contains equivalent polytopes");
    lvl.nodes.push_back({m, {}, true});
  }

  std::vector<ClassificationRecord> records;
  std::size_t k = levels.begin()->first;
  while (true) {
    auto it = levels.find(k);
    if (it == levels.end()) {
      if (levels.upper_bound(k) == levels.end()) break;
      ++k;
      continue;
    }
    Level& lvl = it->second;

    // Finalize this vertex count: canonical representatives, sorted.
    const std::size_t count = lvl.nodes.size();
    std::vector<CanonicalKey> keys(count);
    parallel_for(count, options.jobs, [&](std::size_t i) { keys[i] = canonical_key(lvl.nodes[i].polytope); });
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    const std::size_t first_id = records.size();
    for (std::size_t pos = 0; pos < count; ++pos) {
      Node& node = lvl.nodes[order[pos]];
      ClassificationRecord rec{first_id + pos, Polytope::hull(keys[order[pos]].canonical_vertices), 0, false,
                               false, false, false, std::nullopt, {}, {}};
      rec.vertex_count = rec.polytope.vertex_count();
      rec.parents = node.parents;
      std::sort(rec.parents.begin(), rec.parents.end());
      rec.minimal = node.seeded;
      if (rec.parents.empty() != node.seeded)
        throw InvariantViolation("minimal polytope with a parent, or non-minimal without one");
      for (std::size_t parent : rec.parents) records[parent].children.push_back(rec.id);
      records.push_back(std::move(rec));
    }
    if (records.size() > options.class_cap)
      throw std::runtime_error("classification exceeded class cap of " +
                               std::to_string(options.class_cap));

    // Grow the next vertex count from this one.
    std::vector<std::vector<Polytope>> kids(count);
    parallel_for(count, options.jobs,
                 [&](std::size_t i) { kids[i] = children(records[first_id + i].polytope); });
    for (std::size_t i = 0; i < count; ++i) {
      if (kids[i].empty()) continue;
      Level& next = levels[k + 1];
      for (const auto& child : kids[i]) {
        auto [idx, inserted] = next.registry.insert(child);
        if (inserted) next.nodes.push_back({child, {}, false});
        auto& parents = next.nodes[idx].parents;
        if (std::find(parents.begin(), parents.end(), first_id + i) == parents.end())
          parents.push_back(first_id + i);
      }
    }
    levels.erase(it);
    ++k;
  }

  for (auto& rec : records) {
    std::sort(rec.children.begin(), rec.children.end());
    rec.simplicial = is_simplicial(rec.polytope);
    rec.smooth = rec.simplicial && is_smooth(rec.polytope);
    rec.maximal = rec.children.empty();
    if (rec.simplicial) rec.picard = static_cast<Int>(rec.vertex_count) - 3;
  }
  return records;
}

}  // namespace fano
