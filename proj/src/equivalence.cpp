#include "fano/equivalence.hpp"

#include <algorithm>
#include <array>

namespace fano {

Fingerprint fingerprint(const Polytope& p) {
  Fingerprint fp;
  fp.vertex_count = p.vertex_count();
  fp.facet_count = p.facets().size();
  for (const auto& f : p.facets()) {
    fp.facet_sizes.push_back(f.vertices.size());
    for (const auto& v : p.vertices()) fp.pairings.push_back(f.distance(v));
  }
  std::sort(fp.facet_sizes.begin(), fp.facet_sizes.end());
  std::sort(fp.pairings.begin(), fp.pairings.end());
  fp.volume = normalized_volume(p);
  return fp;
}

CanonicalKey canonical_key(const Polytope& p) {
  const auto& vs = p.vertices();
  const std::size_t n = vs.size();
  std::vector<LatticeVector> best, image(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Matrix3 frame = Matrix3::from_columns(vs[i], vs[j], vs[k]);
        if (det3(frame) == 0) continue;
        const Matrix3 u = hermite_normal_form(frame).u.matrix();
        for (std::size_t t = 0; t < n; ++t) image[t] = u * vs[t];
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
      }
    }
  return {fingerprint(p), std::move(best)};
}

Polytope canonical_form(const Polytope& p) { return Polytope::hull(canonical_key(p).canonical_vertices); }

std::optional<UnimodularMap> are_equivalent(const Polytope& p, const Polytope& q) {
  if (p.vertex_count() != q.vertex_count() || p.facets().size() != q.facets().size())
    return std::nullopt;
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  const std::size_t n = pv.size();

  // Fix the independent triple of p with the smallest |det|; only triples of
  // q with the same |det| can be its image.
  std::array<std::size_t, 3> base{};
  Int base_det = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Int d = det3(Matrix3::from_columns(pv[i], pv[j], pv[k]));
        if (d < 0) d = -d;
        if (d != 0 && (base_det == 0 || d < base_det)) {
          base_det = d;
          base = {i, j, k};
        }
      }
  if (base_det == 0) return std::nullopt;

  const Matrix3 b = Matrix3::from_columns(pv[base[0]], pv[base[1]], pv[base[2]]);
  const Int det_b = det3(b);
  const Matrix3 adj_b = b.adjugate();
  std::vector<LatticeVector> image(n);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Matrix3 w = Matrix3::from_columns(qv[i], qv[j], qv[k]);
        const Int det_w = det3(w);
        if (det_w != det_b && det_w != -det_b) continue;
        Matrix3 u = w * adj_b;
        bool integral = true;
        for (auto& row : u.a)
          for (auto& x : row) {
            if (x % det_b != 0) integral = false;
            x /= det_b;
          }
        if (!integral) continue;
        for (std::size_t t = 0; t < n; ++t) image[t] = u * pv[t];
        std::sort(image.begin(), image.end());
        if (image == qv) return UnimodularMap(u);
      }
    }
  return std::nullopt;
}

UnimodularMap normalize_empty_triangle(const LatticeVector& a, const LatticeVector& b) {
  const LatticeVector n = cross(a, b);
  if (n.is_zero()) throw PreconditionViolation("normalize_empty_triangle: degenerate triangle");

  // Enumerate lattice points v = s*a + t*b with s, t >= 0, s + t <= 1.
  const Int nn = dot(n, n);
  LatticeVector lo, hi;
  for (std::size_t i = 0; i < 3; ++i) {
    lo[i] = std::min<Int>({0, a[i], b[i]});
    hi[i] = std::max<Int>({0, a[i], b[i]});
  }
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      for (Int z = lo.z; z <= hi.z; ++z) {
        const LatticeVector v{x, y, z};
        if (dot(n, v) != 0 || v.is_zero() || v == a || v == b) continue;
        const Int s = dot(cross(v, b), n);  // s * nn
        const Int t = dot(cross(a, v), n);  // t * nn
        if (s >= 0 && t >= 0 && s + t <= nn)
          throw PreconditionViolation("normalize_empty_triangle: triangle contains lattice points");
      }
  if (!is_primitive(n)) throw InvariantViolation("empty triangle with non-primitive normal");

  // A third column c with <n, c> = 1 completes (a, b) to a basis.
  auto [g1, s1, t1] = extended_gcd(n.x, n.y);
  auto [g, s2, t2] = extended_gcd(g1, n.z);
  const LatticeVector c{checked::mul(s2, s1), checked::mul(s2, t1), t2};
  const UnimodularMap frame(Matrix3::from_columns(a, b, c));
  return frame.inverse();
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> EquivalenceRegistry::find(const Polytope& p, const Fingerprint& fp) const {
  auto it = buckets_.find(fp);
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if (are_equivalent(reps_[idx], p)) return idx;
  return std::nullopt;
}

std::optional<std::size_t> EquivalenceRegistry::find(const Polytope& p) const {
  return find(p, fingerprint(p));
}

std::pair<std::size_t, bool> EquivalenceRegistry::insert(const Polytope& p) {
  Fingerprint fp = fingerprint(p);
  if (auto idx = find(p, fp)) return {*idx, false};
  reps_.push_back(p);
  buckets_[std::move(fp)].push_back(reps_.size() - 1);
  return {reps_.size() - 1, true};
}

std::vector<Polytope> unique_up_to_equivalence(const std::vector<Polytope>& ps) {
  EquivalenceRegistry reg;
  for (const auto& p : ps) reg.insert(p);
  std::vector<std::pair<CanonicalKey, Polytope>> keyed;
  for (const auto& p : reg.representatives()) {
    CanonicalKey key = canonical_key(p);
    Polytope canon = Polytope::hull(key.canonical_vertices);
    keyed.emplace_back(std::move(key), std::move(canon));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    if (l.second.vertex_count() != r.second.vertex_count())
      return l.second.vertex_count() < r.second.vertex_count();
    return l.first < r.first;
  });
  std::vector<Polytope> out;
  for (auto& [key, poly] : keyed) out.push_back(std::move(poly));
  return out;
}

}  // namespace fano
