#pragma once

// GL(3,Z)-equivalence of lattice polytopes: witnesses, invariant
// fingerprints, canonical keys and a deduplicating registry.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano {

/// Cheap GL(3,Z) invariants. Distinct fingerprints imply inequivalence.
struct Fingerprint {
  std::size_t vertex_count{0};
  std::size_t facet_count{0};
  std::vector<std::size_t> facet_sizes;  ///< sorted
  Int volume{0};                         ///< normalized (6x Euclidean)
  std::vector<Int> pairings;             ///< sorted <n_f, v> + level_f over facets and vertices

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Polytope& p);

/// Complete invariant: two polytopes have equal keys iff they are equivalent.
struct CanonicalKey {
  Fingerprint fingerprint;
  /// Lexicographically least sorted vertex list over all Hermite frames.
  std::vector<LatticeVector> canonical_vertices;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Polytope& p);

/// The polytope spanned by canonical_key(p).canonical_vertices.
Polytope canonical_form(const Polytope& p);

/// A unimodular u with u(vertices(p)) = vertices(q) as sets, if one exists.
std::optional<UnimodularMap> are_equivalent(const Polytope& p, const Polytope& q);

/// u with u(a) = e1 and u(b) = e2 for a lattice-point-free triangle {0, a, b}.
/// Throws PreconditionViolation if the triangle has other lattice points or is
/// degenerate.
UnimodularMap normalize_empty_triangle(const LatticeVector& a, const LatticeVector& b);

/// Deduplicates polytopes up to equivalence: fingerprint buckets, confirmed
/// with are_equivalent. Not thread safe.
class EquivalenceRegistry {
 public:
  /// Returns (index, true) if p opened a new class, else (index of the
  /// existing class, false).
  std::pair<std::size_t, bool> insert(const Polytope& p);
  std::optional<std::size_t> find(const Polytope& p) const;

  const std::vector<Polytope>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::optional<std::size_t> find(const Polytope& p, const Fingerprint& fp) const;

  std::vector<Polytope> reps_;
  std::map<Fingerprint, std::vector<std::size_t>> buckets_;
};

/// Sorted, equivalence-deduplicated copy of a polytope list (order: vertex
/// count, then canonical key). Representatives are canonical forms.
std::vector<Polytope> unique_up_to_equivalence(const std::vector<Polytope>& ps);

}  // namespace fano
