#pragma once

// Barycentric weight systems of Fano tetrahedra: the fractional-part criteria,
// the sequence search that bounds h, and the enumeration of admissible
// weight systems.

#include <array>
#include <cstddef>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

namespace fano {

/// sum_i {kappa * lambda_i / h}. Always an integer; throws std::out_of_range
/// unless 2 <= kappa <= h - 2.
Int fractional_sum(const WeightSystem& w, Int kappa);

/// sum_i ceil(kappa * lambda_i / h), same range as fractional_sum.
Int ceiling_sum(const WeightSystem& w, Int kappa);

/// sum_i floor(kappa * lambda_i / h), same range as fractional_sum.
Int floor_sum(const WeightSystem& w, Int kappa);

/// The fractional sum equals 2 for every kappa in {2, ..., h-2} and the
/// lambdas are pairwise coprime. When it holds, the ceiling identity
/// sum ceil = kappa + 2 and gcd(lambda_i, h) = 1 are re-checked; a failure
/// there throws InvariantViolation.
bool is_admissible_weight(const WeightSystem& w);

/// One node of the h-bound search: a_i = ceil(kappa * lambda_i / h) for a
/// hypothetical weight system, with the running minimum of a_i^(n) / n.
struct CeilSequenceState {
  Int kappa{2};
  std::array<Int, 4> a{1, 1, 1, 1};
  std::array<Rational, 4> min_ratio{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};

  friend auto operator<=>(const CeilSequenceState&, const CeilSequenceState&) = default;
};

/// Successors of a state at kappa + 1: one coordinate is incremented, weak
/// ordering is kept, and a_i / (kappa+1) < min_{n<=kappa} a_i^(n) / n.
std::vector<CeilSequenceState> extend(const CeilSequenceState& s);

struct HBoundSearch {
  /// Number of distinct states at kappa = 2, 3, ...
  std::vector<std::size_t> frontier_sizes;
  Int last_surviving_kappa{2};
  /// The first kappa with no surviving sequence. This is the reported bound.
  Int first_empty_kappa{3};
  /// States alive at last_surviving_kappa.
  std::vector<CeilSequenceState> final_states;

  Int bound() const { return first_empty_kappa; }
  /// A weight system needs sequences up to kappa = h - 2, so
  /// h <= last_surviving_kappa + 2 is certified by the search.
  Int certified_bound() const { return last_surviving_kappa + 2; }
};

/// Runs the search until the frontier empties. Throws InvariantViolation if
/// kappa reaches kappa_cap.
HBoundSearch run_h_bound_search(Int kappa_cap = 1000);

/// run_h_bound_search().bound(); equals 30.
Int search_h_bound();

/// All sorted coprime quadruples with h up to the certified bound that pass
/// is_admissible_weight. Sorted by (h, lambdas).
std::vector<WeightSystem> enumerate_weight_systems();

/// Cached result of enumerate_weight_systems().
const std::vector<WeightSystem>& fano_weight_systems();

}  // namespace fano
