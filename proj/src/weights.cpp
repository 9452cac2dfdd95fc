#include "fano/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fano {

namespace {

void check_kappa(const WeightSystem& w, Int kappa) {
  if (kappa < 2 || kappa > w.h() - 2)
    throw std::out_of_range("kappa " + std::to_string(kappa) + " outside {2,...,h-2} for h = " +
                            std::to_string(w.h()));
}

}  // namespace

Int fractional_sum(const WeightSystem& w, Int kappa) {
  check_kappa(w, kappa);
  Int numerators = 0;
  for (Int l : w.lambdas()) numerators += floor_mod(checked::mul(kappa, l), w.h());
  if (numerators % w.h() != 0)
    throw InvariantViolation("fractional parts do not sum to an integer");
  return numerators / w.h();
}

Int ceiling_sum(const WeightSystem& w, Int kappa) {
  check_kappa(w, kappa);
  Int s = 0;
  for (Int l : w.lambdas()) s += Rational(checked::mul(kappa, l), w.h()).ceil();
  return s;
}

Int floor_sum(const WeightSystem& w, Int kappa) {
  check_kappa(w, kappa);
  Int s = 0;
  for (Int l : w.lambdas()) s += floor_div(checked::mul(kappa, l), w.h());
  return s;
}

bool is_admissible_weight(const WeightSystem& w) {
  const auto& l = w.lambdas();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (gcd(l[i], l[j]) != 1) return false;
  for (Int kappa = 2; kappa <= w.h() - 2; ++kappa)
    if (fractional_sum(w, kappa) != 2) return false;

  for (Int kappa = 2; kappa <= w.h() - 2; ++kappa)
    if (ceiling_sum(w, kappa) != kappa + 2)
      throw InvariantViolation("admissible weight system violates the ceiling identity");
  for (Int li : l)
    if (gcd(li, w.h()) != 1) throw InvariantViolation("admissible weight shares a factor with h");
  return true;
}

std::vector<CeilSequenceState> extend(const CeilSequenceState& s) {
  std::vector<CeilSequenceState> out;
  const Int next = s.kappa + 1;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i < 3 && s.a[i] >= s.a[i + 1]) continue;
    if (!(Rational(s.a[i], next) < s.min_ratio[i])) continue;
    CeilSequenceState t = s;
    t.kappa = next;
    ++t.a[i];
    for (std::size_t j = 0; j < 4; ++j) t.min_ratio[j] = std::min(t.min_ratio[j], Rational(t.a[j], next));
    out.push_back(t);
  }
  return out;
}

HBoundSearch run_h_bound_search(Int kappa_cap) {
  HBoundSearch result;
  std::set<CeilSequenceState> frontier{CeilSequenceState{}};
  for (;;) {
    const Int kappa = frontier.begin()->kappa;
    if (kappa >= kappa_cap)
      throw InvariantViolation("h-bound search did not terminate below kappa cap");
    result.frontier_sizes.push_back(frontier.size());
    std::set<CeilSequenceState> next;
    for (const auto& s : frontier)
      for (auto& t : extend(s)) next.insert(std::move(t));
    if (next.empty()) {
      result.last_surviving_kappa = kappa;
      result.first_empty_kappa = kappa + 1;
      result.final_states.assign(frontier.begin(), frontier.end());
      return result;
    }
    frontier = std::move(next);
  }
}

Int search_h_bound() { return run_h_bound_search().bound(); }

std::vector<WeightSystem> enumerate_weight_systems() {
  const Int max_h = run_h_bound_search().certified_bound();
  std::vector<WeightSystem> out;
  for (Int h = 4; h <= max_h; ++h)
    for (Int l1 = 1; 4 * l1 <= h; ++l1)
      for (Int l2 = l1; l1 + 3 * l2 <= h; ++l2)
        for (Int l3 = l2; l1 + l2 + 2 * l3 <= h; ++l3) {
          const Int l4 = h - l1 - l2 - l3;
          if (gcd(gcd(l1, l2), gcd(l3, l4)) != 1) continue;
          WeightSystem w({l1, l2, l3, l4});
          if (is_admissible_weight(w)) out.push_back(w);
        }
  return out;
}

const std::vector<WeightSystem>& fano_weight_systems() {
  static const std::vector<WeightSystem> cached = enumerate_weight_systems();
  return cached;
}

}  // namespace fano
