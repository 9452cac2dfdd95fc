#include <doctest.h>

#include <set>

#include "fano/weights.hpp"
#include "support.hpp"

using namespace fano;

namespace {

// sum of {kappa l_i / h} through Rational
Int rational_fractional_sum(const WeightSystem& w, Int kappa) {
  Rational s(0);
  for (Int l : w.lambdas()) s = s + Rational(kappa * l, w.h()).frac();
  REQUIRE(s.is_integer());
  return s.numerator();
}

bool pairwise_coprime(const std::array<Int, 4>& l) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (gcd(l[i], l[j]) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("fractional sum examples") {
  CHECK(fractional_sum(WeightSystem({1, 1, 1, 2}), 2) == 2);
  CHECK(fractional_sum(WeightSystem({1, 1, 1, 1}), 2) == 2);
  CHECK(fractional_sum(WeightSystem({1, 1, 2, 4}), 4) == 1);
  CHECK_THROWS_AS(fractional_sum(WeightSystem({1, 1, 1, 2}), 1), std::out_of_range);
  CHECK_THROWS_AS(fractional_sum(WeightSystem({1, 1, 1, 2}), 4), std::out_of_range);
}

TEST_CASE("admissibility examples") {
  CHECK(is_admissible_weight(WeightSystem({1, 2, 3, 5})));
  CHECK_FALSE(is_admissible_weight(WeightSystem({1, 1, 2, 4})));
  CHECK(is_admissible_weight(WeightSystem({1, 1, 1, 1})));
}

TEST_CASE("h-bound search") {
  const auto s = run_h_bound_search();
  CHECK(s.bound() == 30);
  CHECK(search_h_bound() == 30);
  REQUIRE(!s.frontier_sizes.empty());
  CHECK(s.frontier_sizes[0] == 1);  // only (1,1,1,1) at kappa = 2
  CHECK(s.final_states.size() == s.frontier_sizes.back());
  CHECK(s.certified_bound() >= s.bound());

  const CeilSequenceState start;
  const auto next = extend(start);
  REQUIRE(next.size() == 1);
  CHECK(next[0].kappa == 3);
  CHECK(next[0].a == std::array<Int, 4>{1, 1, 1, 2});
}

TEST_CASE("search states keep their invariants") {
  std::vector<CeilSequenceState> frontier{CeilSequenceState{}};
  while (!frontier.empty()) {
    std::set<CeilSequenceState> next;
    for (const auto& s : frontier) {
      CHECK(s.a[0] + s.a[1] + s.a[2] + s.a[3] == s.kappa + 2);
      CHECK(std::is_sorted(s.a.begin(), s.a.end()));
      for (const auto& t : extend(s)) next.insert(t);
    }
    frontier.assign(next.begin(), next.end());
  }
}

TEST_CASE("the seven weight systems") {
  const auto ws = enumerate_weight_systems();
  std::vector<std::array<Int, 4>> got;
  for (const auto& w : ws) got.push_back(w.lambdas());
  const std::vector<std::array<Int, 4>> want{{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 5},
                                             {1, 3, 4, 5}, {2, 3, 5, 7}, {3, 4, 5, 7}};
  CHECK(got == want);
  CHECK(ws.back().h() == 19);
  CHECK(ws[5].h() == 17);
}

TEST_CASE("admissibility agrees with a direct oracle up to the certified bound") {
  const Int hmax = run_h_bound_search().certified_bound();
  std::size_t admissible = 0;
  for (Int a = 1; a <= hmax; ++a)
    for (Int b = a; a + b <= hmax; ++b)
      for (Int c = b; a + b + c <= hmax; ++c)
        for (Int d = c; a + b + c + d <= hmax; ++d) {
          if (gcd(gcd(a, b), gcd(c, d)) != 1) continue;
          const WeightSystem w({a, b, c, d});
          bool oracle = pairwise_coprime(w.lambdas());
          for (Int k = 2; oracle && k <= w.h() - 2; ++k) oracle = rational_fractional_sum(w, k) == 2;
          CHECK(is_admissible_weight(w) == oracle);
          admissible += oracle;
        }
  CHECK(admissible == 7);
}

TEST_CASE("ceiling and floor identities for the admissible systems") {
  for (const auto& w : enumerate_weight_systems()) {
    for (Int k = 2; k <= w.h() - 2; ++k) {
      CHECK(ceiling_sum(w, k) == k + 2);
      CHECK(floor_sum(w, k) == k - 2);
      for (Int l : w.lambdas()) CHECK((k * l) % w.h() != 0);
    }
    for (Int l : w.lambdas()) CHECK(gcd(l, w.h()) == 1);
  }
}

TEST_CASE("fractional sums lie in {1,2,3} and pair up 3 with 1") {
  auto& g = testing::rng();
  std::uniform_int_distribution<Int> d(1, 40);
  int tried = 0;
  while (tried < 1000) {
    std::array<Int, 4> l{d(g), d(g), d(g), d(g)};
    if (gcd(gcd(l[0], l[1]), gcd(l[2], l[3])) != 1) continue;
    const WeightSystem w(l);
    if (w.h() < 4) continue;
    ++tried;
    for (Int k = 2; k <= w.h() - 2; ++k) {
      const Int s = fractional_sum(w, k);
      CHECK(s == rational_fractional_sum(w, k));
      CHECK(s >= 1);
      CHECK(s <= 3);
      if (s == 3) CHECK(fractional_sum(w, w.h() - k) == 1);
    }
  }
}
