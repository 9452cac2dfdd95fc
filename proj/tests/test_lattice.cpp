#include <doctest.h>

#include <limits>

#include "fano/lattice.hpp"
#include "support.hpp"

using namespace fano;

TEST_CASE("checked arithmetic throws on overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked::neg(std::numeric_limits<Int>::min()), OverflowError);
  CHECK(checked::sub(-5, 7) == -12);
}

TEST_CASE("gcd and extended gcd") {
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-12, 18) == 6);
  for (Int a = -30; a <= 30; ++a)
    for (Int b = -30; b <= 30; ++b) {
      auto [g, s, t] = extended_gcd(a, b);
      CHECK(g == gcd(a, b));
      CHECK(s * a + t * b == g);
    }
}

TEST_CASE("floor division and remainder") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, -3) == 1);
}

TEST_CASE("det3 examples") {
  CHECK(det3(Matrix3::identity()) == 1);
  CHECK(det3(Matrix3::from_rows({1, 2, 3}, {1, 2, 3}, {4, 5, 6})) == 0);
  // first three columns of the volume-5 tetrahedron with weights (1,1,1,1)
  CHECK(det3(Matrix3::from_columns({1, 0, 0}, {1, -3, 5}, {-2, 2, -5})) == 5);
}

TEST_CASE("det3 agrees with the Leibniz formula and is multiplicative") {
  auto& g = testing::rng();
  std::uniform_int_distribution<Int> d(-9, 9);
  for (int i = 0; i < 500; ++i) {
    const LatticeVector a{d(g), d(g), d(g)}, b{d(g), d(g), d(g)}, c{d(g), d(g), d(g)};
    CHECK(det3(Matrix3::from_columns(a, b, c)) == testing::leibniz_det(a, b, c));
  }
  for (int i = 0; i < 200; ++i) {
    const auto u = testing::random_unimodular(g), v = testing::random_unimodular(g);
    CHECK(det3((u * v).matrix()) == det3(u.matrix()) * det3(v.matrix()));
    CHECK((u * u.inverse()) == UnimodularMap::identity());
  }
}

TEST_CASE("unimodular map rejects det other than +-1") {
  CHECK_THROWS(UnimodularMap(Matrix3::from_rows({2, 0, 0}, {0, 1, 0}, {0, 0, 1})));
  CHECK_NOTHROW(UnimodularMap(Matrix3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, 1})));
}

TEST_CASE("rational normalization and rounding") {
  const Rational q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.floor() == -2);
  CHECK(q.ceil() == -1);
  CHECK(q.frac() == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("solve3 examples") {
  auto s = solve3(Matrix3::identity(), {2, 3, 4});
  REQUIRE(s);
  CHECK((*s)[0] == 2);
  CHECK((*s)[2] == 4);

  Matrix3 two{};
  two(0, 0) = two(1, 1) = two(2, 2) = 2;
  s = solve3(two, {1, 1, 1});
  REQUIRE(s);
  for (const auto& x : *s) CHECK(x == Rational(1, 2));

  s = solve3(Matrix3::from_columns(e1, e2, {1, 1, 2}), {-1, -1, -1});
  REQUIRE(s);
  for (const auto& x : *s) CHECK(x == Rational(-1, 2));

  CHECK_FALSE(solve3(Matrix3::from_rows({1, 2, 3}, {2, 4, 6}, {0, 0, 1}), {1, 1, 1}));
}

TEST_CASE("solve3 result substitutes back") {
  auto& g = testing::rng();
  std::uniform_int_distribution<Int> d(-6, 6);
  for (int i = 0; i < 300; ++i) {
    const Matrix3 m = Matrix3::from_rows({d(g), d(g), d(g)}, {d(g), d(g), d(g)}, {d(g), d(g), d(g)});
    const LatticeVector b{d(g), d(g), d(g)};
    const auto s = solve3(m, b);
    CHECK(s.has_value() == (det3(m) != 0));
    if (!s) continue;
    for (std::size_t r = 0; r < 3; ++r)
      CHECK(Rational(m(r, 0)) * (*s)[0] + Rational(m(r, 1)) * (*s)[1] + Rational(m(r, 2)) * (*s)[2] ==
            Rational(b[r]));
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(e1));
  CHECK_FALSE(is_primitive({2, 4, 6}));
  CHECK(is_primitive({1, -3, 5}));
  CHECK_FALSE(is_primitive({0, 0, 0}));
  CHECK(primitive_part({-4, 2, 6}) == LatticeVector{-2, 1, 3});

  auto& g = testing::rng();
  std::uniform_int_distribution<Int> d(-8, 8);
  for (int i = 0; i < 300; ++i) {
    const LatticeVector v{d(g), d(g), d(g)};
    const auto u = testing::random_unimodular(g);
    CHECK(is_primitive(u(v)) == is_primitive(v));
  }
}

TEST_CASE("Hermite normal form shape") {
  auto& g = testing::rng();
  std::uniform_int_distribution<Int> d(-7, 7);
  int nonsingular = 0;
  for (int i = 0; i < 400; ++i) {
    const Matrix3 m = Matrix3::from_rows({d(g), d(g), d(g)}, {d(g), d(g), d(g)}, {d(g), d(g), d(g)});
    if (det3(m) == 0) continue;
    ++nonsingular;
    const HermiteForm hf = hermite_normal_form(m);
    CHECK(hf.u.matrix() * m == hf.h);
    for (std::size_t r = 0; r < 3; ++r) {
      CHECK(hf.h(r, r) > 0);
      for (std::size_t c = 0; c < r; ++c) CHECK(hf.h(r, c) == 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(hf.h(above, r) >= 0);
        CHECK(hf.h(above, r) < hf.h(r, r));
      }
    }
    CHECK(hf.h(0, 0) * hf.h(1, 1) * hf.h(2, 2) == (det3(m) < 0 ? -det3(m) : det3(m)));
  }
  CHECK(nonsingular > 300);
}
