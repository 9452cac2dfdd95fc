#pragma once

// Exact integer and rational linear algebra in dimension 3.
//
// Every arithmetic operation on coordinates goes through the overflow-checked
// helpers in fano::checked; an overflow throws fano::OverflowError instead of
// wrapping.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fano {

using Int = std::int64_t;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

/// Returns (g, s, t) with g = s*a + t*b and g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b);

/// Floor division for b != 0.
Int floor_div(Int a, Int b);

/// Non-negative remainder a mod |b|.
Int floor_mod(Int a, Int b);

// ---------------------------------------------------------------------------
// LatticeVector
// ---------------------------------------------------------------------------

/// A point of Z^3. Ordering is lexicographic on (x, y, z).
struct LatticeVector {
  Int x{0};
  Int y{0};
  Int z{0};

  constexpr Int operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr Int& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }

  friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  return {checked::add(a.x, b.x), checked::add(a.y, b.y), checked::add(a.z, b.z)};
}

inline LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  return {checked::sub(a.x, b.x), checked::sub(a.y, b.y), checked::sub(a.z, b.z)};
}

inline LatticeVector operator-(const LatticeVector& a) {
  return {checked::neg(a.x), checked::neg(a.y), checked::neg(a.z)};
}

inline LatticeVector operator*(Int s, const LatticeVector& a) {
  return {checked::mul(s, a.x), checked::mul(s, a.y), checked::mul(s, a.z)};
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  return checked::add(checked::add(checked::mul(a.x, b.x), checked::mul(a.y, b.y)),
                      checked::mul(a.z, b.z));
}

inline LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {checked::sub(checked::mul(a.y, b.z), checked::mul(a.z, b.y)),
          checked::sub(checked::mul(a.z, b.x), checked::mul(a.x, b.z)),
          checked::sub(checked::mul(a.x, b.y), checked::mul(a.y, b.x))};
}

/// gcd(|x|, |y|, |z|); zero for the zero vector.
Int content(const LatticeVector& v);

/// True iff gcd(|x|,|y|,|z|) = 1. The zero vector is not primitive.
bool is_primitive(const LatticeVector& v);

/// v divided by its content. Throws DegenerateInput for the zero vector.
LatticeVector primitive_part(const LatticeVector& v);

inline constexpr LatticeVector e1{1, 0, 0};
inline constexpr LatticeVector e2{0, 1, 0};
inline constexpr LatticeVector e3{0, 0, 1};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept {
    std::size_t h = std::hash<Int>{}(v.x);
    h ^= std::hash<Int>{}(v.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Int>{}(v.z) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// ---------------------------------------------------------------------------
// Matrix3
// ---------------------------------------------------------------------------

/// Row-major 3x3 integer matrix.
struct Matrix3 {
  std::array<std::array<Int, 3>, 3> a{};

  static Matrix3 identity();
  static Matrix3 from_rows(const LatticeVector& r0, const LatticeVector& r1, const LatticeVector& r2);
  static Matrix3 from_columns(const LatticeVector& c0, const LatticeVector& c1,
                              const LatticeVector& c2);

  Int operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a[i][j]; }

  LatticeVector row(std::size_t i) const { return {a[i][0], a[i][1], a[i][2]}; }
  LatticeVector column(std::size_t j) const { return {a[0][j], a[1][j], a[2][j]}; }

  Matrix3 transpose() const;
  /// Classical adjugate: m * adjugate(m) = det(m) * I.
  Matrix3 adjugate() const;

  friend auto operator<=>(const Matrix3&, const Matrix3&) = default;
};

Matrix3 operator*(const Matrix3& m, const Matrix3& n);
LatticeVector operator*(const Matrix3& m, const LatticeVector& v);

/// Exact determinant.
Int det3(const Matrix3& m);

std::ostream& operator<<(std::ostream& os, const Matrix3& m);

// ---------------------------------------------------------------------------
// UnimodularMap
// ---------------------------------------------------------------------------

/// An element of GL(3,Z). Construction verifies det = +-1.
class UnimodularMap {
 public:
  UnimodularMap() : m_(Matrix3::identity()), det_(1) {}
  explicit UnimodularMap(const Matrix3& m);

  static UnimodularMap identity() { return UnimodularMap(); }

  const Matrix3& matrix() const { return m_; }
  Int det() const { return det_; }

  LatticeVector operator()(const LatticeVector& v) const { return m_ * v; }
  std::vector<LatticeVector> operator()(std::span<const LatticeVector> vs) const;

  UnimodularMap inverse() const;

  friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g);
  friend bool operator==(const UnimodularMap& f, const UnimodularMap& g) { return f.m_ == g.m_; }

 private:
  Matrix3 m_;
  Int det_;
};

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return -floor_div(-num_, den_); }
  /// q - floor(q), in [0, 1).
  Rational frac() const { return {floor_mod(num_, den_), den_}; }

  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& p, const Rational& q);
  friend Rational operator-(const Rational& p, const Rational& q);
  friend Rational operator*(const Rational& p, const Rational& q);
  friend Rational operator/(const Rational& p, const Rational& q);
  friend Rational operator-(const Rational& q) { return {checked::neg(q.num_), q.den_}; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& p, const Rational& q);

 private:
  Int num_{0};
  Int den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Exact solution of m * v = b, or nullopt if m is singular.
std::optional<std::array<Rational, 3>> solve3(const Matrix3& m, const LatticeVector& b);

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

struct HermiteForm {
  Matrix3 h;          ///< upper triangular, positive diagonal, reduced above the diagonal
  UnimodularMap u;    ///< u * m = h
};

/// Row-style Hermite normal form of a nonsingular matrix. Throws DegenerateInput
/// if m is singular.
HermiteForm hermite_normal_form(const Matrix3& m);

}  // namespace fano
