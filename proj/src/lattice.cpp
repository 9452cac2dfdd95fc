#include "fano/lattice.hpp"

#include <cstdlib>
#include <ostream>
#include <utility>

namespace fano {

namespace {

Int abs_checked(Int a) { return a < 0 ? checked::neg(a) : a; }

}  // namespace

Int gcd(Int a, Int b) {
  a = abs_checked(a);
  b = abs_checked(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, checked::sub(old_r, checked::mul(q, r)));
    std::tie(old_s, s) = std::make_pair(s, checked::sub(old_s, checked::mul(q, s)));
    std::tie(old_t, t) = std::make_pair(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) {
    old_r = checked::neg(old_r);
    old_s = checked::neg(old_s);
    old_t = checked::neg(old_t);
  }
  return {old_r, old_s, old_t};
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int m = a % b;
  if (m < 0) m += abs_checked(b);
  return m;
}

Int content(const LatticeVector& v) { return gcd(gcd(v.x, v.y), v.z); }

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

LatticeVector primitive_part(const LatticeVector& v) {
  Int g = content(v);
  if (g == 0) throw DegenerateInput("primitive part of the zero vector");
  return {v.x / g, v.y / g, v.z / g};
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  return os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
}

// ---------------------------------------------------------------------------

Matrix3 Matrix3::identity() {
  Matrix3 m;
  m.a[0][0] = m.a[1][1] = m.a[2][2] = 1;
  return m;
}

Matrix3 Matrix3::from_rows(const LatticeVector& r0, const LatticeVector& r1,
                           const LatticeVector& r2) {
  Matrix3 m;
  for (std::size_t j = 0; j < 3; ++j) {
    m.a[0][j] = r0[j];
    m.a[1][j] = r1[j];
    m.a[2][j] = r2[j];
  }
  return m;
}

Matrix3 Matrix3::from_columns(const LatticeVector& c0, const LatticeVector& c1,
                              const LatticeVector& c2) {
  return from_rows(c0, c1, c2).transpose();
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.a[j][i] = a[i][j];
  return t;
}

Matrix3 Matrix3::adjugate() const {
  // adj(m)[j][i] = cofactor(i, j)
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      r.a[j][i] = checked::sub(checked::mul(a[i1][j1], a[i2][j2]),
                               checked::mul(a[i1][j2], a[i2][j1]));
    }
  }
  return r;
}

Matrix3 operator*(const Matrix3& m, const Matrix3& n) {
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < 3; ++k) s = checked::add(s, checked::mul(m.a[i][k], n.a[k][j]));
      r.a[i][j] = s;
    }
  }
  return r;
}

LatticeVector operator*(const Matrix3& m, const LatticeVector& v) {
  return {dot(m.row(0), v), dot(m.row(1), v), dot(m.row(2), v)};
}

Int det3(const Matrix3& m) {
  // Scalar triple product of the rows.
  return dot(m.row(0), cross(m.row(1), m.row(2)));
}

std::ostream& operator<<(std::ostream& os, const Matrix3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i == 0 ? "[" : " ") << m.a[i][0] << ' ' << m.a[i][1] << ' ' << m.a[i][2]
       << (i == 2 ? "]" : "\n");
  }
  return os;
}

// ---------------------------------------------------------------------------

UnimodularMap::UnimodularMap(const Matrix3& m) : m_(m), det_(det3(m)) {
  if (det_ != 1 && det_ != -1)
    throw PreconditionViolation("matrix is not unimodular (det = " + std::to_string(det_) + ")");
}

std::vector<LatticeVector> UnimodularMap::operator()(std::span<const LatticeVector> vs) const {
  std::vector<LatticeVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(m_ * v);
  return out;
}

UnimodularMap UnimodularMap::inverse() const {
  Matrix3 adj = m_.adjugate();
  if (det_ == -1) {
    for (auto& row : adj.a)
      for (auto& x : row) x = checked::neg(x);
  }
  return UnimodularMap(adj);
}

UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
  return UnimodularMap(f.m_ * g.m_);
}

// ---------------------------------------------------------------------------

Rational::Rational(Int n, Int d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = checked::neg(n);
    d = checked::neg(d);
  }
  Int g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational operator+(const Rational& p, const Rational& q) {
  Int g = gcd(p.den_, q.den_);
  Int pd = p.den_ / g;
  return {checked::add(checked::mul(p.num_, q.den_ / g), checked::mul(q.num_, pd)),
          checked::mul(pd, q.den_)};
}

Rational operator-(const Rational& p, const Rational& q) { return p + (-q); }

Rational operator*(const Rational& p, const Rational& q) {
  Int g1 = gcd(p.num_, q.den_);
  Int g2 = gcd(q.num_, p.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {checked::mul(p.num_ / g1, q.num_ / g2), checked::mul(p.den_ / g2, q.den_ / g1)};
}

Rational operator/(const Rational& p, const Rational& q) {
  if (q.num_ == 0) throw std::domain_error("rational division by zero");
  return p * Rational(q.den_, q.num_);
}

std::strong_ordering operator<=>(const Rational& p, const Rational& q) {
  __int128 lhs = static_cast<__int128>(p.num_) * q.den_;
  __int128 rhs = static_cast<__int128>(q.num_) * p.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os;
}

std::optional<std::array<Rational, 3>> solve3(const Matrix3& m, const LatticeVector& b) {
  Int d = det3(m);
  if (d == 0) return std::nullopt;
  LatticeVector n = m.adjugate() * b;
  return std::array<Rational, 3>{Rational(n.x, d), Rational(n.y, d), Rational(n.z, d)};
}

// ---------------------------------------------------------------------------

HermiteForm hermite_normal_form(const Matrix3& input) {
  Matrix3 h = input;
  Matrix3 u = Matrix3::identity();

  auto combine = [&](std::size_t r0, std::size_t r1, Int a, Int b, Int c, Int d) {
    // [row r0; row r1] <- [[a b]; [c d]] * [row r0; row r1]
    for (Matrix3* mat : {&h, &u}) {
      for (std::size_t j = 0; j < 3; ++j) {
        Int x = mat->a[r0][j], y = mat->a[r1][j];
        mat->a[r0][j] = checked::add(checked::mul(a, x), checked::mul(b, y));
        mat->a[r1][j] = checked::add(checked::mul(c, x), checked::mul(d, y));
      }
    }
  };

  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t r = c + 1; r < 3; ++r) {
      Int p = h.a[c][c], q = h.a[r][c];
      if (q == 0) continue;
      auto [g, s, t] = extended_gcd(p, q);
      combine(c, r, s, t, checked::neg(q / g), p / g);
    }
    if (h.a[c][c] == 0) throw DegenerateInput("hermite_normal_form: singular matrix");
    if (h.a[c][c] < 0) {
      for (Matrix3* mat : {&h, &u})
        for (std::size_t j = 0; j < 3; ++j) mat->a[c][j] = checked::neg(mat->a[c][j]);
    }
  }
  for (std::size_t c = 1; c < 3; ++c) {
    for (std::size_t r = 0; r < c; ++r) {
      Int q = floor_div(h.a[r][c], h.a[c][c]);
      if (q == 0) continue;
      for (Matrix3* mat : {&h, &u})
        for (std::size_t j = 0; j < 3; ++j)
          mat->a[r][j] = checked::sub(mat->a[r][j], checked::mul(q, mat->a[c][j]));
    }
  }
  return {h, UnimodularMap(u)};
}

}  // namespace fano
