#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

// Real Clifford algebra Cl(3,0): 8-component multivectors over the basis
// (1; e1,e2,e3; e23,e31,e12; e123), with e_k^2 = +1 and e_j e_k = -e_k e_j.

namespace mvst {

inline constexpr int kBladeCount = 8;

// Coefficient slots, fixed order. The bivector slots are arranged so that
// multiplying a vector (x1,x2,x3) by the pseudoscalar copies coefficients
// straight across: i*e1 = e23, i*e2 = e31, i*e3 = e12.
enum BladeIndex : int {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE23 = 4,
  kE31 = 5,
  kE12 = 6,
  kE123 = 7,
};

inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1,
                                                            2, 2, 2, 3};

namespace detail {

// Bit masks of the canonical (ascending index) blades backing each slot.
// e31 = e3 e1 = -e1 e3, so that slot carries sign -1 relative to canonical.
inline constexpr std::array<unsigned, kBladeCount> kBladeMask = {
    0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
inline constexpr std::array<double, kBladeCount> kBladeBaseSign = {
    1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0, 1.0};

constexpr int popcount_u(unsigned v) {
  int n = 0;
  while (v) {
    n += static_cast<int>(v & 1u);
    v >>= 1;
  }
  return n;
}

// Sign from reordering the concatenation of two canonical blades into
// ascending order (Euclidean signature, so repeated indices contribute +1).
constexpr double canonical_reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += popcount_u(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1.0 : 1.0;
}

}  // namespace detail

// Signed 8x8 multiplication table: blade i * blade j = sign[i][j] *
// blade(index[i][j]).
struct BasisTable {
  std::array<std::array<int, kBladeCount>, kBladeCount> index{};
  std::array<std::array<double, kBladeCount>, kBladeCount> sign{};
};

constexpr BasisTable make_basis_table() {
  using namespace detail;
  BasisTable t{};
  std::array<int, kBladeCount> mask_to_slot{};
  for (int s = 0; s < kBladeCount; ++s)
    mask_to_slot[kBladeMask[static_cast<unsigned>(s)]] = s;
  for (int i = 0; i < kBladeCount; ++i) {
    for (int j = 0; j < kBladeCount; ++j) {
      const unsigned mi = kBladeMask[static_cast<unsigned>(i)];
      const unsigned mj = kBladeMask[static_cast<unsigned>(j)];
      const int k = mask_to_slot[mi ^ mj];
      t.index[static_cast<unsigned>(i)][static_cast<unsigned>(j)] = k;
      t.sign[static_cast<unsigned>(i)][static_cast<unsigned>(j)] =
          kBladeBaseSign[static_cast<unsigned>(i)] *
          kBladeBaseSign[static_cast<unsigned>(j)] *
          kBladeBaseSign[static_cast<unsigned>(k)] *
          canonical_reorder_sign(mi, mj);
    }
  }
  return t;
}

// Axioms: e_k^2 = 1, anticommutation, i^2 = -1, i central, associativity
// over all basis triples.
constexpr bool table_satisfies_axioms(const BasisTable& t) {
  for (int k = kE1; k <= kE3; ++k)
    if (t.index[k][k] != kScalar || t.sign[k][k] != 1.0) return false;
  for (int j = kE1; j <= kE3; ++j)
    for (int k = kE1; k <= kE3; ++k)
      if (j != k &&
          (t.index[j][k] != t.index[k][j] || t.sign[j][k] != -t.sign[k][j]))
        return false;
  if (t.index[kE123][kE123] != kScalar || t.sign[kE123][kE123] != -1.0)
    return false;
  for (int k = 0; k < kBladeCount; ++k)
    if (t.index[kE123][k] != t.index[k][kE123] ||
        t.sign[kE123][k] != t.sign[k][kE123])
      return false;
  for (int a = 0; a < kBladeCount; ++a)
    for (int b = 0; b < kBladeCount; ++b)
      for (int c = 0; c < kBladeCount; ++c) {
        const int ab = t.index[a][b];
        const int bc = t.index[b][c];
        if (t.index[ab][c] != t.index[a][bc] ||
            t.sign[a][b] * t.sign[ab][c] != t.sign[b][c] * t.sign[a][bc])
          return false;
      }
  return true;
}

inline constexpr BasisTable kBasisTable = make_basis_table();
static_assert(table_satisfies_axioms(kBasisTable));

struct Vector3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vector3 operator+(const Vector3& a, const Vector3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vector3 operator-(const Vector3& a, const Vector3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vector3 operator*(double s, const Vector3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend constexpr Vector3 operator*(const Vector3& v, double s) { return s * v; }
  friend constexpr Vector3 operator/(const Vector3& v, double s) {
    return {v.x / s, v.y / s, v.z / s};
  }
  constexpr Vector3 operator-() const { return {-x, -y, -z}; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  constexpr double norm_squared() const { return x * x + y * y + z * z; }
};

constexpr double dot(const Vector3& u, const Vector3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

constexpr Vector3 cross(const Vector3& u, const Vector3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

struct Multivector {
  std::array<double, kBladeCount> c{};

  static constexpr Multivector scalar(double a) {
    Multivector m{};
    m.c[kScalar] = a;
    return m;
  }
  static constexpr Multivector from_vector(const Vector3& v) {
    Multivector m{};
    m.c[kE1] = v.x;
    m.c[kE2] = v.y;
    m.c[kE3] = v.z;
    return m;
  }
  // i*(t1 e1 + t2 e2 + t3 e3) = t1 e23 + t2 e31 + t3 e12.
  static constexpr Multivector from_bivector(const Vector3& t) {
    Multivector m{};
    m.c[kE23] = t.x;
    m.c[kE31] = t.y;
    m.c[kE12] = t.z;
    return m;
  }
  static constexpr Multivector pseudoscalar(double b = 1.0) {
    Multivector m{};
    m.c[kE123] = b;
    return m;
  }

  constexpr Vector3 vector_part() const { return {c[kE1], c[kE2], c[kE3]}; }
  constexpr Vector3 bivector_part() const { return {c[kE23], c[kE31], c[kE12]}; }
  constexpr double scalar_part() const { return c[kScalar]; }
  constexpr double pseudoscalar_part() const { return c[kE123]; }

  friend constexpr Multivector operator+(const Multivector& a,
                                         const Multivector& b) {
    Multivector r{};
    for (int i = 0; i < kBladeCount; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend constexpr Multivector operator-(const Multivector& a,
                                         const Multivector& b) {
    Multivector r{};
    for (int i = 0; i < kBladeCount; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend constexpr Multivector operator*(double s, const Multivector& m) {
    Multivector r{};
    for (int i = 0; i < kBladeCount; ++i) r.c[i] = s * m.c[i];
    return r;
  }
  friend constexpr Multivector operator*(const Multivector& m, double s) {
    return s * m;
  }
  constexpr Multivector operator-() const { return -1.0 * *this; }

  double norm() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return std::sqrt(s);
  }
  double max_abs_coeff() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

namespace detail {

inline Multivector product_with_table(const BasisTable& t, const Multivector& a,
                                      const Multivector& b) {
  Multivector r{};
  for (int i = 0; i < kBladeCount; ++i) {
    if (a.c[i] == 0.0) continue;
    for (int j = 0; j < kBladeCount; ++j) {
      r.c[t.index[i][j]] += t.sign[i][j] * a.c[i] * b.c[j];
    }
  }
  return r;
}

}  // namespace detail

inline Multivector geometric_product(const Multivector& a,
                                     const Multivector& b) {
  return detail::product_with_table(kBasisTable, a, b);
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// u^v = (uv - vu)/2 = i (u x v); the companion u.v is the free function dot().
inline Multivector wedge(const Vector3& u, const Vector3& v) {
  return Multivector::from_bivector(cross(u, v));
}

inline Multivector grade_project(const Multivector& m, int grade) {
  if (grade < 0 || grade > 3)
    throw std::invalid_argument("grade_project: grade must be in 0..3, got " +
                                std::to_string(grade));
  Multivector r{};
  for (int i = 0; i < kBladeCount; ++i)
    if (kBladeGrade[i] == grade) r.c[i] = m.c[i];
  return r;
}

// Reversion: negates grades 2 and 3.
inline constexpr Multivector reverse(const Multivector& m) {
  Multivector r = m;
  for (int i = 0; i < kBladeCount; ++i)
    if (kBladeGrade[i] >= 2) r.c[i] = -r.c[i];
  return r;
}

namespace detail {

inline void require_unit(const Vector3& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(what) +
                                ": direction must be a unit vector (|n| = " +
                                std::to_string(v.norm()) + ")");
}

}  // namespace detail

// exp(phi * vhat) = cosh(phi) + vhat sinh(phi), since vhat^2 = +1.
inline Multivector exp_vector(const Vector3& direction, double rapidity) {
  detail::require_unit(direction, "exp_vector");
  Multivector r = Multivector::from_vector(std::sinh(rapidity) * direction);
  r.c[kScalar] = std::cosh(rapidity);
  return r;
}

// exp(i * theta * what) = cos(theta) + i what sin(theta), since (i what)^2 = -1.
inline Multivector exp_bivector(const Vector3& axis, double angle) {
  detail::require_unit(axis, "exp_bivector");
  Multivector r = Multivector::from_bivector(std::sin(angle) * axis);
  r.c[kScalar] = std::cos(angle);
  return r;
}

// General multivector exponential by scaling-and-squaring power series,
// absolute tolerance 1e-14. The closed forms above are the fast paths for
// pure vector / pure bivector arguments.
inline Multivector exp(const Multivector& a) {
  int squarings = 0;
  Multivector x = a;
  while (x.max_abs_coeff() > 0.5) {
    x = 0.5 * x;
    ++squarings;
  }
  Multivector sum = Multivector::scalar(1.0);
  Multivector term = Multivector::scalar(1.0);
  for (int n = 1; n < 64; ++n) {
    term = (1.0 / n) * (term * x);
    sum = sum + term;
    if (term.max_abs_coeff() < 1e-14) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

// v^{-1} = v / v^2.
inline Vector3 vector_inverse(const Vector3& v) {
  const double n2 = v.norm_squared();
  if (n2 <= 0.0)
    throw std::invalid_argument("vector_inverse: zero vector has no inverse");
  return v / n2;
}

inline std::string format_coefficient(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Fixed-order debug rendering, 17 significant digits per coefficient:
// "a + x1 e1 + x2 e2 + x3 e3 + t1 e23 + t2 e31 + t3 e12 + b e123"
inline std::string to_debug_string(const Multivector& m) {
  static constexpr const char* names[kBladeCount] = {
      "", " e1", " e2", " e3", " e23", " e31", " e12", " e123"};
  std::string out;
  for (int i = 0; i < kBladeCount; ++i) {
    if (i > 0) out += " + ";
    out += format_coefficient(m.c[i]);
    out += names[i];
  }
  return out;
}

}  // namespace mvst
