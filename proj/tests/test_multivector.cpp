#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mvst/multivector.hpp"

using namespace mvst;

namespace {

// Independent oracle for vector products: expand the 9 basis pairs by hand
// (e_j e_j = 1 scalar; e_j e_k for j != k lands on the bivector slots with
// the signs of the cyclic order). Written without touching the basis table.
Multivector oracle_vector_product(const Vector3& u, const Vector3& v) {
  Multivector r{};
  r.c[kScalar] = u.x * v.x + u.y * v.y + u.z * v.z;
  // e2 e3 and e3 e2
  r.c[kE23] = u.y * v.z - u.z * v.y;
  // e3 e1 and e1 e3
  r.c[kE31] = u.z * v.x - u.x * v.z;
  // e1 e2 and e2 e1
  r.c[kE12] = u.x * v.y - u.y * v.x;
  return r;
}

Multivector basis(int slot) {
  Multivector m{};
  m.c[slot] = 1.0;
  return m;
}

double diff(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs_coeff();
}

Multivector random_mv(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Multivector m;
  for (double& c : m.c) c = u(rng);
  return m;
}

Vector3 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("basis table satisfies the axioms") {
  STATIC_REQUIRE(table_satisfies_axioms(kBasisTable));
  REQUIRE(table_satisfies_axioms(kBasisTable));
}

TEST_CASE("geometric product on basis elements") {
  CHECK(diff(basis(kE1) * basis(kE1), Multivector::scalar(1.0)) == 0.0);
  CHECK(diff(basis(kE1) * basis(kE2), basis(kE12)) == 0.0);
  CHECK(diff(basis(kE2) * basis(kE1), -basis(kE12)) == 0.0);
  CHECK(diff(basis(kE123) * basis(kE123), Multivector::scalar(-1.0)) == 0.0);
}

TEST_CASE("geometric product of (1,2,3) and (4,5,6)") {
  const Vector3 u{1.0, 2.0, 3.0}, v{4.0, 5.0, 6.0};
  const Multivector p =
      Multivector::from_vector(u) * Multivector::from_vector(v);
  const Multivector expect = oracle_vector_product(u, v);
  CHECK(expect.c[kScalar] == 32.0);
  CHECK(expect.c[kE23] == -3.0);
  CHECK(expect.c[kE31] == 6.0);
  CHECK(expect.c[kE12] == -3.0);
  CHECK(diff(p, expect) == 0.0);
}

TEST_CASE("dot and wedge") {
  CHECK(dot(Vector3{1, 0, 0}, Vector3{0, 1, 0}) == 0.0);
  const Vector3 u{1.0, 2.0, 3.0};
  CHECK(wedge(u, u).max_abs_coeff() == 0.0);
  CHECK(dot(u, Vector3{4.0, 5.0, 6.0}) == 32.0);
  const Multivector w = wedge(u, Vector3{4.0, 5.0, 6.0});
  CHECK(w.c[kE23] == -3.0);
  CHECK(w.c[kE31] == 6.0);
  CHECK(w.c[kE12] == -3.0);
}

TEST_CASE("grade projection and reversal") {
  const Multivector m =
      Multivector::scalar(1.0) + basis(kE1) + basis(kE12);
  CHECK(diff(grade_project(m, 1), basis(kE1)) == 0.0);
  CHECK(diff(grade_project(m, 0) + grade_project(m, 1) + grade_project(m, 2) +
                 grade_project(m, 3),
             m) == 0.0);
  CHECK_THROWS_AS(grade_project(m, 4), std::invalid_argument);
  CHECK_THROWS_AS(grade_project(m, -1), std::invalid_argument);

  CHECK(diff(reverse(basis(kE12)), -basis(kE12)) == 0.0);
  // Reversal of a rotor equals the rotor of the negated angle.
  const Multivector r = exp_bivector({0, 0, 1}, 0.7);
  CHECK(diff(reverse(r), exp_bivector({0, 0, 1}, -0.7)) < 1e-15);
}

TEST_CASE("exponential closed forms") {
  CHECK(diff(exp_vector({1, 0, 0}, 0.0), Multivector::scalar(1.0)) == 0.0);
  CHECK(diff(exp_bivector({0, 0, 1}, M_PI), Multivector::scalar(-1.0)) <
        1e-15);
  const Multivector b = exp_vector({1, 0, 0}, std::log(2.0));
  CHECK(b.c[kScalar] == Catch::Approx(1.25).epsilon(1e-15));
  CHECK(b.c[kE1] == Catch::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(exp_vector({1.0, 1.0, 0.0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(exp_bivector({0.0, 0.0, 0.9}, 0.5), std::invalid_argument);
}

TEST_CASE("series exponential agrees with the closed forms") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    Vector3 d = random_vec(rng);
    while (d.norm() < 1e-3) d = random_vec(rng);
    d = d / d.norm();
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double a = u(rng);
    CHECK(diff(exp(Multivector::from_vector(a * d)), exp_vector(d, a)) <
          1e-13);
    CHECK(diff(exp(Multivector::from_bivector(a * d)), exp_bivector(d, a)) <
          1e-13);
  }
}

TEST_CASE("vector inverse") {
  CHECK(diff(Multivector::from_vector(vector_inverse({1, 0, 0})),
             basis(kE1)) == 0.0);
  const Vector3 inv2 = vector_inverse({0.0, 2.0, 0.0});
  CHECK(inv2.y == 0.5);
  const Vector3 inv = vector_inverse({3.0, 4.0, 0.0});
  CHECK(inv.x == Catch::Approx(0.12).margin(1e-15));
  CHECK(inv.y == Catch::Approx(0.16).margin(1e-15));
  CHECK_THROWS_AS(vector_inverse({0.0, 0.0, 0.0}), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Vector3 v = random_vec(rng);
    while (v.norm() < 1e-3) v = random_vec(rng);
    const Multivector p = Multivector::from_vector(v) *
                          Multivector::from_vector(vector_inverse(v));
    CHECK(diff(p, Multivector::scalar(1.0)) < 1e-12);
  }
}

TEST_CASE("associativity over random triples") {
  std::mt19937_64 rng(13);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Multivector a = random_mv(rng, 2.0);
    const Multivector b = random_mv(rng, 2.0);
    const Multivector c = random_mv(rng, 2.0);
    const Multivector lhs = (a * b) * c;
    const Multivector rhs = a * (b * c);
    worst = std::max(worst, diff(lhs, rhs) / std::max(1.0, lhs.max_abs_coeff()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("decomposition uv = dot + wedge over random pairs") {
  std::mt19937_64 rng(17);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Vector3 u = random_vec(rng);
    const Vector3 v = random_vec(rng);
    const Multivector uv =
        Multivector::from_vector(u) * Multivector::from_vector(v);
    const Multivector expect = Multivector::scalar(dot(u, v)) + wedge(u, v);
    worst = std::max(worst, diff(uv, expect) / std::max(1.0, uv.max_abs_coeff()));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("pseudoscalar commutes with random multivectors") {
  std::mt19937_64 rng(19);
  const Multivector i = Multivector::pseudoscalar();
  for (int n = 0; n < 200; ++n) {
    const Multivector m = random_mv(rng, 3.0);
    CHECK(diff(i * m, m * i) == 0.0);
  }
}

TEST_CASE("product of two vectors closes on grades 0 and 2") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 200; ++n) {
    const Multivector p = Multivector::from_vector(random_vec(rng)) *
                          Multivector::from_vector(random_vec(rng));
    CHECK(grade_project(p, 1).max_abs_coeff() == 0.0);
    CHECK(grade_project(p, 3).max_abs_coeff() == 0.0);
  }
}

TEST_CASE("half-angle rotor rotates e1 onto e2") {
  const Multivector r = exp_bivector({0, 0, 1}, -M_PI / 4.0);
  const Multivector rotated =
      r * Multivector::from_vector({1, 0, 0}) * reverse(r);
  CHECK(diff(rotated, Multivector::from_vector({0, 1, 0})) < 1e-12);
  // Applying the quarter-turn rotor twice gives the half turn: e1 -> -e1.
  const Multivector twice = r * rotated * reverse(r);
  CHECK(diff(twice, Multivector::from_vector({-1, 0, 0})) < 1e-12);
}

TEST_CASE("debug rendering is fixed-order at 17 significant digits") {
  Multivector m{};
  m.c[kScalar] = 1.0;
  m.c[kE1] = -0.5;
  CHECK(to_debug_string(m) ==
        "1 + -0.5 e1 + 0 e2 + 0 e3 + 0 e23 + 0 e31 + 0 e12 + 0 e123");
  m.c[kE123] = 1.0 / 3.0;
  CHECK(to_debug_string(m) ==
        "1 + -0.5 e1 + 0 e2 + 0 e3 + 0 e23 + 0 e31 + 0 e12 + "
        "0.33333333333333331 e123");
}
