#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvst/multivector.hpp"
#include "mvst/spacetime.hpp"

// Randomized identity suite behind the `check` subcommand. The algebra
// checks run against an explicit basis table so a deliberately corrupted
// copy can be fed in to prove the suite bites.

namespace mvst {

struct CheckOptions {
  std::uint64_t seed = 20260826;
  int trials = 1000;
  BasisTable table = kBasisTable;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst violation magnitude observed
  double tolerance = 0.0;
};

namespace detail {

inline Multivector random_multivector(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Multivector m;
  for (double& c : m.c) c = u(rng);
  return m;
}

inline Vector3 random_vector(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

// Random (x, t) pair satisfying the orthogonality constraint.
inline SpacetimeEvent random_event(std::mt19937_64& rng, double c) {
  Vector3 x = random_vector(rng, 1.0);
  while (x.norm() < 1e-3) x = random_vector(rng, 1.0);
  Vector3 t = random_vector(rng, 1.0);
  t = t - (dot(t, x) / x.norm_squared()) * x;
  return make_event(x, t / c, c);
}

inline LorentzOperator random_operator(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector3 v = random_vector(rng, 1.0);
  while (v.norm() < 1e-3) v = random_vector(rng, 1.0);
  Vector3 w = random_vector(rng, 1.0);
  while (w.norm() < 1e-3) w = random_vector(rng, 1.0);
  LorentzOperator op;
  op.boost_direction = v / v.norm();
  op.rapidity = 3.0 * u(rng);
  op.rotation_axis = w / w.norm();
  op.rotation_angle = 3.14159265358979 * u(rng);
  return op;
}

}  // namespace detail

inline std::vector<CheckResult> run_check_suite(const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const BasisTable& t = opt.table;
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, double worst, double tol) {
    results.push_back({name, worst <= tol, worst, tol});
  };
  auto mul = [&](const Multivector& a, const Multivector& b) {
    return detail::product_with_table(t, a, b);
  };

  // Basis axioms, exact.
  {
    double worst = table_satisfies_axioms(t) ? 0.0 : 1.0;
    add("basis table axioms (e_k^2 = 1, anticommutation, associativity)",
        worst, 0.0);
  }
  {
    double worst = 0.0;
    for (int j = kE1; j <= kE3; ++j)
      for (int k = kE1; k <= kE3; ++k) {
        if (j == k) continue;
        Multivector ej{}, ek{};
        ej.c[j] = 1.0;
        ek.c[k] = 1.0;
        worst = std::max(worst, (mul(ej, ek) + mul(ek, ej)).max_abs_coeff());
      }
    add("anticommutation e_j e_k + e_k e_j = 0", worst, 0.0);
  }
  {
    const Multivector i = Multivector::pseudoscalar();
    double worst =
        (mul(i, i) + Multivector::scalar(1.0)).max_abs_coeff();
    std::mt19937_64 r2(opt.seed + 1);
    for (int n = 0; n < opt.trials; ++n) {
      const Multivector m = detail::random_multivector(r2, 1.0);
      worst = std::max(worst, (mul(i, m) - mul(m, i)).max_abs_coeff());
    }
    add("pseudoscalar: i^2 = -1 and i central", worst, 0.0);
  }
  {
    double worst = 0.0;
    for (int n = 0; n < opt.trials; ++n) {
      const Multivector a = detail::random_multivector(rng, 2.0);
      const Multivector b = detail::random_multivector(rng, 2.0);
      const Multivector c = detail::random_multivector(rng, 2.0);
      const Multivector lhs = mul(mul(a, b), c);
      const Multivector rhs = mul(a, mul(b, c));
      const double scale = std::max(1.0, lhs.max_abs_coeff());
      worst = std::max(worst, (lhs - rhs).max_abs_coeff() / scale);
    }
    add("associativity (ab)c = a(bc)", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (int n = 0; n < opt.trials; ++n) {
      const Vector3 u = detail::random_vector(rng, 1.0);
      const Vector3 v = detail::random_vector(rng, 1.0);
      const Multivector uv =
          mul(Multivector::from_vector(u), Multivector::from_vector(v));
      const Multivector expect =
          Multivector::scalar(dot(u, v)) + wedge(u, v);
      const double scale = std::max(1.0, uv.max_abs_coeff());
      worst = std::max(worst, (uv - expect).max_abs_coeff() / scale);
    }
    add("decomposition uv = u.v + u^v", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int n = 0; n < opt.trials; ++n) {
      const Vector3 u = detail::random_vector(rng, 1.0);
      const Vector3 v = detail::random_vector(rng, 1.0);
      const Multivector uv =
          mul(Multivector::from_vector(u), Multivector::from_vector(v));
      worst = std::max(worst, std::abs(uv.c[kE1]));
      worst = std::max(worst, std::abs(uv.c[kE2]));
      worst = std::max(worst, std::abs(uv.c[kE3]));
      worst = std::max(worst, std::abs(uv.c[kE123]));
    }
    add("grade closure: vector * vector has grades 0 and 2 only", worst, 0.0);
  }
  {
    // Half-angle rotor for a pi/2 rotation about e3 carries e1 onto e2.
    const Multivector rotor = exp_bivector({0.0, 0.0, 1.0}, -3.14159265358979 / 4.0);
    const Multivector rotated =
        rotor * Multivector::from_vector({1.0, 0.0, 0.0}) * reverse(rotor);
    const double worst =
        (rotated - Multivector::from_vector({0.0, 1.0, 0.0})).max_abs_coeff();
    add("rotor action rotates e1 onto e2", worst, 1e-12);
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 0; n < 50; ++n) {
      Vector3 d = detail::random_vector(rng, 1.0);
      while (d.norm() < 1e-3) d = detail::random_vector(rng, 1.0);
      d = d / d.norm();
      const double a = u(rng);
      const Multivector one = Multivector::scalar(1.0);
      worst = std::max(
          worst, (exp_vector(d, a) * exp_vector(d, -a) - one).max_abs_coeff());
      worst = std::max(
          worst,
          (exp_bivector(d, a) * exp_bivector(d, -a) - one).max_abs_coeff());
    }
    add("exponentials: exp(A) exp(-A) = 1", worst, 1e-12);
  }

  // Spacetime invariance checks (always on the validated product).
  const double c = 2.99792458e8;
  {
    double worst = 0.0, worst_null = 0.0, worst_grade = 0.0;
    for (int n = 0; n < opt.trials; ++n) {
      const SpacetimeEvent ev = detail::random_event(rng, c);
      const LorentzOperator op = detail::random_operator(rng);
      const double before = interval_squared(ev);
      const SpacetimeEvent after = lorentz_transform(ev, op);
      const double delta = std::abs(interval_squared(after) - before);
      worst = std::max(worst, delta / std::max(1.0, std::abs(before)));

      const auto [pre, post] = op.sandwich_halves();
      const Multivector raw = pre * ev.to_multivector() * post;
      worst_grade = std::max(worst_grade,
                             std::max(std::abs(raw.scalar_part()),
                                      std::abs(raw.pseudoscalar_part())));
    }
    for (int n = 0; n < opt.trials / 10; ++n) {
      Vector3 x = detail::random_vector(rng, 1.0);
      while (x.norm() < 1e-3) x = detail::random_vector(rng, 1.0);
      Vector3 tv = cross(x, detail::random_vector(rng, 1.0));
      while (tv.norm() < 1e-6) tv = cross(x, detail::random_vector(rng, 1.0));
      tv = tv * (x.norm() / tv.norm());  // null: |x| = c|t|
      const SpacetimeEvent ev = make_event(x, tv / c, c);
      const SpacetimeEvent after =
          lorentz_transform(ev, detail::random_operator(rng));
      worst_null = std::max(worst_null, std::abs(interval_squared(after)));
    }
    add("Lorentz invariance of interval^2", worst, 1e-9);
    add("null events stay null", worst_null, 1e-10);
    add("transformed events stay in grades 1+2", worst_grade, 1e-10);
  }
  {
    double worst = 0.0;
    for (int n = 0; n < opt.trials / 10; ++n) {
      const SpacetimeEvent ev = detail::random_event(rng, c);
      const LorentzOperator op1 = detail::random_operator(rng);
      const LorentzOperator op2 = detail::random_operator(rng);
      const SpacetimeEvent two_step =
          lorentz_transform(lorentz_transform(ev, op1), op2);
      const auto [pre1, post1] = op1.sandwich_halves();
      const auto [pre2, post2] = op2.sandwich_halves();
      const SpacetimeEvent composed =
          lorentz_transform(ev, pre2 * pre1, post1 * post2);
      const double scale =
          std::max(1.0, two_step.to_multivector().max_abs_coeff());
      worst = std::max(worst, (two_step.to_multivector() -
                               composed.to_multivector())
                                      .max_abs_coeff() /
                                  scale);
    }
    add("group property: L2 . L1 equals composed operator", worst, 1e-9);
  }
  return results;
}

}  // namespace mvst
