#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mvst/constants.hpp"
#include "mvst/errors.hpp"
#include "mvst/multivector.hpp"

// Five-dimensional weak-field metric with the Hubble expansion as a second
// time dimension, its Christoffel symbols, the geodesic integrator, and the
// null-geodesic expansion law.
//
// Coordinates (all metric entries dimensionless, every coordinate in meters
// except the angles): x0 = c t, x1 = r, x2 = theta, x3 = rho, x4 = tau v.

namespace mvst {

inline constexpr int kDim = 5;

using Christoffel = std::array<std::array<std::array<double, kDim>, kDim>, kDim>;
using Coordinates = std::array<double, kDim>;

struct MetricModel {
  PhysicalConstants constants;
  double central_mass = 0.0;  // kg, point mass with all mass interior

  double potential(double r) const {
    return -constants.G * central_mass / r;  // m^2/s^2
  }
  // A(r) = 1 + 2 phi / c^2, the shared factor of the two time entries.
  double time_factor(double r) const {
    const double c2 = constants.c * constants.c;
    return 1.0 + 2.0 * potential(r) / c2;
  }
  bool weak_field_ok(double r) const {
    const double c2 = constants.c * constants.c;
    return std::abs(2.0 * potential(r) / c2) < 1e-3;
  }
};

namespace detail {

inline void require_regular_point(const Coordinates& pos) {
  const double r = pos[1];
  const double theta = pos[2];
  if (!(r > 0.0))
    throw std::invalid_argument("metric: r must be positive, got " +
                                std::to_string(r));
  if (std::abs(std::sin(theta)) < 1e-12)
    throw std::invalid_argument(
        "metric: coordinate singularity at sin(theta) = 0");
}

}  // namespace detail

// diag(-A, 1, r^2, r^2 sin^2 theta, -A) with A = 1 + 2 phi/c^2.
inline std::array<double, kDim> metric_diagonal(const MetricModel& model,
                                                const Coordinates& pos) {
  detail::require_regular_point(pos);
  const double r = pos[1];
  const double st = std::sin(pos[2]);
  const double a = model.time_factor(r);
  return {-a, 1.0, r * r, r * r * st * st, -a};
}

// Analytic partials d g_mumu / d x^beta; only beta = 1 (r) and 2 (theta)
// contribute for this static metric.
inline std::array<double, kDim> metric_diagonal_partial(
    const MetricModel& model, const Coordinates& pos, int beta) {
  detail::require_regular_point(pos);
  const double r = pos[1];
  const double theta = pos[2];
  std::array<double, kDim> d{};
  if (beta == 1) {
    const double c2 = model.constants.c * model.constants.c;
    // dA/dr = 2 phi'(r)/c^2 with phi' = G M / r^2.
    const double da = 2.0 * model.constants.G * model.central_mass / (c2 * r * r);
    const double st = std::sin(theta);
    d[0] = -da;
    d[2] = 2.0 * r;
    d[3] = 2.0 * r * st * st;
    d[4] = -da;
  } else if (beta == 2) {
    d[3] = 2.0 * r * r * std::sin(theta) * std::cos(theta);
  }
  return d;
}

// Gamma^alpha_{mu nu} = 1/2 g^{alpha alpha} (g_{alpha mu, nu} [mu==alpha]
// + g_{alpha nu, mu} [nu==alpha] - g_{mu nu, alpha} [mu==nu]) for a
// diagonal metric, from the analytic partials above.
inline Christoffel christoffel_exact(const MetricModel& model,
                                     const Coordinates& pos) {
  const auto g = metric_diagonal(model, pos);
  std::array<std::array<double, kDim>, kDim> dg{};
  for (int beta = 0; beta < kDim; ++beta)
    dg[beta] = metric_diagonal_partial(model, pos, beta);

  Christoffel gamma{};
  for (int a = 0; a < kDim; ++a) {
    const double inv = 1.0 / (2.0 * g[a]);
    for (int mu = 0; mu < kDim; ++mu) {
      for (int nu = mu; nu < kDim; ++nu) {
        double v = 0.0;
        if (mu == a) v += dg[nu][a];
        if (nu == a) v += dg[mu][a];
        if (mu == nu) v -= dg[a][mu];
        v *= inv;
        gamma[a][mu][nu] = v;
        gamma[a][nu][mu] = v;
      }
    }
  }
  return gamma;
}

// The two weak-field symbols: Gamma^0_00 = phi_{,0}/c^2 (zero for this
// static potential) and Gamma^j_00 = phi_{,j}/c^2 (radial only).
struct WeakFieldSymbols {
  double gamma_t_tt = 0.0;
  std::array<double, 3> gamma_j_tt{};  // (r, theta, rho) components
};

inline WeakFieldSymbols weak_field_symbols(const MetricModel& model,
                                           const Coordinates& pos) {
  detail::require_regular_point(pos);
  const double r = pos[1];
  const double c2 = model.constants.c * model.constants.c;
  WeakFieldSymbols s;
  s.gamma_j_tt[0] = model.constants.G * model.central_mass / (c2 * r * r);
  return s;
}

// Full tensor truncated at first order in phi: the metric-inverse factors
// 1/A on the two time rows are replaced by 1, so every phi-sourced symbol
// reduces to phi_{,j}/c^2 while the flat spherical terms stay exact. The
// difference from christoffel_exact is O(phi^2).
inline Christoffel christoffel_first_order(const MetricModel& model,
                                           const Coordinates& pos) {
  auto g = metric_diagonal(model, pos);
  g[0] = -1.0;
  g[4] = -1.0;
  std::array<std::array<double, kDim>, kDim> dg{};
  for (int beta = 0; beta < kDim; ++beta)
    dg[beta] = metric_diagonal_partial(model, pos, beta);

  Christoffel gamma{};
  for (int a = 0; a < kDim; ++a) {
    const double inv = 1.0 / (2.0 * g[a]);
    for (int mu = 0; mu < kDim; ++mu) {
      for (int nu = mu; nu < kDim; ++nu) {
        double v = 0.0;
        if (mu == a) v += dg[nu][a];
        if (nu == a) v += dg[mu][a];
        if (mu == nu) v -= dg[a][mu];
        v *= inv;
        gamma[a][mu][nu] = v;
        gamma[a][nu][mu] = v;
      }
    }
  }
  return gamma;
}

// dS = (1 - 2phi/c^2)^{1/2} dx + i (1 + 2phi/c^2)^{1/2} c dt.
inline Multivector curved_event(const Vector3& dx, const Vector3& dt_seconds,
                                double potential, const PhysicalConstants& k) {
  const double c2 = k.c * k.c;
  const double strength = 2.0 * potential / c2;
  if (std::abs(strength) >= 1.0)
    throw std::invalid_argument(
        "curved_event: strong field |2 phi/c^2| >= 1 outside the weak-field "
        "metric's validity");
  const double nx = dx.norm();
  const double nt = dt_seconds.norm();
  if (nx > 0.0 && nt > 0.0 &&
      std::abs(dot(dx, dt_seconds)) > 1e-9 * nx * nt)
    throw std::invalid_argument(
        "curved_event: space and time displacements must be orthogonal");
  return Multivector::from_vector(std::sqrt(1.0 - strength) * dx) +
         Multivector::from_bivector(std::sqrt(1.0 + strength) * k.c *
                                    dt_seconds);
}

struct GeodesicState {
  Coordinates position{};
  Coordinates velocity{};  // derivatives with respect to the affine parameter
};

struct Trajectory {
  std::vector<double> affine;
  std::vector<GeodesicState> states;
  bool completed = true;
  std::size_t failed_step = 0;
  std::string failure;
};

// g_{mu nu} xdot^mu xdot^nu, the conserved affine norm.
inline double affine_norm(const MetricModel& model, const GeodesicState& s) {
  const auto g = metric_diagonal(model, s.position);
  double sum = 0.0;
  for (int mu = 0; mu < kDim; ++mu)
    sum += g[mu] * s.velocity[mu] * s.velocity[mu];
  return sum;
}

namespace detail {

using GeodesicRhs = std::array<double, 2 * kDim>;

inline GeodesicRhs geodesic_rhs(const MetricModel& model,
                                const GeodesicRhs& y) {
  Coordinates pos{}, vel{};
  for (int i = 0; i < kDim; ++i) {
    pos[i] = y[i];
    vel[i] = y[kDim + i];
  }
  const Christoffel gamma = christoffel_exact(model, pos);
  GeodesicRhs dy{};
  for (int i = 0; i < kDim; ++i) dy[i] = vel[i];
  for (int mu = 0; mu < kDim; ++mu) {
    double acc = 0.0;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) acc += gamma[mu][a][b] * vel[a] * vel[b];
    dy[kDim + mu] = -acc;
  }
  return dy;
}

inline bool finite(const GeodesicRhs& y) {
  for (double v : y)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace detail

// Classical fixed-step RK4 on the 10-dimensional first-order system
// xdot = u, udot^mu = -Gamma^mu_{ab} u^a u^b. Halts with the partial
// trajectory when r collapses or the state stops being finite.
inline Trajectory integrate_geodesic(const GeodesicState& initial,
                                     const MetricModel& model,
                                     std::size_t steps, double step_size) {
  if (!(step_size > 0.0))
    throw std::invalid_argument("integrate_geodesic: step_size must be > 0");

  detail::GeodesicRhs y{};
  for (int i = 0; i < kDim; ++i) {
    y[i] = initial.position[i];
    y[kDim + i] = initial.velocity[i];
  }

  Trajectory traj;
  traj.affine.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  auto record = [&](double s) {
    GeodesicState st;
    for (int i = 0; i < kDim; ++i) {
      st.position[i] = y[i];
      st.velocity[i] = y[kDim + i];
    }
    traj.affine.push_back(s);
    traj.states.push_back(st);
  };
  record(0.0);

  const double h = step_size;
  for (std::size_t n = 0; n < steps; ++n) {
    detail::GeodesicRhs k1, k2, k3, k4, tmp;
    try {
      k1 = detail::geodesic_rhs(model, y);
      for (int i = 0; i < 2 * kDim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
      k2 = detail::geodesic_rhs(model, tmp);
      for (int i = 0; i < 2 * kDim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
      k3 = detail::geodesic_rhs(model, tmp);
      for (int i = 0; i < 2 * kDim; ++i) tmp[i] = y[i] + h * k3[i];
      k4 = detail::geodesic_rhs(model, tmp);
    } catch (const std::invalid_argument& e) {
      traj.completed = false;
      traj.failed_step = n;
      traj.failure = e.what();
      return traj;
    }
    for (int i = 0; i < 2 * kDim; ++i)
      y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!detail::finite(y) || !(y[1] > 0.0)) {
      traj.completed = false;
      traj.failed_step = n + 1;
      traj.failure = !detail::finite(y)
                         ? "state became non-finite"
                         : "radial coordinate collapsed to r <= 0";
      return traj;
    }
    record((n + 1) * h);
  }
  return traj;
}

// Non-relativistic limit: a(r) = -(G M / r^2) rhat - a0 rhat. The expansion
// sector decouples (d^2 v / d t^2 = 0, v = a0 t) and feeds back as the
// constant radial term whose circular-orbit condition gives
// v_c^2 = G M / r + a0 r.
struct RadialAcceleration {
  double GM = 0.0;
  double a0 = 0.0;

  Vector3 operator()(const Vector3& position) const {
    const double r = position.norm();
    if (!(r > 0.0))
      throw std::invalid_argument("RadialAcceleration: r = 0 is singular");
    const Vector3 rhat = position / r;
    return -(GM / (r * r) + a0) * rhat;
  }

  // phi_eff = -GM/r + a0 r, the potential whose negative gradient this is.
  double effective_potential_per_mass(double r) const {
    return -GM / r + a0 * r;
  }
};

inline RadialAcceleration nonrelativistic_equations(const MetricModel& model) {
  return {model.constants.G * model.central_mass, model.constants.a0()};
}

struct OrbitTrajectory {
  std::vector<double> times;
  std::vector<Vector3> positions;
  std::vector<Vector3> velocities;
  bool completed = true;
  std::size_t failed_step = 0;
  std::string failure;
};

// RK4 on the reduced 3D equations of motion.
inline OrbitTrajectory integrate_orbit(const Vector3& position,
                                       const Vector3& velocity,
                                       const RadialAcceleration& accel,
                                       std::size_t steps, double dt) {
  if (!(dt > 0.0))
    throw std::invalid_argument("integrate_orbit: dt must be > 0");
  OrbitTrajectory traj;
  traj.times.reserve(steps + 1);
  Vector3 x = position, v = velocity;
  traj.times.push_back(0.0);
  traj.positions.push_back(x);
  traj.velocities.push_back(v);
  for (std::size_t n = 0; n < steps; ++n) {
    try {
      const Vector3 k1x = v, k1v = accel(x);
      const Vector3 k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x);
      const Vector3 k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x);
      const Vector3 k4x = v + dt * k3v, k4v = accel(x + dt * k3x);
      x = x + (dt / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      v = v + (dt / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    } catch (const std::invalid_argument& e) {
      traj.completed = false;
      traj.failed_step = n;
      traj.failure = e.what();
      return traj;
    }
    if (!std::isfinite(x.norm_squared()) || !std::isfinite(v.norm_squared())) {
      traj.completed = false;
      traj.failed_step = n + 1;
      traj.failure = "state became non-finite";
      return traj;
    }
    traj.times.push_back((n + 1) * dt);
    traj.positions.push_back(x);
    traj.velocities.push_back(v);
  }
  return traj;
}

struct ExpansionSamples {
  std::vector<double> expansion_velocity;  // m/s
  std::vector<double> radius;              // m
  std::vector<double> dr_dv;               // s (= tau-scale slope)
};

// Null radial geodesic of the expansion sector: with dt = dtheta = drho = 0
// and dS^2 = 0 the metric gives dr/dv = tau (1 + 2 phi/c^2)^{1/2}, so a flat
// potential integrates to the Hubble law r = v tau = v / H0.
inline ExpansionSamples null_geodesic_expansion(const MetricModel& model,
                                                double r_start, double v_max,
                                                int samples) {
  if (samples < 2)
    throw std::invalid_argument("null_geodesic_expansion: samples must be >= 2");
  if (!(v_max > 0.0))
    throw std::invalid_argument("null_geodesic_expansion: v_max must be > 0");
  const double tau = model.constants.tau();
  auto slope = [&](double r) {
    if (model.central_mass == 0.0) return tau;
    return tau * std::sqrt(model.time_factor(r));
  };
  ExpansionSamples out;
  out.expansion_velocity.reserve(samples);
  out.radius.reserve(samples);
  out.dr_dv.reserve(samples);
  const double dv = v_max / (samples - 1);
  const int substeps = 16;
  double r = r_start;
  for (int i = 0; i < samples; ++i) {
    const double v = i * dv;
    out.expansion_velocity.push_back(v);
    out.radius.push_back(r);
    out.dr_dv.push_back(slope(r));
    if (i + 1 == samples) break;
    const double h = dv / substeps;
    for (int k = 0; k < substeps; ++k) {
      const double k1 = slope(r);
      const double k2 = slope(r + 0.5 * h * k1);
      const double k3 = slope(r + 0.5 * h * k2);
      const double k4 = slope(r + h * k3);
      r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return out;
}

}  // namespace mvst
