#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvst/constants.hpp"
#include "mvst/errors.hpp"
#include "mvst/rootfind.hpp"

// Effective potential, circular orbits, modified rotation curves and the
// Tully-Fisher relation.

namespace mvst {

struct GalaxyModel {
  double central_mass = 0.0;      // kg, point mass with all mass interior
  double test_mass = 1.0;         // kg
  double angular_momentum = 0.0;  // kg m^2/s
  PhysicalConstants constants;

  void validate() const {
    if (!(central_mass > 0.0))
      throw std::invalid_argument("GalaxyModel: central mass must be > 0");
    if (!(test_mass > 0.0))
      throw std::invalid_argument("GalaxyModel: test mass must be > 0");
  }

  // Same galaxy with the expansion switched off (a0 = 0).
  GalaxyModel newtonian() const {
    GalaxyModel m = *this;
    m.constants.H0 = 0.0;
    return m;
  }
};

// V_e(r) = -G M m / r + L^2 / (2 m r^2) + m a0 r.
inline double effective_potential(double r, const GalaxyModel& model) {
  model.validate();
  if (!(r > 0.0))
    throw std::invalid_argument("effective_potential: r must be > 0");
  const double GM = model.constants.G * model.central_mass;
  const double m = model.test_mass;
  const double L = model.angular_momentum;
  return -GM * m / r + L * L / (2.0 * m * r * r) + m * model.constants.a0() * r;
}

// dV_e/dr = G M m / r^2 - L^2 / (m r^3) + m a0.
inline double effective_potential_derivative(double r,
                                             const GalaxyModel& model) {
  const double GM = model.constants.G * model.central_mass;
  const double m = model.test_mass;
  const double L = model.angular_momentum;
  return GM * m / (r * r) - L * L / (m * r * r * r) + m * model.constants.a0();
}

// Minimum of the effective potential: bracketed root of dV_e/dr on
// [r_N/10, 10 r_N] around the analytic a0 = 0 root r_N = L^2/(G M m^2).
inline double circular_orbit_radius(const GalaxyModel& model) {
  model.validate();
  if (!(model.angular_momentum > 0.0))
    throw std::invalid_argument(
        "circular_orbit_radius: angular momentum must be > 0");
  const double GM = model.constants.G * model.central_mass;
  const double L = model.angular_momentum;
  const double m = model.test_mass;
  const double r_newton = L * L / (GM * m * m);
  return find_root_bracketed(
      [&](double r) { return effective_potential_derivative(r, model); },
      r_newton / 10.0, 10.0 * r_newton, 1e-12);
}

// v_c = sqrt(G M / r + a0 r).
inline double circular_velocity(double r, const GalaxyModel& model) {
  model.validate();
  if (!(r > 0.0))
    throw std::invalid_argument("circular_velocity: r must be > 0");
  const double GM = model.constants.G * model.central_mass;
  return std::sqrt(GM / r + model.constants.a0() * r);
}

// v_c^4 = (G M / r)^2 + 2 G M a0 + a0^2 r^2, the expanded square of the
// circular-velocity relation; the cross term alone carries the
// Tully-Fisher proportionality.
inline double vc_fourth_power(double r, const GalaxyModel& model) {
  model.validate();
  if (!(r > 0.0))
    throw std::invalid_argument("vc_fourth_power: r must be > 0");
  const double GM = model.constants.G * model.central_mass;
  const double a0 = model.constants.a0();
  return (GM / r) * (GM / r) + 2.0 * GM * a0 + a0 * a0 * r * r;
}

// r* = sqrt(G M / a0), where the Newtonian and expansion terms of v_c^2
// are equal and v_c is at its minimum.
inline double crossover_radius(const GalaxyModel& model) {
  model.validate();
  const double a0 = model.constants.a0();
  if (!(a0 > 0.0))
    throw std::invalid_argument("crossover_radius: requires a0 > 0");
  return std::sqrt(model.constants.G * model.central_mass / a0);
}

struct RotationCurve {
  std::vector<double> radii;        // m, ascending
  std::vector<double> v_newtonian;  // m/s
  std::vector<double> v_modified;   // m/s
};

inline RotationCurve rotation_curve(const GalaxyModel& model, double r_min,
                                    double r_max, std::size_t n_samples) {
  model.validate();
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument(
        "rotation_curve: need 0 < r_min < r_max, got [" +
        std::to_string(r_min) + ", " + std::to_string(r_max) + "]");
  if (n_samples < 2)
    throw std::invalid_argument("rotation_curve: need at least 2 samples");
  const GalaxyModel newton = model.newtonian();
  RotationCurve curve;
  curve.radii.reserve(n_samples);
  const double dr = (r_max - r_min) / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double r = r_min + static_cast<double>(i) * dr;
    curve.radii.push_back(r);
    curve.v_newtonian.push_back(circular_velocity(r, newton));
    curve.v_modified.push_back(circular_velocity(r, model));
  }
  return curve;
}

// Least-squares slope of log v_c^4(r*(M)) against log M. Each galaxy is
// evaluated at its own crossover radius, where v_c^4 = 4 G M a0 and the
// proportionality to mass is exact.
inline double tully_fisher_slope(const std::vector<double>& masses_kg,
                                 const PhysicalConstants& constants) {
  std::vector<double> distinct;
  for (double m : masses_kg) {
    if (!(m > 0.0))
      throw std::invalid_argument("tully_fisher_slope: masses must be > 0");
    bool seen = false;
    for (double d : distinct) seen = seen || d == m;
    if (!seen) distinct.push_back(m);
  }
  if (distinct.size() < 3)
    throw std::invalid_argument(
        "tully_fisher_slope: need at least 3 distinct masses, got " +
        std::to_string(distinct.size()));

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(masses_kg.size());
  for (double m : masses_kg) {
    GalaxyModel g;
    g.central_mass = m;
    g.test_mass = 1.0;
    g.constants = constants;
    const double x = std::log(m);
    const double y = std::log(vc_fourth_power(crossover_radius(g), g));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw std::invalid_argument("tully_fisher_slope: degenerate mass list");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace mvst
