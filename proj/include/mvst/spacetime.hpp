#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "mvst/errors.hpp"
#include "mvst/multivector.hpp"

// Spacetime events X = x + i c t with space and time both three-vectors,
// Lorentz rotors acting by two-sided sandwich products, and the causal
// null-separation construction.

namespace mvst {

inline constexpr double kOrthogonalityTolerance = 1e-9;

struct SpacetimeEvent {
  Vector3 space;        // meters
  Vector3 time;         // seconds
  double light_speed;   // meters/second

  Multivector to_multivector() const {
    return Multivector::from_vector(space) +
           Multivector::from_bivector(light_speed * time);
  }
};

// Validates the orthogonality constraint x.t = 0 before admitting the event.
inline SpacetimeEvent make_event(const Vector3& space_m,
                                 const Vector3& time_s, double light_speed) {
  const double nx = space_m.norm();
  const double nt = time_s.norm();
  if (nx > 0.0 && nt > 0.0) {
    const double violation = std::abs(dot(space_m, time_s)) / (nx * nt);
    if (violation > kOrthogonalityTolerance)
      throw std::invalid_argument(
          "make_event: space and time vectors must be orthogonal; "
          "|x.t|/(|x||t|) = " +
          std::to_string(violation));
  }
  return {space_m, time_s, light_speed};
}

// x^2 - c^2 t^2, taken as the scalar grade of the full multivector square.
// The bivector grade of X^2 is proportional to x.t and vanishes under the
// orthogonality constraint.
inline double interval_squared(const SpacetimeEvent& event) {
  const Multivector x = event.to_multivector();
  return (x * x).scalar_part();
}

// L = exp(phi vhat) exp(i what theta); applied with half-angle factors.
struct LorentzOperator {
  Vector3 boost_direction{1.0, 0.0, 0.0};
  double rapidity = 0.0;
  Vector3 rotation_axis{0.0, 0.0, 1.0};
  double rotation_angle = 0.0;

  // Pre- and post-factors of the sandwich
  // X' = e^{-i what theta/2} e^{-vhat phi/2} X e^{vhat phi/2} e^{i what theta/2}.
  std::pair<Multivector, Multivector> sandwich_halves() const {
    const Multivector pre = exp_bivector(rotation_axis, -rotation_angle / 2.0) *
                            exp_vector(boost_direction, -rapidity / 2.0);
    const Multivector post = exp_vector(boost_direction, rapidity / 2.0) *
                             exp_bivector(rotation_axis, rotation_angle / 2.0);
    return {pre, post};
  }

  // The full operator exp(phi vhat) exp(i what theta); satisfies L L~ = 1.
  Multivector to_multivector() const {
    return exp_vector(boost_direction, rapidity) *
           exp_bivector(rotation_axis, rotation_angle);
  }
};

// Sandwich transform with explicit rotor halves; the result must again be a
// pure space+time value. Grades 0 and 3 of the product are checked small and
// then discarded, rather than dropped silently.
inline SpacetimeEvent lorentz_transform(const SpacetimeEvent& event,
                                        const Multivector& pre,
                                        const Multivector& post) {
  const Multivector transformed = pre * event.to_multivector() * post;
  const double scale = transformed.max_abs_coeff();
  const double leakage = std::max(std::abs(transformed.scalar_part()),
                                  std::abs(transformed.pseudoscalar_part()));
  if (leakage > 1e-10 * std::max(1.0, scale))
    throw NumericalError(
        "lorentz_transform: transformed event leaked into grades 0/3 "
        "(magnitude " +
        std::to_string(leakage) + ")");
  return SpacetimeEvent{transformed.vector_part(),
                        transformed.bivector_part() / event.light_speed,
                        event.light_speed};
}

inline SpacetimeEvent lorentz_transform(const SpacetimeEvent& event,
                                        const LorentzOperator& op) {
  const auto [pre, post] = op.sandwich_halves();
  return lorentz_transform(event, pre, post);
}

// phi = artanh(v/c).
inline double rapidity_from_velocity(double speed, double light_speed) {
  if (std::abs(speed) >= light_speed)
    throw std::invalid_argument(
        "rapidity_from_velocity: |v| must be below c, got v/c = " +
        std::to_string(speed / light_speed));
  return std::atanh(speed / light_speed);
}

// Null separation with time measured in meters: time vector (0, s, t)
// orthogonal to the line-of-sight displacement d e1.
struct CausalSeparation {
  double distance = 0.0;         // meters
  double time_component_s = 0.0; // meters
  double time_component_t = 0.0; // meters

  SpacetimeEvent to_event() const {
    return make_event({distance, 0.0, 0.0},
                      {0.0, time_component_s, time_component_t}, 1.0);
  }

  // (dS)^2 = d^2 - s^2 - t^2.
  double interval() const { return interval_squared(to_event()); }
};

// Solves (dS)^2 = d^2 - s^2 = 0 for the s time component. Instantaneous
// viewing requires t = 0, which pins s = d; the general split between the
// two time components is underdetermined, so only that mode is offered.
inline CausalSeparation causal_null_time(double distance_m,
                                         bool instantaneous = true) {
  if (distance_m < 0.0)
    throw std::invalid_argument("causal_null_time: distance must be >= 0");
  if (!instantaneous)
    throw std::invalid_argument(
        "causal_null_time: only the instantaneous (t = 0) mode is defined");
  return CausalSeparation{distance_m, distance_m, 0.0};
}

}  // namespace mvst
