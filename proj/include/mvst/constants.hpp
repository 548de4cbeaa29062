#pragma once

#include <stdexcept>

namespace mvst {

inline constexpr double kMetersPerMegaparsec = 3.0857e22;
inline constexpr double kSecondsPerJulianYear = 3.15576e7;

// SI constants plus the Hubble-derived scales. a0 = c H0 and tau = 1/H0 are
// accessors so the coupling can never drift out of sync with H0.
struct PhysicalConstants {
  double G = 6.674e-11;             // m^3 kg^-1 s^-2
  double c = 2.99792458e8;          // m/s
  double H0 = 70.0e3 / kMetersPerMegaparsec;  // s^-1, from 70 km/s/Mpc
  double M_sun = 1.98892e30;        // kg
  double light_year = 9.4607304725808e15;  // m

  double a0() const { return c * H0; }   // m/s^2
  double tau() const { return 1.0 / H0; }  // s

  static PhysicalConstants with_h0_kms_mpc(double h0_kms_mpc) {
    if (h0_kms_mpc < 0.0)
      throw std::invalid_argument("PhysicalConstants: H0 must be >= 0");
    PhysicalConstants k;
    k.H0 = h0_kms_mpc * 1.0e3 / kMetersPerMegaparsec;
    return k;
  }
};

}  // namespace mvst
