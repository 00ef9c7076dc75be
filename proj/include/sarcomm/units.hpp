// units.hpp -- physical constants and dB conversions shared across the toolkit.
#pragma once

#include <cmath>

namespace sarcomm {

// CODATA / SI exact values, fixed so golden tests are bit-stable.
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kPi = 3.14159265358979323846;

// Power convention throughout: 10*log10.
inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
inline double linear_from_db(double x) { return std::pow(10.0, x / 10.0); }

// Tail probability of a standard normal, Q(x) = 0.5 * erfc(x / sqrt(2)).
// erfc keeps full precision out to x = 8 and beyond, which leaves ample
// headroom below the 1e-6 BER floor the reports go down to.
inline double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace sarcomm
