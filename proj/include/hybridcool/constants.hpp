#ifndef HYBRIDCOOL_CONSTANTS_HPP_
#define HYBRIDCOOL_CONSTANTS_HPP_

namespace hybridcool {

// 2019 SI values.
inline constexpr double kHbar = 1.054571817e-34;      // J*s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hybridcool

#endif  // HYBRIDCOOL_CONSTANTS_HPP_
