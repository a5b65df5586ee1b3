#pragma once

#include <cmath>
#include <complex>

namespace photoem {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846;
inline constexpr double TWO_PI = 6.28318530717958647692;
inline const double SQRT_PI = std::sqrt(PI);
inline const double SQRT_TWO_PI = std::sqrt(TWO_PI);

// exp(i pi/4) and friends show up in every Fresnel-type prefactor
inline const cplx EIPI4{std::sqrt(0.5), std::sqrt(0.5)};
inline const cplx EMIPI4{std::sqrt(0.5), -std::sqrt(0.5)};

inline cplx expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

// sin(x)/x, stable through x = 0
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

// (e^z - 1) with full relative accuracy for small |z|
inline cplx expm1c(cplx z) {
  if (std::abs(z) > 1e-3) return std::exp(z) - 1.0;
  // z (1 + z/2 (1 + z/3 (1 + z/4 (1 + z/5))))
  return z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0))));
}

// (e^z - 1)/z, entire
inline cplx expm1_over(cplx z) {
  if (std::abs(z) < 1e-12) return 1.0;
  return expm1c(z) / z;
}

}  // namespace photoem
