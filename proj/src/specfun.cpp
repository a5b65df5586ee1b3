#include "specfun.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"

namespace photoem {

namespace {

// Maclaurin series w(z) = sum (iz)^n / Gamma(n/2 + 1); good for |z| <= 1
cplx w_series(cplx z) {
  cplx iz = cplx(0.0, 1.0) * z;
  cplx term = 1.0;            // (iz)^n
  cplx acc = 0.0;
  for (int n = 0; n < 42; ++n) {
    acc += term / std::tgamma(0.5 * n + 1.0);
    term *= iz;
  }
  return acc;
}

// Laplace continued fraction, reliable for |z| >= 8 with Im z >= 0
cplx w_contfrac(cplx z) {
  // w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
  cplx f = 0.0;
  for (int n = 24; n >= 1; --n) f = (0.5 * n) / (z - f);
  return cplx(0.0, 1.0) / SQRT_PI / (z - f);
}

// pole (trapezoidal) expansion on integer or half-integer grid, Im z >= 0
cplx w_polesum(cplx z) {
  const double h = 0.25;
  const int N = 26;
  double frac = z.real() / h - std::round(z.real() / h);
  bool half_grid = std::abs(frac) < 0.25;  // keep nodes away from Re z
  cplx sum = 0.0;
  for (int n = -N; n <= N; ++n) {
    double t = half_grid ? (n + 0.5) * h : n * h;
    sum += std::exp(-t * t) / (z - t);
  }
  sum *= cplx(0.0, h / PI);
  cplx ez2 = std::exp(-z * z);
  cplx q = std::exp(cplx(0.0, -TWO_PI / h) * z);
  cplx corr = half_grid ? 2.0 * ez2 / (1.0 + q) : 2.0 * ez2 / (1.0 - q);
  return sum + corr;
}

cplx w_upper(cplx z) {
  double az = std::abs(z);
  if (az <= 1.0) return w_series(z);
  if (az >= 8.0) return w_contfrac(z);
  return w_polesum(z);
}

}  // namespace

FaddeevaResult faddeeva_ex(cplx z) {
  FaddeevaResult r;
  if (z.imag() >= 0.0) {
    r.value = w_upper(z);
    return r;
  }
  // reflection: w(z) = 2 e^{-z^2} - w(-z), with -z in the upper half plane
  cplx wm = w_upper(-z);
  double re_mz2 = z.imag() * z.imag() - z.real() * z.real();  // Re(-z^2)
  if (re_mz2 > 700.0) {
    r.overflow = true;
    r.value = 2.0 - std::exp(z * z) * wm;  // = w(z) e^{z^2}
    return r;
  }
  r.value = 2.0 * std::exp(-z * z) - wm;
  return r;
}

cplx faddeeva(cplx z) {
  FaddeevaResult r = faddeeva_ex(z);
  if (r.overflow) {
    cplx scale = std::exp(-z * z);  // inf overflow intentional
    return r.value * scale;
  }
  return r.value;
}

cplx erfc_c(cplx z) {
  // e^{-z^2} w(iz); when w(iz) needs the scaled form the product is finite
  FaddeevaResult r = faddeeva_ex(cplx(0.0, 1.0) * z);
  if (r.overflow) return r.value;  // e^{-z^2} e^{+z^2} w = w-scaled already
  return std::exp(-z * z) * r.value;
}

cplx erf_c(cplx z) { return 1.0 - erfc_c(z); }

cplx lerch_phi(cplx z, double s, double a) {
  if (!(a > 0.0)) throw DomainError("lerch_phi: a must be positive");
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw DomainError("lerch_phi: z on the cut [1,inf)");
  double az = std::abs(z);
  if (az <= 0.5) {
    cplx acc = 0.0;
    cplx zn = 1.0;
    for (int n = 0; n < 200; ++n) {
      cplx term = zn * std::pow(n + a, -s);
      acc += term;
      if (std::abs(term) < 1e-17 * std::abs(acc) && n > 4) break;
      zn *= z;
    }
    return acc;
  }
  if (az >= 1.0 + 1e-12)
    throw DomainError("lerch_phi: |z| > 1 not supported by the integral path");
  // integral representation: (1/Gamma(s)) int_0^inf p^{s-1} e^{-ap}/(1-z e^{-p}) dp
  cplx val = expsinh_integrate(
      [&](double p) -> cplx {
        double ep = std::exp(-p);
        return std::pow(p, s - 1.0) * std::exp(-a * p) / (1.0 - z * ep);
      },
      1e-14, 1e-13);
  return val / std::tgamma(s);
}

}  // namespace photoem
