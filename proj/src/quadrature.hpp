#pragma once

#include <functional>
#include <vector>

#include "complexmath.hpp"

namespace photoem {

struct GaussRule {
  std::vector<double> x;  // nodes on (-1,1)
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights by Newton iteration; cached per n.
const GaussRule& gauss_legendre(int n);

// integral over [a,b] of a complex integrand with an n-point GL rule
cplx gl_integrate(const std::function<cplx(double)>& f, double a, double b, int n = 32);

// Adaptive Gauss-Kronrod 15(7) with bisection. Throws ToleranceError if the
// requested tolerance is not reached within max_depth.
cplx adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol = 1e-10, double rel_tol = 1e-10,
                        int max_depth = 48);

// integral over (0, inf) by the exp-sinh double-exponential transform;
// integrand may have an integrable power singularity at 0.
cplx expsinh_integrate(const std::function<cplx(double)>& f, double abs_tol = 1e-13,
                       double rel_tol = 1e-13);

// in-place radix-2 FFT, n a power of two; sign=-1 forward (e^{-2pi i jk/n})
void fft_radix2(std::vector<cplx>& a, int sign);

}  // namespace photoem
