#pragma once

#include <vector>

#include "complexmath.hpp"
#include "params.hpp"

namespace photoem {

// phase F0(s,t) with its s-derivative; F0(t,t) = 0
struct PhaseEval {
  double f0;
  double df0_ds;
};

PhaseEval f0(double s, double t, const PhysParams& p);

// full phase F(x,s,t); F(0,s,t) == F0(s,t)
double f_phase(double x, double s, double t, const PhysParams& p);

// F(x,s,t) - x^2/(2(t-s)), analytic in s including s = t (vanishes there)
double f_phase_reduced(double x, double s, double t, const PhysParams& p);

// G(s,t) = d/ds[(e^{iF0}-1)/sqrt(t-s)] = G1(s,t)/sqrt(t-s) with analytic G1
cplx g_kernel(double s, double t, const PhysParams& p);
cplx g1_smooth(double s, double t, const PhysParams& p);  // G1

// bracket sin(ws) + (cos wt - cos ws)/(w(t-s)), vanishing at s = t
double g2_bracket(double s, double t, const PhysParams& p);

struct KernelSplit {
  cplx g1;  // smooth part: (1/2pi) int_s^t G(u,t)/sqrt(u-s) du
  cplx g2;  // coefficient of (t-s)^{-1/2}
};

// pointwise split kernel; g1 by the alpha-substituted quadrature (panelled
// when the phase range is large), g2 in closed form
KernelSplit kernel_split(double s, double t, const PhysParams& p);

cplx g2_coeff(double s, double t, const PhysParams& p);

// g1 Taylor series in (t-s) around the diagonal (small spans only)
cplx g1_taylor(double s, double t, const PhysParams& p, int terms = 8);

// Tables of G1 and g2 on the uniform grid, keyed by (s mod T, t-s):
// value(j, n), s = j dt, t = n dt. For E = 0 the phase dimension collapses.
class KernelCache {
 public:
  KernelCache(const PhysParams& p, double dt, int steps_per_period, int max_lag);
  cplx G1(int j, int n) const { return g1_[idx(j, n)]; }
  cplx g2(int j, int n) const { return g2_[idx(j, n)]; }
  int max_lag() const { return max_lag_; }

 private:
  std::size_t idx(int j, int n) const {
    int r = pmod_ > 1 ? j % pmod_ : 0;
    return static_cast<std::size_t>(r) * (max_lag_ + 1) + (n - j);
  }
  int pmod_;
  int max_lag_;
  std::vector<cplx> g1_, g2_;
};

}  // namespace photoem
