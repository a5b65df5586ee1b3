#pragma once

#include "complexmath.hpp"

namespace photoem {

// Faddeeva function w(z) = e^{-z^2} erfc(-iz).
// For Im z < 0 the reflection w(z) = 2 e^{-z^2} - w(-z) can overflow; in that
// case `overflow` is set and the returned value is the scaled form
// w(z) e^{z^2}  (finite; caller multiplies by e^{-z^2} if it can).
struct FaddeevaResult {
  cplx value;
  bool overflow = false;
};

FaddeevaResult faddeeva_ex(cplx z);
cplx faddeeva(cplx z);  // plain value (may be inf in the overflow region)

// complex complementary error function, erfc(z) = e^{-z^2} w(iz)
cplx erfc_c(cplx z);

// erf on the e^{+-i pi/4} rays and general complex arguments
cplx erf_c(cplx z);

// Lerch transcendent Phi(z,s,a) = sum_{n>=0} z^n/(n+a)^s, a > 0, z off [1,inf),
// continued by the integral representation for 0.5 < |z|.
cplx lerch_phi(cplx z, double s, double a);

}  // namespace photoem
