#pragma once

#include "lamw/errors.hpp"

namespace lamw {

/// Right-associated power tower: tower(a,1) = a, tower(a,n) = a^tower(a,n-1).
/// base > 0, height >= 1. Throws OverflowError if the result is not
/// representable.
double tower(double base, int height);

/// Tetra square root: the r >= 1/e with r^r = x, via exp(W0(ln x)).
/// Defined for x >= e^(-1/e).
double tsr(double x);

/// nth tetra root (principal regime): the base b >= e^(-1/e) with
/// tower(b, n) = x. n = 1 is the identity, n = 2 delegates to tsr, n >= 3
/// uses bracketed bisection with a geometrically grown upper bound.
double tnr(double x, int n);

/// Smallest x invertible by tnr(x, n): tower(e^(-1/e), n).
double tnr_domain_min(int n);

}  // namespace lamw
