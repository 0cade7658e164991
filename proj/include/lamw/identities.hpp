#pragma once

#include "lamw/lambert.hpp"

namespace lamw {

/// Two algebraic routes to the same quantity, with their disagreement.
struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_error = 0.0;  ///< |lhs - rhs|
    double rel_error = 0.0;  ///< abs_error / max(1, |lhs|, |rhs|)
};

/// e^W(z) = z / W(z).  Requires z != 0 (W(0) = 0 would divide by zero).
IdentityCheck exp_identity(double z, Branch branch);

/// ln(W(z)) = ln(z) - W(z).  Principal branch, z > 0 only (both logs real).
IdentityCheck log_difference_identity(double z, Branch branch);

/// n*W(z) = W(n*z^n / W(z)^(n-1)).
///
/// The outer W branch is forced by the value n*W(z): Principal when it is
/// >= -1, Secondary otherwise.
IdentityCheck product_identity(double n, double z, Branch branch);

/// W(x) + W(y) = W(x*y*(1/W(y) + 1/W(x))), for x, y > 0 (Principal).
IdentityCheck sum_identity(double x, double y);

}  // namespace lamw
