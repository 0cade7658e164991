#pragma once

#include <cstdint>

#include "lamw/errors.hpp"

namespace lamw {

/// Real branch selector for the Lambert W function.
///
/// Principal (W0) is real on [-1/e, inf) with W >= -1; Secondary (W-1) is
/// real on [-1/e, 0) with W <= -1. The branches meet at z = -1/e, W = -1.
enum class Branch : std::int8_t { Principal = 0, Secondary = -1 };

/// Result of a W evaluation.
struct WResult {
    double value = 0.0;      ///< w with w*e^w = z
    double residual = 0.0;   ///< |w*e^w - z|
    int iterations = 0;
};

/// -1/e, the branch point (computed once from std::exp).
double branch_point() noexcept;

/// |w*e^w - z|, evaluated directly.
double residual(double z, double w) noexcept;

/// Evaluate the requested real branch of W at z.
///
/// Halley iteration on f(w) = w*e^w - z, at most 60 steps, convergence when
/// |dw| <= 1e-15*max(1,|w|). Inputs within 1e-14 below -1/e are clamped onto
/// the branch point. z = 0 (Principal) and z = -1/e return exactly 0 / -1.
///
/// Throws DomainError outside the branch domain, ConvergenceError if the
/// iteration cap is hit.
WResult eval_w(Branch branch, double z);

/// Solve x * base^x = y via the change-of-base relation
/// W_base(y) = W(ln(base)*y) / ln(base).
///
/// Throws InvalidParamError for base <= 0 or base = 1; DomainError as eval_w.
WResult eval_w_base(Branch branch, double base, double y);

}  // namespace lamw
