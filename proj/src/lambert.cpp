#include "lamw/lambert.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lamw {
namespace {

constexpr int kMaxIter = 60;
constexpr double kStepTol = 1e-15;
constexpr double kBranchSlack = 1e-14;   // absolute slack below -1/e
constexpr double kSeriesWindow = 0.05;   // |z + 1/e| window for the series seed
constexpr double kSeriesOnly = 1e-5;     // p below which the series is final

double neg_inv_e() noexcept {
    static const double v = -std::exp(-1.0);
    return v;
}

// Branch-point expansion: w = -1 + p - p^2/3, p = +/- sqrt(2(e z + 1)).
double series_seed(double z, bool principal) {
    double t = 2.0 * (M_E * z + 1.0);
    double p = std::sqrt(t < 0.0 ? 0.0 : t);
    if (!principal) p = -p;
    return -1.0 + p - p * p / 3.0;
}

double seed_principal(double z) {
    if (z < neg_inv_e() + kSeriesWindow) return series_seed(z, true);
    if (z > M_E) {
        const double l = std::log(z);
        return l - std::log(l);
    }
    if (std::fabs(z) <= 0.5) return z * (1.0 - z);
    return std::log1p(z);  // midrange (0.5, e]
}

double seed_secondary(double z) {
    if (z > neg_inv_e() + kSeriesWindow) {
        const double l = std::log(-z);
        return l - std::log(-l);
    }
    return series_seed(z, false);
}

}  // namespace

double branch_point() noexcept { return neg_inv_e(); }

double residual(double z, double w) noexcept {
    return std::fabs(w * std::exp(w) - z);
}

WResult eval_w(Branch branch, double z) {
    if (std::isnan(z)) throw DomainError("eval_w: z is NaN");
    const bool principal = branch == Branch::Principal;
    const double bp = neg_inv_e();

    if (z < bp) {
        if (z >= bp - kBranchSlack) {
            z = bp;  // caller computed -1/e with rounding
        } else {
            throw DomainError("eval_w: z = " + std::to_string(z) +
                              " below the branch point -1/e");
        }
    }
    if (!principal && z >= 0.0)
        throw DomainError("eval_w: secondary branch requires z in [-1/e, 0)");
    if (principal && std::isinf(z))
        throw DomainError("eval_w: z is not finite");

    if (z == bp) return {-1.0, residual(z, -1.0), 0};
    if (principal && z == 0.0) return {0.0, 0.0, 0};

    // So close to the branch point that the expansion is already exact to
    // working precision; Halley is ill-posed there (f' -> 0).
    {
        const double p = std::sqrt(2.0 * (M_E * z + 1.0));
        if (p <= kSeriesOnly) {
            const double w = series_seed(z, principal);
            return {w, residual(z, w), 0};
        }
    }

    double w = principal ? seed_principal(z) : seed_secondary(z);
    // keep iterates on the correct branch
    const double lim = principal ? -1.0 + 1e-7 : -1.0 - 1e-7;

    int it = 0;
    for (; it < kMaxIter; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        // residual at the evaluation noise floor: w e^w matches z to within
        // rounding, so further steps only chase noise (this is what ends the
        // iteration near the branch point, where f' -> 0 starves the step
        // criterion)
        const double noise =
            4.0 * std::numeric_limits<double>::epsilon() *
            (std::fabs(w * ew) + std::fabs(z));
        if (std::fabs(f) <= noise) break;
        const double f1 = ew * (1.0 + w);
        const double denom = f1 - f * (2.0 + w) / (2.0 * (1.0 + w));
        double dw = f / denom;
        if (!std::isfinite(dw)) dw = f / f1;  // fall back to Newton
        double wn = w - dw;
        wn = principal ? std::max(wn, lim) : std::min(wn, lim);
        const double step = std::fabs(wn - w);
        w = wn;
        if (step <= kStepTol * std::max(1.0, std::fabs(w))) {
            ++it;
            break;
        }
    }
    const double res = residual(z, w);
    if (it >= kMaxIter && res > 1e-10 * std::max(1.0, std::fabs(z)))
        throw ConvergenceError("eval_w: no convergence after " +
                               std::to_string(kMaxIter) + " iterations at z = " +
                               std::to_string(z));
    return {w, res, it};
}

WResult eval_w_base(Branch branch, double base, double y) {
    if (!(base > 0.0) || base == 1.0 || !std::isfinite(base))
        throw InvalidParamError("eval_w_base: base must be positive and != 1");
    const double la = std::log(base);
    WResult r = eval_w(branch, la * y);
    const double x = r.value / la;
    return {x, std::fabs(x * std::pow(base, x) - y), r.iterations};
}

}  // namespace lamw
