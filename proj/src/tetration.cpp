#include "lamw/tetration.hpp"

#include <cmath>
#include <string>

#include "lamw/lambert.hpp"

namespace lamw {
namespace {

// tower without the overflow throw, +inf allowed (used for bracketing)
double tower_raw(double base, int height) {
    double v = base;
    for (int i = 1; i < height; ++i) {
        v = std::pow(base, v);
        if (std::isinf(v)) return v;
    }
    return v;
}

double regime_floor() {
    static const double v = std::exp(-std::exp(-1.0));  // e^(-1/e)
    return v;
}

}  // namespace

double tower(double base, int height) {
    if (!(base > 0.0)) throw DomainError("tower: base must be > 0");
    if (height < 1) throw DomainError("tower: height must be >= 1");
    const double v = tower_raw(base, height);
    if (std::isinf(v))
        throw OverflowError("tower: " + std::to_string(base) + " at height " +
                            std::to_string(height) + " overflows");
    return v;
}

double tsr(double x) {
    if (!(x >= regime_floor()))
        throw DomainError("tsr: x must be >= e^(-1/e)");
    return std::exp(eval_w(Branch::Principal, std::log(x)).value);
}

double tnr_domain_min(int n) {
    if (n < 1) throw DomainError("tnr: n must be >= 1");
    if (n == 1) return -HUGE_VAL;
    if (n == 2) return regime_floor();
    return tower_raw(regime_floor(), n);
}

double tnr(double x, int n) {
    if (n < 1) throw DomainError("tnr: n must be >= 1");
    if (n == 1) return x;
    if (n == 2) return tsr(x);
    if (!std::isfinite(x)) throw DomainError("tnr: x must be finite");

    double lo = regime_floor();
    if (x < tower_raw(lo, n) - 1e-12)
        throw DomainError("tnr: x below the principal-regime minimum of the " +
                          std::to_string(n) + "-tower");
    double hi = std::max(2.0, 2.0 * lo);
    int grow = 0;
    while (tower_raw(hi, n) < x) {
        hi *= 2.0;
        if (++grow > 64)
            throw ConvergenceError("tnr: failed to bracket a base for x = " +
                                   std::to_string(x));
    }
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (tower_raw(mid, n) < x)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-16 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace lamw
