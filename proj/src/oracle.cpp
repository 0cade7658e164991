#include "lamw/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace lamw {
namespace {

double eval_or_nan(const std::function<double(double)>& f, double x) {
    double v;
    try {
        v = f(x);
    } catch (...) {
        return std::nan("");
    }
    return std::isfinite(v) ? v : std::nan("");
}

}  // namespace

std::vector<double> find_roots(const std::function<double(double)>& f,
                               const RootSearchConfig& cfg) {
    std::vector<double> roots;
    if (!(cfg.lo < cfg.hi) || cfg.subdivisions < 2) return roots;

    const double h = (cfg.hi - cfg.lo) / cfg.subdivisions;
    double xa = cfg.lo;
    double fa = eval_or_nan(f, xa);
    for (int i = 1; i <= cfg.subdivisions; ++i) {
        const double xb = (i == cfg.subdivisions) ? cfg.hi : cfg.lo + i * h;
        const double fb = eval_or_nan(f, xb);
        if (!std::isnan(fa) && fa == 0.0) roots.push_back(xa);
        if (!std::isnan(fa) && !std::isnan(fb) && fa * fb < 0.0) {
            double lo = xa, hi = xb, flo = fa;
            for (int k = 0; k < cfg.max_bisect; ++k) {
                const double mid = 0.5 * (lo + hi);
                const double fm = eval_or_nan(f, mid);
                if (std::isnan(fm)) break;  // pole inside; abandon bracket
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if (hi - lo <= cfg.bisect_tol) break;
            }
            const double r = 0.5 * (lo + hi);
            // reject pole crossings: near a genuine root |f| collapses with
            // the bracket, near a pole it blows up
            const double fr = eval_or_nan(f, r);
            const double scale =
                std::max({1.0, std::fabs(fa), std::fabs(fb)});
            if (!std::isnan(fr) && std::fabs(fr) <= scale) roots.push_back(r);
        }
        xa = xb;
        fa = fb;
    }
    if (!std::isnan(fa) && fa == 0.0) roots.push_back(xa);

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 10.0 * cfg.bisect_tol)
            out.push_back(r);
    return out;
}

}  // namespace lamw
