#pragma once

#include <functional>
#include <vector>

namespace lamw {

/// Configuration of the scan-and-bisect root finder.
struct RootSearchConfig {
    double lo = 0.0;
    double hi = 1.0;
    int subdivisions = 4096;
    double bisect_tol = 1e-13;  ///< absolute tolerance on x
    int max_bisect = 200;
};

/// All sign-change roots of f on [cfg.lo, cfg.hi], bisected to bisect_tol,
/// sorted ascending, deduplicated within 10*bisect_tol. Non-finite samples
/// split the scan (a bracket never spans a pole); tangential roots are not
/// guaranteed. Roots whose refined |f| is not small are discarded as pole
/// crossings.
std::vector<double> find_roots(const std::function<double(double)>& f,
                               const RootSearchConfig& cfg);

}  // namespace lamw
