#pragma once

#include "lamw/lambert.hpp"

namespace lamw {

/// Single-diode solar cell model constants.
struct DiodeParams {
    double I0 = 1e-9;    ///< reverse saturation current [A], > 0
    double Iph = 0.0;    ///< photocurrent [A], >= 0
    double Rs = 0.0;     ///< series resistance [ohm], >= 0
    double Rsh = 1.0;    ///< shunt resistance [ohm], > 0
    double n = 1.0;      ///< ideality factor, > 0
    double T = 300.0;    ///< temperature [K], > 0
    double q_over_kB = 11604.518;  ///< elementary charge / Boltzmann [K/V]
};

/// Film growth constants (reaction / diffusion).
struct FilmParams {
    double a = 1.0;  ///< reaction constant, > 0
    double b = 1.0;  ///< diffusion constant, > 0
};

/// Explicit terminal voltage of the implicit diode equation
///   I = I0 (e^(q(V - I Rs)/(n kB T)) - 1) + (V - I Rs)/Rsh - Iph
/// via V = I(Rsh+Rs) + Rsh(Iph+I0) - (n kB T/q) W((q I0 Rsh/(n kB T))
///         e^(q Rsh (I+Iph+I0)/(n kB T))).
/// Throws OverflowError when the exponential argument is not representable.
double diode_voltage(const DiodeParams& p, double I);

/// Residual of the implicit diode equation at (V, I); the oracle for
/// diode_voltage.
double diode_residual(const DiodeParams& p, double V, double I);

/// Film thickness D(t) = (b/a)(1 + W(-e^(-1 - a^2 t/b^2))), t >= 0.
/// Principal branch is the physical solution growing from 0 toward b/a.
double film_thickness(const FilmParams& p, double t, Branch branch);

/// Time at which the film reaches thickness D on the physical branch:
///   t = -(b^2/a^2)(1 + w + ln(-w)),  w = (a/b)D - 1,
/// derived from ln(-w e^w) = -1 - a^2 t/b^2. The catalog's printed final
/// line fails gate validation (see the provenance table). Requires
/// 0 <= (a/b)D < 1.
double film_time(const FilmParams& p, double D);

}  // namespace lamw
