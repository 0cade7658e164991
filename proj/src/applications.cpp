#include "lamw/applications.hpp"

#include <cmath>

namespace lamw {
namespace {

void check_diode(const DiodeParams& p) {
    if (!(p.I0 > 0.0)) throw InvalidParamError("diode: I0 must be > 0");
    if (!(p.Iph >= 0.0)) throw InvalidParamError("diode: Iph must be >= 0");
    if (!(p.Rs >= 0.0)) throw InvalidParamError("diode: Rs must be >= 0");
    if (!(p.Rsh > 0.0)) throw InvalidParamError("diode: Rsh must be > 0");
    if (!(p.n > 0.0)) throw InvalidParamError("diode: n must be > 0");
    if (!(p.T > 0.0)) throw InvalidParamError("diode: T must be > 0");
}

void check_film(const FilmParams& p) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw InvalidParamError("film: a and b must be > 0");
}

}  // namespace

double diode_voltage(const DiodeParams& p, double I) {
    check_diode(p);
    const double beta = p.q_over_kB / (p.n * p.T);  // q/(n kB T), 1/V
    const double expo = beta * p.Rsh * (I + p.Iph + p.I0);
    if (!(expo < 709.0))
        throw OverflowError("diode_voltage: exponential argument overflows");
    const double warg = beta * p.I0 * p.Rsh * std::exp(expo);
    const double w = eval_w(Branch::Principal, warg).value;
    return I * (p.Rsh + p.Rs) + p.Rsh * (p.Iph + p.I0) - w / beta;
}

double diode_residual(const DiodeParams& p, double V, double I) {
    check_diode(p);
    const double beta = p.q_over_kB / (p.n * p.T);
    const double U = V - I * p.Rs;
    return p.I0 * (std::exp(beta * U) - 1.0) + U / p.Rsh - p.Iph - I;
}

double film_thickness(const FilmParams& p, double t, Branch branch) {
    check_film(p);
    if (!(t >= 0.0)) throw DomainError("film_thickness: t must be >= 0");
    const double z = -std::exp(-1.0 - p.a * p.a * t / (p.b * p.b));
    return (p.b / p.a) * (1.0 + eval_w(branch, z).value);
}

double film_time(const FilmParams& p, double D) {
    check_film(p);
    const double w = (p.a / p.b) * D - 1.0;
    if (!(w >= -1.0) || !(w < 0.0))
        throw DomainError("film_time: D must satisfy 0 <= (a/b)D < 1");
    return -(p.b * p.b / (p.a * p.a)) * (1.0 + w + std::log(-w));
}

}  // namespace lamw
