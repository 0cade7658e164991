#include "lamw/polar.hpp"

#include <cmath>

namespace lamw {
namespace {

constexpr double kTrigEps = 1e-12;
constexpr double kPolarResidual = 1e-9;

void add_radius(SolutionSet& out, double r, double residual, Branch br) {
    Solution s;
    s.x = r;
    s.residual = residual;
    s.branches = {br};
    out.solutions.push_back(std::move(s));
}

void check_spec(const RotationSpec& spec) {
    if (spec.A == 0.0 || spec.B == 0.0)
        throw InvalidParamError("rotation: A and B must be nonzero");
    if (std::fabs(std::sin(spec.phi)) < kTrigEps ||
        std::fabs(std::cos(spec.phi)) < kTrigEps)
        throw DomainError(
            "rotation: phi = n*pi/2 is outside the general closed form");
}

}  // namespace

const char* curve_name(CurveKind k) {
    switch (k) {
        case CurveKind::Log: return "log";
        case CurveKind::Exp: return "exp";
        case CurveKind::LambertW: return "w";
        case CurveKind::XExpX: return "xexpx";
    }
    return "?";
}

SolutionSet polar_radius(CurveKind kind, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    SolutionSet out;

    switch (kind) {
        case CurveKind::Log: {
            if (std::fabs(s) < kTrigEps)
                throw DomainError("polar log: sin(theta) = 0");
            if (std::fabs(c) < kTrigEps)
                throw DomainError("polar log: tan(theta) undefined");
            const double t = std::tan(theta);
            if (-t < branch_point())
                throw DomainError("polar log: -tan(theta) below -1/e");
            for (Branch br : {Branch::Principal, Branch::Secondary}) {
                if (br == Branch::Secondary && !(-t < 0.0)) continue;
                const double w = eval_w(br, -t).value;
                const double r = w / (-s);
                const double x = r * c;
                if (!(x > 0.0)) continue;
                const double res = std::fabs(r * s - std::log(x));
                if (res <= kPolarResidual) add_radius(out, r, res, br);
            }
            break;
        }
        case CurveKind::Exp: {
            if (std::fabs(c) < kTrigEps) {
                // theta -> pi/2: W(-cot)/( -cos) -> 1/sin(theta)
                if (std::fabs(s) < kTrigEps)
                    throw DomainError("polar exp: degenerate angle");
                const double r = 1.0 / s;
                add_radius(out, r, std::fabs(r * s - 1.0), Branch::Principal);
                break;
            }
            const double ct = c / s;
            if (std::fabs(s) < kTrigEps)
                throw DomainError("polar exp: cot(theta) undefined");
            if (-ct < branch_point())
                throw DomainError("polar exp: -cot(theta) below -1/e");
            for (Branch br : {Branch::Principal, Branch::Secondary}) {
                if (br == Branch::Secondary && !(-ct < 0.0)) continue;
                const double w = eval_w(br, -ct).value;
                const double r = w / (-c);
                const double res = std::fabs(r * s - std::exp(r * c));
                if (res <= kPolarResidual) add_radius(out, r, res, br);
            }
            break;
        }
        case CurveKind::LambertW: {
            if (std::fabs(s) < kTrigEps)
                throw DomainError("polar w: sin(theta) = 0");
            const double ct = c / s;
            if (!(ct > 0.0))
                throw DomainError("polar w: cot(theta) must be positive");
            if (std::fabs(ct - 1.0) < kTrigEps)
                throw DomainError("polar w: cot(theta) = 1 is excluded");
            const double r = std::log(ct) / s;
            const double wv = r * s;  // the W value at this point
            const double res = std::fabs(wv * std::exp(wv) - r * c);
            if (res <= kPolarResidual)
                add_radius(out, r, res,
                           wv >= -1.0 ? Branch::Principal : Branch::Secondary);
            break;
        }
        case CurveKind::XExpX: {
            if (std::fabs(c) < kTrigEps)
                throw DomainError("polar xexpx: cos(theta) = 0");
            const double t = std::tan(theta);
            if (!(t > 0.0))
                throw DomainError("polar xexpx: tan(theta) must be positive");
            const double r = std::log(t) / c;
            const double res = std::fabs(r * s - r * c * std::exp(r * c));
            if (res <= kPolarResidual) add_radius(out, r, res, Branch::Principal);
            break;
        }
    }
    if (out.empty())
        throw DomainError("polar: no real radius at this angle");
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const Solution& l, const Solution& r) { return l.x < r.x; });
    return out;
}

double rotate_exp(const RotationSpec& spec, double x, Branch branch) {
    check_spec(spec);
    const double tn = std::tan(spec.phi), ct = 1.0 / tn;
    const double sec = 1.0 / std::cos(spec.phi), csc = 1.0 / std::sin(spec.phi);
    const double q = -spec.A * spec.B * tn * std::exp(spec.B * sec * x);
    const double w = eval_w(branch, q).value;
    const double argl = -(ct / (spec.A * spec.B)) * w;
    if (!(argl > 0.0))
        throw DomainError("rotate_exp: log argument not positive");
    return (csc / spec.B) * std::log(argl) - ct * x;
}

double rotate_log(const RotationSpec& spec, double x, Branch branch) {
    check_spec(spec);
    const double tn = std::tan(spec.phi), ct = 1.0 / tn;
    const double sec = 1.0 / std::cos(spec.phi), csc = 1.0 / std::sin(spec.phi);
    const double q = -spec.A * spec.B * ct * std::exp(-spec.B * csc * x);
    const double w = eval_w(branch, q).value;
    const double argl = -(tn / (spec.A * spec.B)) * w;
    if (!(argl > 0.0))
        throw DomainError("rotate_log: log argument not positive");
    return (sec / spec.B) * std::log(argl) + tn * x;
}

double rotated_exp_quarter(double x, Branch branch) {
    const double q = -std::exp(std::sqrt(2.0) * x);
    const double w = eval_w(branch, q).value;
    return std::sqrt(2.0) * std::log(-w) - x;
}

namespace {
double qt_eval0(double x) { return std::exp(x); }
double qt_eval1(double x) { return x > 0.0 ? -std::log(x) : std::nan(""); }
double qt_eval2(double x) { return -std::exp(-x); }
double qt_eval3(double x) { return x < 0.0 ? std::log(-x) : std::nan(""); }
}  // namespace

QuarterTurnForm rotate_special(CurveKind kind, int n_quarter_turns) {
    if (kind != CurveKind::Exp)
        throw InvalidParamError("rotate_special: only the exp curve is supported");
    int n = n_quarter_turns % 4;
    if (n < 0) n += 4;
    switch (n) {
        case 0: return {"y = e^x", qt_eval0};
        case 1: return {"y = -ln(x)", qt_eval1};
        case 2: return {"y = -e^(-x)", qt_eval2};
        default: return {"y = ln(-x)", qt_eval3};
    }
}

std::vector<CurvePoint> sample_polar(CurveKind kind, double theta_min,
                                     double theta_max, int steps) {
    if (!(theta_min < theta_max) || steps < 2)
        throw InvalidParamError("sample_polar: need theta_min < theta_max, steps >= 2");
    std::vector<CurvePoint> out;
    for (int i = 0; i < steps; ++i) {
        const double th =
            theta_min + (theta_max - theta_min) * i / (steps - 1);
        try {
            for (const auto& s : polar_radius(kind, th).solutions)
                out.push_back({th, s.x, s.branches.front()});
        } catch (const DomainError&) {
            // angle outside the curve's angular domain
        }
    }
    return out;
}

std::vector<CurvePoint> sample_rotation(CurveKind kind, const RotationSpec& spec,
                                        double x_min, double x_max, int steps) {
    if (kind != CurveKind::Exp && kind != CurveKind::Log)
        throw InvalidParamError("sample_rotation: curve must be exp or log");
    if (!(x_min < x_max) || steps < 2)
        throw InvalidParamError("sample_rotation: need x_min < x_max, steps >= 2");
    std::vector<CurvePoint> out;
    for (int i = 0; i < steps; ++i) {
        const double x = x_min + (x_max - x_min) * i / (steps - 1);
        for (Branch br : {Branch::Principal, Branch::Secondary}) {
            try {
                const double y = kind == CurveKind::Exp
                                     ? rotate_exp(spec, x, br)
                                     : rotate_log(spec, x, br);
                out.push_back({x, y, br});
            } catch (const Error&) {
                // branch not defined at this x
            }
        }
    }
    return out;
}

}  // namespace lamw
