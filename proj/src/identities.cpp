#include "lamw/identities.hpp"

#include <cmath>

namespace lamw {
namespace {

IdentityCheck make(double lhs, double rhs) {
    IdentityCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_error = std::fabs(lhs - rhs);
    c.rel_error = c.abs_error / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    return c;
}

bool integral(double v) { return std::fabs(v - std::round(v)) < 1e-12; }

double real_pow(double b, double e) {
    if (b > 0.0) return std::pow(b, e);
    if (b == 0.0) return e > 0.0 ? 0.0 : std::nan("");
    if (integral(e)) return std::pow(b, std::round(e));
    return std::nan("");
}

}  // namespace

IdentityCheck exp_identity(double z, Branch branch) {
    if (z == 0.0) throw InvalidParamError("exp_identity: z = 0 divides by W(0)");
    const double w = eval_w(branch, z).value;
    return make(std::exp(w), z / w);
}

IdentityCheck log_difference_identity(double z, Branch branch) {
    if (branch != Branch::Principal)
        throw DomainError("log_difference_identity: W_-1 values are negative, ln not real");
    if (!(z > 0.0))
        throw DomainError("log_difference_identity: requires z > 0");
    const double w = eval_w(Branch::Principal, z).value;
    return make(std::log(w), std::log(z) - w);
}

IdentityCheck product_identity(double n, double z, Branch branch) {
    if (z < 0.0 && !integral(n))
        throw InvalidParamError("product_identity: z^n not real for z < 0 with non-integer n");
    const double w = eval_w(branch, z).value;
    const double lhs = n * w;
    if (n == 1.0) return make(lhs, w);  // identity map: both sides the same call
    const double zn = real_pow(z, n);
    const double wn1 = real_pow(w, n - 1.0);
    if (std::isnan(zn) || std::isnan(wn1) || wn1 == 0.0)
        throw InvalidParamError("product_identity: inner argument not real");
    const double inner = n * zn / wn1;
    const Branch outer = lhs >= -1.0 ? Branch::Principal : Branch::Secondary;
    return make(lhs, eval_w(outer, inner).value);
}

IdentityCheck sum_identity(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("sum_identity: requires x > 0 and y > 0");
    const double wx = eval_w(Branch::Principal, x).value;
    const double wy = eval_w(Branch::Principal, y).value;
    const double inner = x * y * (1.0 / wx + 1.0 / wy);
    return make(wx + wy, eval_w(Branch::Principal, inner).value);
}

}  // namespace lamw
