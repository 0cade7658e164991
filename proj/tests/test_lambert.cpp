#include <doctest.h>

#include <cmath>
#include <random>

#include "lamw/lambert.hpp"

using namespace lamw;

namespace {

// independent check value: bisection of w*e^w - z on a bracketing interval
double bisect_w(double z, double lo, double hi) {
    auto f = [&](double w) { return w * std::exp(w) - z; };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("eval_w anchor values") {
    CHECK(eval_w(Branch::Principal, 0.0).value == 0.0);
    CHECK(eval_w(Branch::Principal, M_E).value == doctest::Approx(1.0).epsilon(1e-15));
    // branch point: both branches give -1
    const double bp = -std::exp(-1.0);
    CHECK(eval_w(Branch::Principal, bp).value == -1.0);
    CHECK(eval_w(Branch::Secondary, bp).value == -1.0);
    // a caller computing -1/e differently lands within the clamping slack
    CHECK(eval_w(Branch::Principal, -1.0 / M_E).value ==
          doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("eval_w secondary at -0.1 matches bisection") {
    // bisection of w*e^w + 0.1 on [-20, -1]
    const double expected = bisect_w(-0.1, -20.0, -1.0);
    CHECK(expected == doctest::Approx(-3.5771520639572971).epsilon(1e-13));
    const WResult r = eval_w(Branch::Secondary, -0.1);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(r.value <= -1.0);
}

TEST_CASE("eval_w domain errors") {
    CHECK_THROWS_AS(eval_w(Branch::Principal, -0.4), DomainError);
    CHECK_THROWS_AS(eval_w(Branch::Secondary, 0.0), DomainError);
    CHECK_THROWS_AS(eval_w(Branch::Secondary, 0.5), DomainError);
    CHECK_THROWS_AS(eval_w(Branch::Principal, -std::exp(-1.0) - 1e-9), DomainError);
    // within the 1e-14 slack the input is clamped instead
    CHECK_NOTHROW(eval_w(Branch::Principal, -std::exp(-1.0) - 5e-15));
}

TEST_CASE("defining relation over both branch domains") {
    const double bp = -std::exp(-1.0);
    // log-spaced offsets from the branch point
    for (int i = 0; i <= 300; ++i) {
        const double t = std::pow(10.0, -12.0 + 22.0 * i / 300.0);
        const double z = bp + t;
        if (z >= 0.0 || t < 1e-12) {
            const WResult r = eval_w(Branch::Principal, z);
            const double bound = std::fabs(z + std::exp(-1.0)) < 1e-6
                                     ? 1e-7
                                     : 1e-12 * std::max(1.0, std::fabs(z));
            CHECK(r.residual <= bound);
        }
        if (z < 0.0) {
            for (Branch b : {Branch::Principal, Branch::Secondary}) {
                const WResult r = eval_w(b, z);
                const double bound = std::fabs(z + std::exp(-1.0)) < 1e-6
                                         ? 1e-7
                                         : 1e-12 * std::max(1.0, std::fabs(z));
                CHECK(r.residual <= bound);
            }
        }
    }
    // large arguments
    for (double z : {10.0, 1e3, 1e6, 1e10, 1e100, 1e300}) {
        const WResult r = eval_w(Branch::Principal, z);
        CHECK(std::fabs(r.value * std::exp(r.value) - z) <= 1e-12 * z);
    }
    // secondary toward 0-
    for (double z : {-1e-2, -1e-5, -1e-10, -1e-100, -1e-300}) {
        const WResult r = eval_w(Branch::Secondary, z);
        CHECK(r.residual <= 1e-12);
        CHECK(r.value <= -1.0);
    }
}

TEST_CASE("branch ranges and monotonicity") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double bp = -std::exp(-1.0);

    double prev_z = bp, prev_w = -1.0;
    for (int i = 1; i <= 200; ++i) {
        const double z = bp + (4.0 - bp) * i / 200.0;
        const double w = eval_w(Branch::Principal, z).value;
        CHECK(w >= -1.0 - 1e-12);
        CHECK(w > prev_w);  // strictly increasing
        prev_z = z;
        prev_w = w;
    }
    (void)prev_z;

    prev_w = -1.0;
    for (int i = 1; i <= 200; ++i) {
        const double z = bp * (1.0 - static_cast<double>(i) / 201.0);
        const double w = eval_w(Branch::Secondary, z).value;  // z rising to 0-
        CHECK(w <= -1.0 + 1e-12);
        CHECK(w < prev_w);  // strictly decreasing in z
        prev_w = w;
    }

    // round trip on each branch's own range
    for (int i = 0; i < 200; ++i) {
        const double x = -1.0 + 9.0 * u(rng);  // principal range
        const double z = x * std::exp(x);
        const double w = eval_w(Branch::Principal, z).value;
        CHECK(w == doctest::Approx(x).epsilon(5e-8));  // sqrt-limited near -1
        if (std::fabs(x + 1.0) > 1e-2)
            CHECK(w == doctest::Approx(x).epsilon(1e-12));
    }
    for (int i = 0; i < 200; ++i) {
        const double x = -1.0 - 12.0 * u(rng);  // secondary range
        const double z = x * std::exp(x);
        if (!(z < 0.0)) continue;
        const double w = eval_w(Branch::Secondary, z).value;
        if (std::fabs(x + 1.0) > 1e-2)
            CHECK(w == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("eval_w against frozen high-precision references") {
    // reference values computed independently at 30 decimal digits
    struct Ref {
        double z, w;
    };
    const Ref principal[] = {
        {-0.367879441171442, -0.9999999581864317713},
        {-0.36, -0.8060843159708177783},
        {-0.3, -0.489402227180214969},
        {-0.2, -0.2591711018190737451},
        {-0.1, -0.1118325591589629648},
        {-0.001, -0.001001001502671885823},
        {1e-06, 9.999990000014999973e-7},
        {0.1, 0.0912765271608622643},
        {0.5, 0.351733711249195826},
        {1.0, 0.567143290409783873},
        {2.718281828459045, 0.9999999999999999567},
        {10.0, 1.745528002740699383},
        {1000.0, 5.249602852401596227},
        {1000000.0, 11.38335808614005262},
        {10000000000.0, 20.02868541330495078},
        {1e+100, 224.8431064451185015},
    };
    const Ref secondary[] = {
        {-0.367879441171442, -1.000000041813569394},
        {-0.36, -1.222770133978505953},
        {-0.3, -1.781337023421627612},
        {-0.25, -2.153292364110349649},
        {-0.2, -2.542641357773526424},
        {-0.1, -3.577152063957297218},
        {-0.05, -4.499755288523487536},
        {-0.01, -6.472775124394004695},
        {-0.0001, -11.66711453256635442},
        {-1e-08, -21.48818394400979656},
        {-1e-30, -73.3731103138229768},
        {-1e-300, -697.322776295460161},
    };
    for (const Ref& r : principal) {
        const double w = eval_w(Branch::Principal, r.z).value;
        // near the branch point w's conditioning is sqrt-limited
        const double tol = std::fabs(r.z + std::exp(-1.0)) < 1e-6 ? 1e-7 : 2e-15;
        CHECK(std::fabs(w - r.w) <= tol * std::max(1.0, std::fabs(r.w)));
    }
    for (const Ref& r : secondary) {
        const double w = eval_w(Branch::Secondary, r.z).value;
        const double tol = std::fabs(r.z + std::exp(-1.0)) < 1e-6 ? 1e-7 : 2e-15;
        CHECK(std::fabs(w - r.w) <= tol * std::max(1.0, std::fabs(r.w)));
    }
}

TEST_CASE("iteration counts stay small across the domain") {
    const double bp = -std::exp(-1.0);
    int worst = 0;
    for (int i = 0; i <= 2000; ++i) {
        const double t = std::pow(10.0, -14.0 + 25.0 * i / 2000.0);
        const double zp = bp + t;
        if (std::isfinite(zp)) worst = std::max(worst, eval_w(Branch::Principal, zp).iterations);
        if (zp < 0.0) worst = std::max(worst, eval_w(Branch::Secondary, zp).iterations);
    }
    CHECK(worst <= 12);
}

TEST_CASE("residual helper") {
    CHECK(residual(0.0, 0.0) == 0.0);
    CHECK(residual(M_E, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(residual(-std::exp(-1.0), -0.9) > 0.0);
    CHECK(residual(-std::exp(-1.0), -0.9) ==
          doctest::Approx(std::fabs(-0.9 * std::exp(-0.9) + std::exp(-1.0))));
}

TEST_CASE("eval_w_base change of base") {
    // base e reduces to plain W
    CHECK(eval_w_base(Branch::Principal, M_E, 2.0).value ==
          doctest::Approx(eval_w(Branch::Principal, 2.0).value).epsilon(1e-14));
    // 1 * 2^1 = 2
    CHECK(eval_w_base(Branch::Principal, 2.0, 2.0).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    // x * 10^x = 500: bisection of x*10^x - 500 on (0, 3) gives this root
    const double r = eval_w_base(Branch::Principal, 10.0, 500.0).value;
    CHECK(r == doctest::Approx(2.3313605592990783).epsilon(1e-13));
    CHECK(r * std::pow(10.0, r) == doctest::Approx(500.0).epsilon(1e-12));

    CHECK_THROWS_AS(eval_w_base(Branch::Principal, -2.0, 1.0), InvalidParamError);
    CHECK_THROWS_AS(eval_w_base(Branch::Principal, 1.0, 1.0), InvalidParamError);
    // base < 1 flips the sign of ln(base); domain follows eval_w
    const double rb = eval_w_base(Branch::Principal, 0.5, -0.2).value;
    CHECK(rb * std::pow(0.5, rb) == doctest::Approx(-0.2).epsilon(1e-11));
}
