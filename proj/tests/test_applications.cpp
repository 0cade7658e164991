#include <doctest.h>

#include <cmath>

#include "lamw/applications.hpp"
#include "lamw/oracle.hpp"

using namespace lamw;

TEST_CASE("diode voltage satisfies the implicit equation") {
    DiodeParams p;
    p.I0 = 1e-9;
    p.Iph = 0.1;
    p.Rs = 0.1;
    p.Rsh = 50.0;
    p.n = 1.4;
    p.T = 300.0;
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            const double I = 0.12 * i / 4.0;
            p.T = 280.0 + 80.0 * j / 4.0;
            const double V = diode_voltage(p, I);
            CHECK(std::fabs(diode_residual(p, V, I)) <=
                  1e-9 * std::max(1.0, std::fabs(I)));
        }
    }
}

TEST_CASE("diode voltage matches a direct bisection solve") {
    DiodeParams p;
    p.I0 = 1e-9;
    p.Iph = 0.0;
    p.Rs = 0.1;
    p.Rsh = 1e6;
    p.n = 1.5;
    p.T = 300.0;
    const double I = 0.0;
    RootSearchConfig cfg;
    cfg.lo = -5.0;
    cfg.hi = 5.0;
    const auto roots =
        find_roots([&](double V) { return diode_residual(p, V, I); }, cfg);
    REQUIRE(roots.size() == 1);
    CHECK(diode_voltage(p, I) == doctest::Approx(roots[0]).epsilon(1e-9));
}

TEST_CASE("diode overflow guard") {
    DiodeParams p;
    p.I0 = 1e-9;
    p.Iph = 1.0;
    p.Rsh = 1e6;  // beta*Rsh*(I+Iph+I0) blows past exp range
    p.n = 1.0;
    CHECK_THROWS_AS(diode_voltage(p, 1.0), OverflowError);
}

TEST_CASE("film thickness anchors and limits") {
    FilmParams p{1.0, 1.0};
    CHECK(film_thickness(p, 0.0, Branch::Principal) == 0.0);  // W(-1/e) = -1
    // t -> inf: D -> b/a on the principal branch
    CHECK(std::fabs(film_thickness(p, 1e6, Branch::Principal) - 1.0) <= 1e-4);
    CHECK_THROWS_AS(film_thickness(p, -0.5, Branch::Principal), DomainError);
    // secondary branch gives the unphysical partner (1 + W <= 0, so D <= 0)
    CHECK(film_thickness(p, 1.0, Branch::Secondary) < 0.0);
    CHECK(film_thickness(p, 0.0, Branch::Secondary) == 0.0);  // branch point

    FilmParams q{2.0, 3.0};
    CHECK(film_thickness(q, 0.0, Branch::Principal) == 0.0);
    // monotone nondecreasing on a grid
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double D = film_thickness(q, 0.2 * i, Branch::Principal);
        CHECK(D >= prev);
        prev = D;
    }
}

TEST_CASE("film time round trips") {
    FilmParams p{1.0, 1.0};
    CHECK(std::fabs(film_time(p, 0.0)) <= 1e-12);  // t = 0 inverse
    for (double t : {0.5, 1.0, 3.0, 7.5, 12.0}) {
        const double D = film_thickness(p, t, Branch::Principal);
        CHECK(film_time(p, D) == doctest::Approx(t).epsilon(1e-9));
    }
    FilmParams q{2.0, 3.0};
    for (double t : {0.5, 2.0, 10.0, 25.0}) {
        const double D = film_thickness(q, t, Branch::Principal);
        CHECK(film_time(q, D) == doctest::Approx(t).epsilon(1e-9));
    }
    // cross-check: film_time(film_thickness(2)) with a=2,b=3 reproduces 2
    CHECK(film_time(q, film_thickness(q, 2.0, Branch::Principal)) ==
          doctest::Approx(2.0).epsilon(1e-11));
    // D at/above the saturation limit is out of range
    CHECK_THROWS_AS(film_time(p, 1.0), DomainError);
    CHECK_THROWS_AS(film_time(p, -0.1), DomainError);
}

TEST_CASE("film saturation: D loses t beyond ~36 (documented limitation)") {
    // the W argument underflows against 1 ulp of D near b/a; by t = 50 the
    // thickness is bit-identical to the t -> inf limit, so no inverse can
    // recover t from D in double precision
    FilmParams p{1.0, 1.0};
    CHECK(film_thickness(p, 50.0, Branch::Principal) ==
          film_thickness(p, 60.0, Branch::Principal));
}
