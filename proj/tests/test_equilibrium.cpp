#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcheb/branch.hpp"
#include "dcheb/equilibrium.hpp"
#include "dcheb/quadrature.hpp"
#include "support.hpp"

using namespace dcheb;

TEST_CASE_FIXTURE(dt::P256, "turning points") {
    auto [a, b] = endpoints(Real(3) / 5);
    CHECK(dt::close(a, Real(1) / 10, 1e-70));
    CHECK(dt::close(b, Real(9) / 10, 1e-70));
    auto [a2, b2] = endpoints(Real(1) / 2);
    CHECK(dt::close(a2, dt::R("0.0669872981077806766181384146235319082643"), 1e-38));
    CHECK(dt::close(a2 + b2, Real(1), 1e-70));
    CHECK(dt::close(a2 * b2, Real(1) / 16, 1e-70));
    auto [a3, b3] = endpoints(dt::R("0.999999"));
    CHECK(abs(a3 - Real(1) / 2) < Real(2) / 1000);
    CHECK(abs(b3 - Real(1) / 2) < Real(2) / 1000);
    CHECK_THROWS_AS(endpoints(Real(0)), std::domain_error);
    CHECK_THROWS_AS(endpoints(Real(1)), std::domain_error);
    CHECK_THROWS_AS(endpoints(Real(-1) / 2), std::domain_error);
}

TEST_CASE_FIXTURE(dt::P256, "density pinned values and continuity") {
    Real c = Real(3) / 5;
    CHECK(dt::close(density(Real(1) / 20, c), Real(5) / 3, 1e-70));  // constrained zone
    CHECK(dt::close(density(Real(19) / 20, c), Real(5) / 3, 1e-70));
    Real mid = density(Real(1) / 2, c);
    CHECK(dt::close(mid, 10 / (3 * const_pi()) * asin(Real(3) / 5), 1e-70));
    CHECK(std::abs(static_cast<double>(mid) - 0.682784) < 1e-5);
    auto [a, b] = endpoints(c);
    CHECK(dt::close(density(a + Real(1e-30), c), Real(5) / 3, 1e-12));
    CHECK(dt::close(density(b - Real(1e-30), c), Real(5) / 3, 1e-12));
    CHECK_THROWS_AS(density(Real(-1) / 10, c), std::domain_error);
    CHECK_THROWS_AS(density(Real(11) / 10, c), std::domain_error);
}

TEST_CASE_FIXTURE(dt::P256, "density symmetry and ceiling") {
    dt::Rng rng;
    for (double cd : {0.3, 0.5, 0.7}) {
        Real c(cd);
        auto [a, b] = endpoints(c);
        for (int i = 0; i < 100; ++i) {
            Real x(rng.uni(0, 1));
            CHECK(abs(density(x, c) - density(1 - x, c)) < Real(1e-40));
            Real mu = density(x, c);
            CHECK(mu >= 0);
            CHECK(mu <= 1 / c + Real(1e-40));
            bool constrained = x <= a || x >= b;
            if (constrained) CHECK(mu == 1 / c);
        }
    }
}

TEST_CASE_FIXTURE(dt::P256, "density integrates to one") {
    for (double cd : {0.3, 0.5, 0.7}) {
        Real c(cd);
        auto [a, b] = endpoints(c);
        auto f = [&](const Real& x) { return density(x, c); };
        Real mass = tanh_sinh(f, Real(0), a, 128) + tanh_sinh(f, a, b, 128) +
                    tanh_sinh(f, b, Real(1), 128);
        CHECK(abs(mass - 1) < Real(1e-12));
    }
}

TEST_CASE_FIXTURE(dt::P256, "g matches the defining integral") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Cplx z{Real(2), Real(1)};
    Cplx direct = g_eval(z, c);
    CHECK(dt::close(direct,
                    Cplx{dt::R("0.5828950183185879505700368643074558892142"),
                         dt::R("0.6046000520548555259899726630777853807682")},
                    1e-38));
    auto f = [&](const Real& s) { return log(z - Cplx(s)) * density(s, c); };
    Cplx quad = tanh_sinh(f, Real(0), a, 128) + tanh_sinh(f, a, b, 128) +
                tanh_sinh(f, b, Real(1), 128);
    CHECK(abs(direct - quad) < Real(1e-10));
}

TEST_CASE_FIXTURE(dt::P256, "g far field, realness, Schwarz symmetry") {
    Real c = Real(1) / 2;
    Cplx far{Real(1e6), Real(0)};
    CHECK(abs(g_eval(far, c) - log(far)) < Real(1e-5));
    Cplx gx = g_eval(Cplx(Real(37) / 10), c);
    CHECK(abs(gx.im) < Real(1e-70));
    dt::Rng rng;
    for (int i = 0; i < 50; ++i) {
        Cplx z{Real(rng.uni(-2, 2)), Real(rng.uni(0.05, 2))};
        CHECK(dt::close(g_eval(conj(z), c), conj(g_eval(z, c)), 1e-60));
    }
    // boundary values on (0,1): Re continuous, Im flips sign
    Real nudge = side_nudge();
    for (double xd : {0.2, 0.5, 0.8}) {
        Cplx up = g_eval(Cplx{Real(xd), nudge}, c);
        Cplx dn = g_eval(Cplx{Real(xd), -nudge}, c);
        CHECK(abs(up.re - dn.re) < Real(1e-28));
        CHECK(abs(up.im + dn.im) < Real(1e-28));
    }
}

TEST_CASE_FIXTURE(dt::P256, "g_prime closed form vs finite differences") {
    Real c = Real(1) / 2;
    Cplx z{Real(2), Real(1)};
    Real h = ldexp(Real(1), -40);
    Cplx fd = (g_eval(z + Cplx(h), c) - g_eval(z - Cplx(h), c)) / Cplx(2 * h);
    CHECK(abs(g_prime(z, c) - fd) < Real(1e-8));
    Cplx far{Real(1e6), Real(0)};
    CHECK(abs(g_prime(far, c) * far - Cplx(Real(1))) < Real(1e-5));
    CHECK(abs(g_prime(Cplx(Real(5) / 2), c).im) < Real(1e-70));
}

TEST_CASE_FIXTURE(dt::P256, "lagrange multiplier") {
    CHECK(dt::close(lagrange_l(Real(3) / 10),
                    dt::R("-2.803435373690277794718955549785806769168"), 1e-35));
    CHECK(dt::close(lagrange_l(Real(1) / 2),
                    dt::R("-2.863046217355342782317657017981482294511"), 1e-35));
    CHECK(dt::close(lagrange_l(Real(7) / 10),
                    dt::R("-2.96793176780625199283971813904778126021"), 1e-35));
    CHECK(lagrange_l(Real(1) / 2) < 0);

    // constancy of 2 Re g_+ across the band
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Real l = lagrange_l(c);
    for (double t : {0.3, 0.5, 0.7}) {
        Cplx x{a + Real(t) * (b - a), side_nudge()};
        CHECK(abs(2 * g_eval(x, c).re - l) < Real(1e-10));
    }

    // equals the defining integral 2 int log|b-s| dmu(s) (integrable log singularity)
    auto f = [&](const Real& s) { return log(abs(b - s)) * density(s, c); };
    Real quad = tanh_sinh(f, Real(0), a, 128) + tanh_sinh(f, a, b, 128) +
                tanh_sinh(f, b, Real(1), 128);
    CHECK(abs(2 * quad - l) < Real(1e-8));
}

TEST_CASE_FIXTURE(dt::P256, "bundled equilibrium data") {
    EquilibriumData eq = make_equilibrium(Real(1) / 2);
    auto [a, b] = endpoints(Real(1) / 2);
    CHECK(eq.c == Real(1) / 2);
    CHECK(eq.a == a);
    CHECK(eq.b == b);
    CHECK(dt::close(eq.l, lagrange_l(Real(1) / 2), 1e-60));
}
