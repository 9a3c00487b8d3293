#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcheb/branch.hpp"
#include "dcheb/phase.hpp"
#include "support.hpp"

using namespace dcheb;

TEST_CASE_FIXTURE(dt::P256, "endpoint values of the phase functions") {
    const Real& pi = const_pi();
    for (double cd : {0.5, 0.6}) {
        Real c(cd);
        auto [a, b] = endpoints(c);
        CHECK(abs(phase_functions(Cplx(a), c).phi_tilde) < Real(1e-25));
        CHECK(abs(phase_functions(Cplx(b), c).phi_star) < Real(1e-25));
        // upper limits at the far turning point
        Cplx up_b = phase_functions(Cplx{b, side_nudge()}, c).phi_tilde;
        CHECK(dt::close(up_b, Cplx{Real(0), -(1 / c - 1) * pi}, 1e-25));
        Cplx up_a = phase_functions(Cplx{a, side_nudge()}, c).phi_star;
        CHECK(dt::close(up_a, Cplx{Real(0), (1 / c - 1) * pi}, 1e-25));
        // lower limits are conjugates
        Cplx dn_b = phase_functions(Cplx{b, -side_nudge()}, c).phi_tilde;
        CHECK(dt::close(dn_b, conj(up_b), 1e-25));
    }
    // c = 3/5 pins phi~_+(b) = -(2/3) pi i
    Real c35 = Real(3) / 5;
    Cplx v = phase_functions(Cplx{Real(9) / 10, side_nudge()}, c35).phi_tilde;
    CHECK(dt::close(v, Cplx{Real(0), -2 * pi / 3}, 1e-25));
    CHECK_THROWS_AS(phase_functions(Cplx(Real(0)), c35), std::domain_error);
    CHECK_THROWS_AS(phase_functions(Cplx(Real(1)), c35), std::domain_error);
}

TEST_CASE_FIXTURE(dt::P256, "side relations between phi, phi*, phi~") {
    const Real& pi = const_pi();
    Real c = Real(1) / 2;
    Cplx z{Real(3) / 10, Real(7) / 10};
    PhaseBundle up = phase_functions(z, c);
    CHECK(up.side == Side::Upper);
    Cplx i_pi{Real(0), pi};
    CHECK(dt::close(up.phi_star, up.phi + i_pi / Cplx(c) * (Cplx(Real(1)) - z), 1e-60));
    CHECK(dt::close(up.phi_tilde, up.phi + i_pi * (Cplx(Real(1)) - z / Cplx(c)), 1e-60));
    CHECK(dt::close(up.phi_tilde - up.phi_star, i_pi * Cplx(1 - 1 / c), 1e-60));
    PhaseBundle dn = phase_functions(conj(z), c);
    CHECK(dn.side == Side::Lower);
    CHECK(dt::close(dn.phi_star, dn.phi - i_pi / Cplx(c) * (Cplx(Real(1)) - conj(z)),
                    1e-60));
    CHECK(dt::close(dn.phi, conj(up.phi), 1e-60));
    CHECK(dt::close(dn.phi_tilde, conj(up.phi_tilde), 1e-60));
}

TEST_CASE_FIXTURE(dt::P256, "two-sided sums vanish on the band") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    for (int i = 0; i < 50; ++i) {
        Real x = a + (b - a) * (i + Real(1) / 2) / 50;
        PhaseBundle up = phase_functions(Cplx(x), c);  // upper is the real-axis default
        CHECK(up.side == Side::RealLimit);
        PhaseBundle dn = phase_functions(Cplx(x), c, Side::Lower);
        CHECK(abs(up.phi_star + dn.phi_star) < Real(1e-20));
        CHECK(abs(up.phi_tilde + dn.phi_tilde) < Real(1e-20));
    }
}

TEST_CASE_FIXTURE(dt::P256, "signs and monotonicity on the outer segments") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Real prev_t, prev_s;
    for (int i = 0; i < 50; ++i) {
        Real xt = a * (i + Real(1) / 2) / 50;             // (0,a)
        Real xs = b + (1 - b) * (i + Real(1) / 2) / 50;   // (b,1)
        Cplx pt = phase_functions(Cplx(xt), c).phi_tilde;
        Cplx ps = phase_functions(Cplx(xs), c).phi_star;
        CHECK(pt.re < 0);
        CHECK(abs(pt.im) < Real(1e-30));
        CHECK(ps.re < 0);
        CHECK(abs(ps.im) < Real(1e-30));
        if (i > 0) {
            CHECK(pt.re > prev_t);  // increasing toward 0 at a
            CHECK(ps.re < prev_s);  // decreasing away from b
        }
        prev_t = pt.re;
        prev_s = ps.re;
    }
}

TEST_CASE_FIXTURE(dt::P256, "delta perturbation laws") {
    const Real& pi = const_pi();
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Real xs = b + (1 - b) * Real(3) / 10;  // in (b,1)
    Real xt = a * Real(1) / 2;             // in (0,a)
    Real star0 = phase_functions(Cplx(xs), c).phi_star.re;
    Real tilde0 = phase_functions(Cplx(xt), c).phi_tilde.re;
    // |phi''|/2 at these abscissae is ~40 (the edge distance enters as a square
    // root), so the quadratic remainder carries that constant
    Real devs[2], devt[2];
    int k = 0;
    for (double dd : {1e-2, 1e-3}) {
        Real d(dd);
        for (int sgn : {1, -1}) {
            Cplx zs{xs, sgn * d};
            // Re phi*(x +- i d) = phi*(x) + O(d^2)
            devs[k] = abs(phase_functions(zs, c).phi_star.re - star0);
            CHECK(devs[k] < 100 * d * d);
            // Re phi(x +- i d) = phi*(x) - (pi/c) d + O(d^2)
            CHECK(abs(phase_functions(zs, c).phi.re - (star0 - pi / c * d)) < 100 * d * d);
            Cplx zt{xt, sgn * d};
            devt[k] = abs(phase_functions(zt, c).phi_tilde.re - tilde0);
            CHECK(devt[k] < 100 * d * d);
            CHECK(abs(phase_functions(zt, c).phi.re - (tilde0 - pi / c * d)) < 100 * d * d);
        }
        ++k;
    }
    // remainder shrinks quadratically, not linearly, in the offset
    CHECK(devs[0] / devs[1] > 50);
    CHECK(devs[0] / devs[1] < 200);
    CHECK(devt[0] / devt[1] > 50);
    CHECK(devt[0] / devt[1] < 200);
}

TEST_CASE_FIXTURE(dt::P256, "Re phi~ positive on the dispatch line") {
    Real c = Real(1) / 2;
    for (int i = 0; i < 10; ++i) {
        Real y = Real(5) / 100 + (2 - Real(5) / 100) * i / 9;
        CHECK(phase_functions(Cplx{Real(1) / 2, y}, c).phi_tilde.re > 0);
        CHECK(phase_functions(Cplx{Real(1) / 2, -y}, c).phi_tilde.re > 0);
    }
}

TEST_CASE_FIXTURE(dt::P256, "f maps vanish at their turning points") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    CHECK(abs(f_maps(Cplx(a), 100, c, FMap::Tilde)) == 0);
    CHECK(abs(f_maps(Cplx(b), 100, c, FMap::Star)) == 0);
}

TEST_CASE_FIXTURE(dt::P256, "f~ linearization near a with the pinned constant") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Real K = dt::R("9.926451830422395722039666634487830269346");
    // K = (8/(3c^2))(1-c^2)^{1/4}
    CHECK(dt::close(K, 8 / (3 * c * c) * pow(1 - c * c, Real(1) / 4), 1e-35));
    unsigned n = 100;
    Real t = Real(1) / 10000;
    Cplx f = f_maps(Cplx(a - t), n, c, FMap::Tilde);
    Real lin = pow(Real(3) / 2 * n * K, Real(2) / 3) * t;
    CHECK(abs(f.re - lin) < Real(1e-3) * lin);
    CHECK(abs(f.im) < Real(1e-20));
}

TEST_CASE_FIXTURE(dt::P256, "f map signs on the real segments") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    unsigned n = 60;
    for (int i = 0; i < 50; ++i) {
        Real xt = a * (i + Real(1) / 2) / 50;
        Cplx ft = f_maps(Cplx(xt), n, c, FMap::Tilde);
        CHECK(ft.re > 0);
        CHECK(abs(ft.im) < Real(1e-25) * ft.re);
        Real xs = b + (1 - b) * (i + Real(1) / 2) / 50;
        Cplx fs = f_maps(Cplx(xs), n, c, FMap::Star);
        CHECK(fs.re > 0);
        CHECK(abs(fs.im) < Real(1e-25) * fs.re);
    }
    for (int i = 1; i < 10; ++i) {
        Real xb = a + (b - a) * i / 10;
        CHECK(f_maps(Cplx(xb), n, c, FMap::Tilde).re < 0);
        CHECK(f_maps(Cplx(xb), n, c, FMap::Star).re < 0);
    }
}

TEST_CASE_FIXTURE(dt::P256, "f maps continuous across the axis off the cut") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Real d(1e-8);
    for (double xd : {0.02, 0.05}) {
        Cplx up = f_maps(Cplx{Real(xd), d}, 80, c, FMap::Tilde);
        Cplx dn = f_maps(Cplx{Real(xd), -d}, 80, c, FMap::Tilde);
        CHECK(abs(up - dn) < Real(1e-5) * (1 + abs(up)));
    }
    for (double xd : {0.95, 0.98}) {
        Cplx up = f_maps(Cplx{Real(xd), d}, 80, c, FMap::Star);
        Cplx dn = f_maps(Cplx{Real(xd), -d}, 80, c, FMap::Star);
        CHECK(abs(up - dn) < Real(1e-5) * (1 + abs(up)));
    }
}

TEST_CASE_FIXTURE(dt::P256, "frozen phi~ value at the midpoint of (0,a)") {
    Real c = Real(1) / 2;
    auto [a, b] = endpoints(c);
    Cplx v = phase_functions(Cplx(a / 2), c).phi_tilde;
    CHECK(dt::close(v.re, dt::R("-0.06911494790741735051032217239501407059456"), 1e-35));
    CHECK(abs(v.im) < Real(1e-35));
}
