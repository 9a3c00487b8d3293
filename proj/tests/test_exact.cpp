#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcheb/exact.hpp"
#include "support.hpp"

#include <vector>

using namespace dcheb;

TEST_CASE("recurrence base cases and hand-computed steps") {
    Rational z(17, 3);
    CHECK(t_recurrence(0, 9, z) == 1);
    CHECK(t_recurrence(1, 9, z) == 2 * z - 9 + 1);
    CHECK(t_recurrence(1, 7, Rational(4, 3)) == Rational(-10, 3));
    // two steps of the recurrence: t_1(0,4) = -3, then 2 t_2 = 6(-3/2)(-3) - 15
    CHECK(t_recurrence(2, 4, Rational(0)) == 6);
    CHECK_THROWS(t_recurrence(4, 4, Rational(0)));
}

TEST_CASE("difference oracle matches on base cases") {
    CHECK(t_difference(0, 9, Rational(17, 3)) == 1);
    CHECK(t_difference(2, 4, Rational(0)) == 6);
    CHECK(t_difference(1, 4, Rational(0)) == -3);
}

TEST_CASE("hahn oracle with runtime-matched kappa") {
    CHECK(t_hahn(0, 6, Rational(5)) == 1);
    CHECK(t_hahn(1, 4, Rational(0)) == -3);
    CHECK(t_hahn(2, 4, Rational(0)) == 6);
}

TEST_CASE("oracle triple agreement on a mixed sweep") {
    std::vector<Rational> extras{Rational(1, 3), Rational(-1, 3), Rational(7, 2)};
    for (unsigned N : {5u, 9u, 12u}) {
        for (unsigned n = 0; n <= std::min(8u, N - 1); ++n) {
            for (unsigned k = 0; k < N; ++k) {
                Rational r = t_recurrence(n, N, Rational(k));
                CHECK(r == t_difference(n, N, Rational(k)));
                CHECK(r == t_hahn(n, N, Rational(k)));
            }
            for (const Rational& z : extras) {
                Rational r = t_recurrence(n, N, z);
                CHECK(r == t_difference(n, N, z));
                CHECK(r == t_hahn(n, N, z));
            }
        }
    }
}

TEST_CASE("frozen oracle values") {
    CHECK(t_recurrence(5, 12, Rational(7, 2)) == Rational(-141015, 2));
    CHECK(t_difference(8, 20, Rational(-1, 3)) == Rational("17933057018240/729"));
    CHECK(t_hahn(3, 7, Rational(0)) == -120);
    CHECK(t_recurrence(10, 25, Rational(2, 5)) ==
          Rational("-349423007263728685056/9765625"));
}

TEST_CASE("parity about the lattice midpoint") {
    for (unsigned N : {6u, 8u, 11u}) {
        Rational z(1, 3);
        Rational zr = Rational(int(N) - 1) - z;
        for (unsigned n = 0; n < N; ++n) {
            Rational sign = (n % 2 == 0) ? 1 : -1;
            CHECK(t_recurrence(n, N, z) == sign * t_recurrence(n, N, zr));
        }
    }
}

TEST_CASE("monic normalization") {
    CHECK(monic_scale(0) == 1);
    CHECK(monic_scale(1) == Rational(1, 2));
    CHECK(monic_scale(3) == Rational(36, 720));
    CHECK(monic_pi(0, 9, Rational(4)) == 1);
    Rational z(5, 7);
    CHECK(monic_pi(1, 6, z) == z - Rational(5, 2));
    CHECK(monic_pi(2, 4, Rational(0)) == 1);
}

TEST_CASE("monic leading coefficient is one (divided differences)") {
    // the n-th divided difference over n+1 nodes extracts the leading coefficient
    unsigned N = 12;
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<Rational> dd(n + 1);
        for (unsigned j = 0; j <= n; ++j) dd[j] = monic_pi(n, N, Rational(j));
        for (unsigned level = 1; level <= n; ++level)
            for (unsigned j = 0; j + level <= n; ++j)
                dd[j] = (dd[j + 1] - dd[j]) / Rational(level);
        CHECK(dd[0] == 1);
    }
}

TEST_CASE("discrete norm and orthogonality") {
    CHECK(norm_check(0, 0, 3) == 3);
    CHECK(norm_check(0, 0, 7) == 7);
    CHECK(norm_check(1, 1, 4) == 20);  // 9+1+1+9, closed form 5!/(3 2!)
    CHECK(norm_check(0, 1, 4) == 0);
    CHECK(norm_closed_form(1, 1, 4) == 20);
    CHECK(norm_closed_form(3, 3, 7) == 86400);
    CHECK(norm_check(3, 3, 7) == 86400);
    CHECK(norm_closed_form(2, 5, 9) == 0);
    for (unsigned n = 0; n < 6; ++n)
        for (unsigned m = 0; m < 6; ++m)
            CHECK(norm_check(n, m, 6) == norm_closed_form(n, m, 6));
}

TEST_CASE_FIXTURE(dt::P256, "high-precision complex path agrees with rationals") {
    Rational exact = t_recurrence(6, 14, Rational(1, 3));
    Cplx approx = t_recurrence(6, 14, Cplx(Real(1) / 3));
    CHECK(abs(approx - Cplx(Real(exact))) < ldexp(Real(1), -200) * abs(Cplx(Real(exact))));

    ExactValue ev = t_recurrence(5, 12, exact_from(Cplx{Real(1) / 4, Real(1) / 2}, 512));
    CHECK(!ev.is_rational);
    CHECK(ev.bits == 512);
    ExactValue ed = t_difference(5, 12, exact_from(Cplx{Real(1) / 4, Real(1) / 2}, 512));
    CHECK(rel_diff(exact_to_lc(ev), exact_to_lc(ed)) < ldexp(Real(1), -200));
    // the hahn oracle is deliberately rational-only
    CHECK_THROWS_AS(t_hahn(5, 12, exact_from(Cplx{Real(1) / 4, Real(1) / 2}, 512)),
                    std::invalid_argument);
    CHECK(t_hahn(5, 12, exact_from(Rational(7, 2))).rat == Rational(-141015, 2));
    ExactValue em = monic_pi(5, 12, exact_from(Cplx{Real(1) / 4, Real(1) / 2}, 512));
    CHECK(rel_diff(exact_to_lc(em),
                   lc_mul(exact_to_lc(ev), lc_from(Real(monic_scale(5))))) <
          ldexp(Real(1), -200));
}

TEST_CASE_FIXTURE(dt::P256, "exact value export to log space") {
    ExactValue q = exact_from(Rational(-3, 2));
    CHECK(q.is_rational);
    LogComplex lc = exact_to_lc(q);
    CHECK(abs(lc.log_mod - log(Real(3) / 2)) < ldexp(Real(1), -240));
    CHECK(lc.phase == const_pi());
    CHECK(exact_to_lc(exact_from(Rational(0))).is_zero());
}
