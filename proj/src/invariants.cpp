#include "dcheb/airy.hpp"
#include "dcheb/branch.hpp"
#include "dcheb/dfun.hpp"
#include "dcheb/harness.hpp"
#include "dcheb/phase.hpp"
#include "dcheb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace dcheb {
namespace {

double dbl(const Real& r) { return static_cast<double>(r); }

std::string fmtg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Check {
    std::ostream& os;
    unsigned fails = 0;

    void operator()(const std::string& name, bool ok, const std::string& detail = "") {
        if (!ok) ++fails;
        os << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) os << "  [" << detail << "]";
        os << "\n";
    }
};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    Cplx in_disc(double radius) {
        for (;;) {
            double re = uniform(-radius, radius), im = uniform(-radius, radius);
            if (re * re + im * im <= radius * radius) return {Real(re), Real(im)};
        }
    }
};

bool near(const Real& x, const Real& y, double tol) {
    return abs(x - y) <= Real(tol) * (1 + abs(y));
}
bool near(const Cplx& x, const Cplx& y, double tol) {
    return abs(x - y) <= Real(tol) * (1 + abs(y));
}

// ---------------------------------------------------------------- numerics --

void suite_numerics(Check& check, Rng& rng) {
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            Cplx w = rng.in_disc(10);
            if (abs(w) < Real(1) / 1000) continue;
            ok = near(lc_to_cplx(lc_from(w)), w, 1e-30);
        }
        check("numerics/lc-roundtrip", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            LogComplex a{Real(rng.uniform(-50, 50)), Real(rng.uniform(-4, 4))};
            LogComplex b{Real(rng.uniform(-50, 50)), Real(rng.uniform(-4, 4))};
            LogComplex c{Real(rng.uniform(-50, 50)), Real(rng.uniform(-4, 4))};
            ok = rel_diff(lc_mul(lc_mul(a, b), c), lc_mul(a, lc_mul(b, c))) < Real(1e-30);
        }
        check("numerics/lc-mul-assoc", ok);
    }
    {
        bool ok = true;
        double worst = 0;
        for (int round = 0; round < 50 && ok; ++round) {
            std::vector<LogComplex> terms;
            Real mx(-100);
            for (int i = 0; i < 8; ++i) {
                terms.push_back({Real(rng.uniform(-3, 3)), Real(rng.uniform(-3, 3))});
                mx = fmax(mx, terms.back().log_mod);
            }
            LogComplex s1 = lc_sum(terms);
            std::shuffle(terms.begin(), terms.end(), rng.gen);
            LogComplex s2 = lc_sum(terms);
            LogComplex d = lc_sum(s1, lc_neg(s2));
            if (d.is_zero()) continue;
            double excess = dbl(d.log_mod - mx);
            worst = std::max(worst, excess);
            ok = excess < std::log(1e-25);
        }
        check("numerics/lc-sum-permutation", ok, ok ? "" : "excess " + fmtg(worst));
    }
    {
        LogComplex s = lc_sum(LogComplex{Real(1000), Real(0)}, LogComplex{Real(999), Real(0)});
        bool ok = abs(s.log_mod - (1000 + log(1 + exp(Real(-1))))) < Real(1e-25) &&
                  s.phase == 0;
        LogComplex vr{Real(3), Real(0)};
        ok = ok && lc_sum(vr, lc_neg(vr)).is_zero();
        LogComplex v{Real(3), Real(1)};
        LogComplex resid = lc_sum(v, lc_neg(v));
        ok = ok && (resid.is_zero() || resid.log_mod < v.log_mod - 150 * log(Real(2)));
        ok = ok && rel_diff(lc_mul(v, lc_one()), v) < Real(1e-30);
        check("numerics/lc-sum-extremes", ok);
    }
    {
        auto [a, b] = endpoints(Real(1) / 2);
        bool sq = true, qt = true, schwarz = true;
        for (int i = 0; i < 200 && (sq || qt); ++i) {
            Cplx z = rng.in_disc(3);
            if (abs(z.im) < Real(1) / 1000) z.im += Real(1) / 100;
            Cplx rho = branch_sqrt_ab(z, a, b);
            sq = sq && near(rho * rho, (z - Cplx(a)) * (z - Cplx(b)), 1e-30);
            Cplx q = branch_quart_ratio(z, a, b);
            qt = qt && near(q * q * q * q, (z - Cplx(b)) / (z - Cplx(a)), 1e-30);
            if (i < 100)
                schwarz = schwarz &&
                          near(branch_sqrt_ab(conj(z), a, b), conj(rho), 1e-30) &&
                          near(branch_quart_ratio(conj(z), a, b), conj(q), 1e-30);
        }
        check("numerics/branch-sqrt-square", sq);
        check("numerics/branch-quart-fourth", qt);
        check("numerics/branch-schwarz", schwarz);
        auto [a3, b3] = endpoints(Real(3) / 5);  // a = 1/10, b = 9/10
        Cplx one{Real(1), Real(0)};
        bool vals = near(branch_sqrt_ab(one, a3, b3), Cplx{Real(3) / 10, Real(0)}, 1e-30) &&
                    near(branch_sqrt_ab(Cplx{Real(0), Real(0)}, a3, b3),
                         Cplx{Real(-3) / 10, Real(0)}, 1e-30) &&
                    near(branch_quart_ratio(one, a3, b3),
                         Cplx{1 / sqrt(Real(3)), Real(0)}, 1e-30) &&
                    near(branch_quart_ratio(Cplx{Real(1000000), Real(0)}, a3, b3), one, 1e-5);
        check("numerics/branch-values", vals);
    }
}

// ------------------------------------------------------------------- exact --

void suite_exact(Check& check) {
    {
        unsigned count = 0;
        bool ok = true;
        for (unsigned N : {5u, 9u, 12u, 16u}) {
            std::vector<Rational> points;
            for (unsigned k = 0; k < N; ++k) points.emplace_back(k);
            points.push_back(Rational(-1, 3));
            points.push_back(Rational(1, 3));
            points.push_back(Rational(7, 2));
            for (unsigned n = 1; n <= std::min(8u, N - 1); ++n)
                for (const Rational& z : points) {
                    Rational r = t_recurrence(n, N, z);
                    ok = ok && r == t_difference(n, N, z) && r == t_hahn(n, N, z);
                    ++count;
                }
        }
        check("exact/oracle-triple-agreement", ok, std::to_string(count) + " points");
    }
    {
        unsigned pairs = 0, equal = 0;
        for (unsigned N : {4u, 8u, 12u})
            for (unsigned n = 0; n < N; ++n)
                for (unsigned m = 0; m < N; ++m) {
                    ++pairs;
                    if (norm_check(n, m, N) == norm_closed_form(n, m, N)) ++equal;
                }
        check("exact/orthogonality", pairs == equal,
              std::to_string(equal) + "/" + std::to_string(pairs) + " exact");
    }
    {
        bool ok = true;
        for (unsigned N : {9u, 14u})
            for (unsigned n = 1; n <= 8; ++n)
                for (const Rational& z :
                     {Rational(0), Rational(2), Rational(4), Rational(7, 2)}) {
                    Rational lhs = t_recurrence(n, N, z);
                    Rational rhs = t_recurrence(n, N, Rational(N - 1) - z);
                    ok = ok && lhs == (n % 2 ? -rhs : rhs);
                }
        check("exact/parity", ok);
    }
    {
        bool ok = true;
        for (unsigned n : {1u, 4u, 7u}) {
            Rational z(5, 3);
            ok = ok && monic_pi(n, 12, z) == monic_scale(n) * t_recurrence(n, 12, z);
        }
        check("exact/monic-consistency", ok);
    }
}

// ------------------------------------------------------------- equilibrium --

void suite_equilibrium(Check& check, Rng& rng, const Real& c, unsigned bits) {
    auto [a, b] = endpoints(c);
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            Real x(rng.uniform(1e-3, 1 - 1e-3));
            ok = near(density(x, c), density(1 - x, c), 1e-30);
        }
        check("equilibrium/density-symmetry", ok);
    }
    {
        bool ok = true;
        Real cap = 1 / c;
        for (int i = 0; i < 200 && ok; ++i) {
            Real x(rng.uniform(1e-3, 1 - 1e-3));
            Real m = density(x, c);
            ok = m >= 0 && m <= cap * (1 + Real(1e-30));
            if (x < a || x > b) ok = ok && near(m, cap, 1e-30);
        }
        check("equilibrium/density-bounds", ok);
    }
    {
        auto mu = [&](const Real& x) { return density(x, c); };
        Real mass = tanh_sinh(mu, Real(0), a, bits) + tanh_sinh(mu, a, b, bits) +
                    tanh_sinh(mu, b, Real(1), bits);
        check("equilibrium/mass", abs(mass - 1) < Real(1e-12),
              "mass-1 = " + fmtg(dbl(mass - 1)));
    }
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            Cplx z = rng.in_disc(3);
            if (abs(z.im) < Real(1) / 100) z.im += Real(1) / 10;
            if (z.re > Real(-1) / 100 && z.re < Real(11) / 10 && abs(z.im) < Real(1) / 100)
                continue;
            ok = near(g_eval(conj(z), c), conj(g_eval(z, c)), 1e-28);
        }
        check("equilibrium/g-schwarz", ok);
    }
    {
        Real l = lagrange_l(c);
        bool ok = true;
        for (double f : {0.3, 0.5, 0.8}) {
            Cplx zz{a + Real(f) * (b - a), side_nudge()};
            ok = ok && near(2 * g_eval(zz, c).re, l, 1e-25);
        }
        check("equilibrium/l-constancy", ok);
    }
    {
        Cplx z{Real(2), Real(1)};
        auto seg = [&](const Real& lo, const Real& hi) {
            return tanh_sinh([&](const Real& s) { return log(z - Cplx(s)) * density(s, c); },
                             lo, hi, bits);
        };
        Cplx quad = seg(Real(0), a) + seg(a, b) + seg(b, Real(1));
        check("equilibrium/g-quadrature", near(quad, g_eval(z, c), 1e-10),
              "diff = " + fmtg(dbl(abs(quad - g_eval(z, c)))));
    }
    {
        bool ok = true;
        Real h = ldexp(Real(1), -40);
        for (Cplx z : {Cplx{Real(2), Real(1)}, Cplx{Real(3) / 10, Real(7) / 10}}) {
            Cplx fd = (g_eval(z + Cplx(h), c) - g_eval(z - Cplx(h), c)) / (2 * h);
            ok = ok && near(fd, g_prime(z, c), 1e-20);
        }
        check("equilibrium/g-prime-fd", ok);
    }
    {
        Cplx z{Real(1000000), Real(1) / 2};
        bool ok = abs(g_eval(z, c) - log(z)) < Real(1e-5) &&
                  abs(g_prime(z, c) * z - Cplx{Real(1), Real(0)}) < Real(1e-5);
        check("equilibrium/g-decay", ok);
    }
    {
        auto integrand = [&](const Real& s) { return log(abs(b - s)) * density(s, c); };
        Real quad = 2 * (tanh_sinh(integrand, Real(0), a, bits) +
                         tanh_sinh(integrand, a, b, bits) +
                         tanh_sinh(integrand, b, Real(1), bits));
        check("equilibrium/l-quadrature", near(quad, lagrange_l(c), 1e-8),
              "diff = " + fmtg(dbl(abs(quad - lagrange_l(c)))));
    }
}

// ------------------------------------------------------------------- airy --

void suite_airy(Check& check, Rng& rng, unsigned bits) {
    PrecisionCtx ctx = make_ctx(bits);
    const Real& pi = const_pi();
    {
        Real ai0("0.3550280538878172392600631860041831763980");
        Real bi0("0.6149266274460007351509223690936135535947");
        bool ok =
            rel_diff(airy_eval({Real(0), Real(0)}, AirySelector::Ai, ctx), lc_from(ai0)) <
                Real(1e-35) &&
            rel_diff(airy_eval({Real(0), Real(0)}, AirySelector::Bi, ctx), lc_from(bi0)) <
                Real(1e-35);
        check("airy/values-at-zero", ok);
    }
    {
        bool ok = true;
        Real ang = 2 * pi / 3;
        Cplx w{cos(ang), sin(ang)};
        LogComplex lw{Real(0), ang}, lw2{Real(0), 2 * ang};
        for (int i = 0; i < 25 && ok; ++i) {
            Cplx z = i < 20 ? rng.in_disc(15) : Cplx{Real(rng.uniform(28, 34)), Real(0)} * Cplx{cos(Real(rng.uniform(-3, 3))), sin(Real(rng.uniform(-3, 3)))};
            for (AirySelector sel : {AirySelector::Ai, AirySelector::AiPrime}) {
                bool deriv = sel == AirySelector::AiPrime;
                LogComplex t0 = airy_eval(z, sel, ctx);
                LogComplex t1 = lc_mul(deriv ? lw2 : lw, airy_eval(w * z, sel, ctx));
                LogComplex t2 = lc_mul(deriv ? lw : lw2, airy_eval(w * w * z, sel, ctx));
                LogComplex s = lc_sum({t0, t1, t2});
                Real mx = fmax(t0.log_mod, fmax(t1.log_mod, t2.log_mod));
                ok = ok && (s.is_zero() || s.log_mod < mx + log(Real(1e-38)));
            }
        }
        check("airy/rotation-identity", ok);
    }
    {
        bool ok = true;
        double worst = 0;
        LogComplex inv_pi = lc_from(1 / pi);
        for (int i = 0; i < 200 && ok; ++i) {
            Cplx z = rng.in_disc(20);
            LogComplex w = lc_sum(
                lc_mul(airy_eval(z, AirySelector::Ai, ctx),
                       airy_eval(z, AirySelector::BiPrime, ctx)),
                lc_neg(lc_mul(airy_eval(z, AirySelector::AiPrime, ctx),
                              airy_eval(z, AirySelector::Bi, ctx))));
            double err = dbl(rel_diff(w, inv_pi));
            worst = std::max(worst, err);
            ok = err < 1e-10;
        }
        check("airy/wronskian", ok, "max rel " + fmtg(worst));
    }
    {
        Real r0 = fmax(Real(6), fmax(Real(bits) / 10,
                       pow(Real(52) / 100 * (Real(bits) / 2 + 64), Real(2) / 3)));
        bool ok = true;
        double worst = 0;
        Real tol = ldexp(Real(1), -static_cast<int>(bits / 4));
        for (double dr : {-1.0, 1.0})
            for (int k = 0; k < 8 && ok; ++k) {
                Real th = (2 * k - 7) * pi / 8 + Real(1) / 10;
                Cplx z = (r0 + Real(dr)) * Cplx{cos(th), sin(th)};
                for (AirySelector sel : {AirySelector::Ai, AirySelector::AiPrime,
                                         AirySelector::Bi, AirySelector::BiPrime}) {
                    double err = dbl(rel_diff(detail::airy_series_path(z, sel, bits),
                                              detail::airy_asym_path(z, sel, bits)));
                    worst = std::max(worst, err);
                    ok = ok && err < dbl(tol);
                }
            }
        check("airy/series-asym-annulus", ok, "max rel " + fmtg(worst));
    }
    {
        bool ok = true;
        for (double x : {10.0, 100.0}) {
            Cplx z{Real(-x), Real(0)};
            LogComplex m2 = lc_sum(lc_pow(airy_eval(z, AirySelector::Ai, ctx), Real(2)),
                                   lc_pow(airy_eval(z, AirySelector::Bi, ctx), Real(2)));
            Real ratio = exp(m2.log_mod) * pi * sqrt(Real(x));
            ok = ok && abs(m2.phase) < Real(1e-20) && ratio > Real(9) / 10 &&
                 ratio < Real(11) / 10 && exp(m2.log_mod) < 2 / (pi * sqrt(Real(x)));
        }
        check("airy/negative-axis-envelope", ok);
    }
}

// ------------------------------------------------------------------- dfun --

void suite_dfun(Check& check, Rng& rng, unsigned bits) {
    PrecisionCtx ctx = make_ctx(bits);
    const Real& pi = const_pi();
    {
        bool ok = true;
        unsigned N = 40;
        for (int i = 0; i < 100 && ok; ++i) {
            double im = rng.uniform(0.05, 2) * (i % 2 ? 1 : -1);
            Cplx z{Real(rng.uniform(-2, 2)), Real(im)};
            Real npr = N * pi * z.re, npi = N * pi * z.im;
            LogComplex two_cos = lc_sum(LogComplex{-npi, npr}, LogComplex{npi, -npr});
            Real sgn = z.im > 0 ? Real(1) : Real(-1);
            LogComplex expf{-sgn * npi, sgn * npr};
            LogComplex rhs =
                lc_mul(lc_mul(two_cos, expf), d_eval(z, N, DSelector::D, ctx));
            ok = rel_diff(d_eval(z, N, DSelector::Dtilde, ctx), rhs) < Real(1e-30);
        }
        check("dfun/reflection-identity", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 30 && ok; ++i) {
            Cplx z = rng.in_disc(2);
            if (abs(z.im) < Real(1) / 100) z.im += Real(1) / 10;
            ok = rel_diff(d_eval(z, 25, DSelector::Dstar, ctx),
                          d_eval(Cplx{Real(1), Real(0)} - z, 25, DSelector::D, ctx)) <
                     Real(1e-30) &&
                 rel_diff(d_eval(z, 25, DSelector::DtildeStar, ctx),
                          d_eval(Cplx{Real(1), Real(0)} - z, 25, DSelector::Dtilde, ctx)) <
                     Real(1e-30);
        }
        check("dfun/star-composition", ok);
    }
    {
        Cplx zero{Real(0), Real(0)}, one{Real(1), Real(0)};
        Real rt2 = sqrt(Real(2));
        bool ok =
            rel_diff(d_eval(zero, 30, DSelector::D, ctx), lc_from(1 / rt2)) < Real(1e-30) &&
            rel_diff(d_eval(zero, 30, DSelector::Dtilde, ctx), lc_from(rt2)) < Real(1e-30) &&
            rel_diff(d_eval(one, 30, DSelector::Dstar, ctx), lc_from(1 / rt2)) <
                Real(1e-30) &&
            rel_diff(d_eval(one, 30, DSelector::DtildeStar, ctx), lc_from(rt2)) <
                Real(1e-30);
        check("dfun/limits", ok);
    }
    {
        bool ok = true;
        double worst100 = 0;
        for (int i = 0; i < 50 && ok; ++i) {
            double r = rng.uniform(0.5, 2), th = rng.uniform(-2.3, 2.3);
            Cplx z{Real(r * std::cos(th)), Real(r * std::sin(th))};
            double d100 = dbl(rel_diff(d_eval(z, 100, DSelector::D, ctx), lc_one()));
            worst100 = std::max(worst100, d100);
            ok = d100 < 0.01;
        }
        Cplx z{Real(1), Real(1) / 2};
        Real e100 = rel_diff(d_eval(z, 100, DSelector::D, ctx), lc_one());
        Real e1000 = rel_diff(d_eval(z, 1000, DSelector::D, ctx), lc_one());
        ok = ok && e1000 < e100 / 5;
        check("dfun/large-n-unity", ok, "max |D-1| " + fmtg(worst100));
    }
    {
        bool ok = true;
        unsigned big = 1000000;
        for (Cplx z : {Cplx{Real(10), Real(0)}, Cplx{Real(0), Real(10)},
                       Cplx{Real(3) / 10, Real(0)}}) {
            LogComplex v = d_eval(z, big, DSelector::D, ctx);
            ok = ok && boost::multiprecision::isfinite(v.log_mod) &&
                 abs(v.log_mod) < Real(1e12);
        }
        for (Cplx z : {Cplx{Real(-10), Real(0)}, Cplx{Real(0), Real(10)},
                       Cplx{Real(-1) / 4, Real(0)}}) {
            LogComplex v = d_eval(z, big, DSelector::Dtilde, ctx);
            ok = ok && boost::multiprecision::isfinite(v.log_mod) &&
                 abs(v.log_mod) < Real(1e12);
        }
        check("dfun/no-overflow", ok);
    }
}

// ------------------------------------------------------------ asymptotics --

void suite_asymptotics(Check& check, unsigned bits) {
    PrecisionCtx ctx = make_ctx(bits);
    const Real& pi = const_pi();
    {
        ChebParams p = make_params(50, 100);
        bool ok = true;
        for (double x : {0.25, 0.75}) {
            Real ph = eval_auto(Cplx{Real(x), Real(0)}, p, ctx).first.phase;
            Real dist = fmin(abs(ph), abs(pi - abs(ph)));
            // phase deviation from the real axis scales with the formula's own
            // O(1/n) error, not with working precision
            ok = ok && dist < Real(2) / 100;
        }
        check("asymptotics/real-axis-phase", ok);
    }
    {
        ChebParams p = make_params(40, 80);
        bool ok = true;
        for (Cplx z : {Cplx{Real(3) / 10, Real(2) / 5}, Cplx{Real(4) / 5, Real(3) / 10}}) {
            LogComplex up = eval_auto(z, p, ctx).first;
            LogComplex dn = eval_auto(conj(z), p, ctx).first;
            ok = ok && rel_diff(dn, lc_conj(up)) < Real(1e-20);
        }
        check("asymptotics/schwarz-reflection", ok);
    }
    {
        Cplx z{Real(45) / 100, Real(3) / 10};
        PrecisionGuard guard(ctx.bits);
        ChebParams pl = make_params(50, 100, Real(6) / 10);
        ChebParams pr = make_params(50, 100, Real(4) / 10);
        auto [vl, kl] = eval_auto(z, pl, ctx);
        auto [vr, kr] = eval_auto(z, pr, ctx);
        bool ok = kl == FormulaKind::Left && kr == FormulaKind::Right &&
                  rel_diff(vl, vr) < Real(1) / 10;
        check("asymptotics/x0-independence", ok, "rel " + fmtg(dbl(rel_diff(vl, vr))));
    }
    {
        ChebParams p = make_params(50, 100);
        bool ok = true;
        double worst = 0;
        for (Cplx z : {Cplx{Real(1) / 2, Real(1) / 2}, Cplx{Real(48) / 100, Real(-2) / 5},
                       Cplx{Real(52) / 100, Real(3) / 10}}) {
            double r = dbl(rel_diff(eval_left(z, p, ctx), eval_right(z, p, ctx)));
            worst = std::max(worst, r);
            ok = ok && r < 0.1;
        }
        check("asymptotics/left-right-overlap", ok, "max rel " + fmtg(worst));
    }
    {
        ChebParams p = make_params(60, 120);
        bool ok = true;
        double worst = 0;
        for (Cplx z : {Cplx{Real(3) / 10, Real(2) / 5}, Cplx{Real(4) / 5, Real(-3) / 10}}) {
            ErrorRecord rec = error_record(z, p, ctx, FormulaKind::Auto);
            worst = std::max(worst, dbl(rec.rel_err));
            ok = ok && !rec.flagged_zero && rec.rel_err < Real(1) / 20;
        }
        check("asymptotics/oracle-match", ok, "max rel " + fmtg(worst));
    }
    {
        ChebParams p = make_params(80, 160);
        Real delta = (p.b - p.a) / 20;
        Real xin = (p.a - delta) * Real(4) / 5;
        // keep clear of the cosine zeros that the leading form cannot resolve
        Real cosv = cos(p.N * pi * xin);
        for (int step = 0; abs(cosv) < Real(1) / 2 && step < 8; ++step) {
            xin -= Real(1) / (4 * p.N);
            cosv = cos(p.N * pi * xin);
        }
        Real rin = rel_diff(eval_simple(xin, p, ctx, SimpleBranch::Inner),
                            oracle_monic(Cplx{xin, Real(0)}, p.n, p.N, ctx));
        Real xneg = Real(-3) / 10;
        Real rneg = rel_diff(eval_simple(xneg, p, ctx, SimpleBranch::Negative),
                             oracle_monic(Cplx{xneg, Real(0)}, p.n, p.N, ctx));
        check("asymptotics/simple-inner", rin < Real(15) / 100, "rel " + fmtg(dbl(rin)));
        check("asymptotics/simple-negative", rneg < Real(1) / 10, "rel " + fmtg(dbl(rneg)));
    }
    {
        unsigned n = 200, N = 400;
        Real xp = Real(3) / 5, xn = Real(-3) / 5;
        LogComplex tp = oracle_t(Cplx{xp, Real(0)}, n, N, ctx);
        LogComplex tn = oracle_t(Cplx{xn, Real(0)}, n, N, ctx);
        double wp = std::max(dbl(rel_diff(pan_wong(xp, n, N, FormulaKind::PanWongPos), tp)),
                             dbl(rel_diff(pan_wong(xp, n, N, FormulaKind::FixedXPos), tp)));
        double wn = std::max(dbl(rel_diff(pan_wong(xn, n, N, FormulaKind::PanWongNeg), tn)),
                             dbl(rel_diff(pan_wong(xn, n, N, FormulaKind::FixedXNeg), tn)));
        check("asymptotics/pan-wong-pos", wp < 0.2, "rel " + fmtg(wp));
        check("asymptotics/pan-wong-neg", wn < 0.2, "rel " + fmtg(wn));
    }
}

}  // namespace

// --------------------------------------------------------------- phase --

unsigned phase_invariant_block(double cd, unsigned bits, unsigned long long seed,
                               std::ostream& os) {
    PrecisionGuard guard(bits);
    Check check{os};
    Rng rng(seed);
    Real c(cd);
    auto [a, b] = endpoints(c);
    const Real& pi = const_pi();
    char tag[32];
    std::snprintf(tag, sizeof tag, "(c=%.3g)", cd);
    auto name = [&](const char* base) { return std::string(base) + tag; };
    Real eps = (b - a) / 20;

    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            Real x = a + Real(rng.uniform(0.02, 0.98)) * (b - a);
            PhaseBundle up = phase_functions({x, Real(0)}, c);
            PhaseBundle dn = phase_functions({x, Real(0)}, c, Side::Lower);
            ok = abs(up.phi_star + dn.phi_star) < Real(1e-10) * (1 + abs(up.phi_star)) &&
                 abs(up.phi_tilde + dn.phi_tilde) < Real(1e-10) * (1 + abs(up.phi_tilde));
        }
        check(name("phase/prop31-two-sided-sum"), ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            Real x = Real(rng.uniform(0.05, 0.95)) * (a - eps / 4);
            if (x <= 0) continue;
            Cplx pt = phase_functions({x, Real(0)}, c).phi_tilde;
            ok = pt.re < 0 && abs(pt.im) < Real(1e-10);
        }
        check(name("phase/interval-sign-tilde"), ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            Real x = b + Real(rng.uniform(0.02, 0.95)) * (1 - b);
            Cplx ps = phase_functions({x, Real(0)}, c).phi_star;
            ok = ps.re < 0 && abs(ps.im) < Real(1e-10);
        }
        check(name("phase/interval-sign-star"), ok);
    }
    {
        bool ok = true;
        Real h = (b - a) * Real(1e-6);
        for (double f : {0.15, 0.4, 0.6, 0.85}) {
            Real xt = a * Real(f);
            Real slope_t = (phase_functions({xt + h, Real(0)}, c).phi_tilde.re -
                            phase_functions({xt - h, Real(0)}, c).phi_tilde.re) /
                           (2 * h);
            Real xs = b + Real(f) * (1 - b);
            Real slope_s = (phase_functions({xs + h, Real(0)}, c).phi_star.re -
                            phase_functions({xs - h, Real(0)}, c).phi_star.re) /
                           (2 * h);
            ok = ok && slope_t > 0 && slope_s < 0;
        }
        check(name("phase/monotonicity"), ok);
    }
    {
        Cplx ta = phase_functions({a, Real(0)}, c).phi_tilde;
        Cplx tb = phase_functions({b, Real(0)}, c).phi_tilde;
        Cplx sa = phase_functions({a, Real(0)}, c).phi_star;
        Cplx sb = phase_functions({b, Real(0)}, c).phi_star;
        Cplx sa_low = phase_functions({a, Real(0)}, c, Side::Lower).phi_star;
        Real want = (1 / c - 1) * pi;
        bool ok = abs(ta) < Real(1e-10) && abs(sb) < Real(1e-10) &&
                  abs(tb - Cplx{Real(0), -want}) < Real(1e-10) &&
                  abs(sa - Cplx{Real(0), want}) < Real(1e-10) &&
                  abs(sa_low + Cplx{Real(0), want}) < Real(1e-10);
        check(name("phase/endpoint-values"), ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            double im = rng.uniform(0.1, 1.5) * (i % 2 ? 1 : -1);
            Cplx z{Real(rng.uniform(-0.5, 1.5)), Real(im)};
            PhaseBundle ph = phase_functions(z, c);
            Real sgn = z.im > 0 ? Real(1) : Real(-1);
            Cplx want{Real(0), sgn * (1 - 1 / c) * pi};
            ok = abs(ph.phi_tilde - ph.phi_star - want) < Real(1e-25);
        }
        check(name("phase/tilde-star-relation"), ok);
    }
    {
        bool ok = true;
        for (double f : {0.3, 0.6, 0.85}) {
            Real x = b + Real(f) * (1 - b);
            Real base = phase_functions({x, Real(0)}, c).phi_star.re;
            auto err_star = [&](double d) {
                Real e(0);
                for (double sg : {1.0, -1.0}) {
                    Real v = phase_functions({x, Real(d * sg)}, c).phi_star.re;
                    e = fmax(e, abs(v - base));
                }
                return e;
            };
            auto err_phi = [&](double d) {
                Real e(0);
                for (double sg : {1.0, -1.0}) {
                    Real v = phase_functions({x, Real(d * sg)}, c).phi.re;
                    e = fmax(e, abs(v - (base - pi / c * Real(d))));
                }
                return e;
            };
            Real s2 = err_star(1e-2), s3 = err_star(1e-3);
            Real p2 = err_phi(1e-2), p3 = err_phi(1e-3);
            ok = ok && s2 < Real(1) / 10 && (s2 < Real(1e-12) || s3 <= s2 / 25) &&
                 p2 < Real(1) / 10 && (p2 < Real(1e-12) || p3 <= p2 / 25);
        }
        check(name("phase/delta-perturbation-star"), ok);
    }
    {
        bool ok = true;
        for (double f : {0.3, 0.6}) {
            Real x = a * Real(f);
            Real base = phase_functions({x, Real(0)}, c).phi_tilde.re;
            Real t2(0), t3(0), q2(0), q3(0);
            for (double sg : {1.0, -1.0}) {
                t2 = fmax(t2, abs(phase_functions({x, Real(1e-2 * sg)}, c).phi_tilde.re - base));
                t3 = fmax(t3, abs(phase_functions({x, Real(1e-3 * sg)}, c).phi_tilde.re - base));
                q2 = fmax(q2, abs(phase_functions({x, Real(1e-2 * sg)}, c).phi.re -
                                  (base - pi / c * Real(1e-2))));
                q3 = fmax(q3, abs(phase_functions({x, Real(1e-3 * sg)}, c).phi.re -
                                  (base - pi / c * Real(1e-3))));
            }
            ok = ok && t2 < Real(1) / 10 && (t2 < Real(1e-12) || t3 <= t2 / 25) &&
                 q2 < Real(1) / 10 && (q2 < Real(1e-12) || q3 <= q2 / 25);
        }
        check(name("phase/delta-perturbation-tilde"), ok);
    }
    {
        bool ok = true;
        for (int k = 0; k < 10 && ok; ++k) {
            Real y = Real(5) / 100 + Real(k) * (2 - Real(5) / 100) / 9;
            ok = phase_functions({Real(1) / 2, y}, c).phi_tilde.re > 0 &&
                 phase_functions({Real(1) / 2, -y}, c).phi_tilde.re > 0;
        }
        check(name("phase/interior-positivity"), ok);
    }
    {
        bool ok = true;
        unsigned n = 64;
        for (int i = 0; i < 30 && ok; ++i) {
            Real xi = Real(rng.uniform(0.08, 0.92));
            Real xin = xi * (a - Real(1e-3));
            Cplx ft = f_maps({xin, Real(0)}, n, c, FMap::Tilde);
            ok = ft.re > 0 && abs(ft.im) < Real(1e-20) * (1 + abs(ft.re));
            Real xband = a + xi * (b - a);
            Cplx fb = f_maps({xband, Real(0)}, n, c, FMap::Tilde);
            Cplx sb = f_maps({xband, Real(0)}, n, c, FMap::Star);
            ok = ok && fb.re < 0 && abs(fb.im) < Real(1e-20) * (1 + abs(fb.re)) &&
                 sb.re < 0 && abs(sb.im) < Real(1e-20) * (1 + abs(sb.re));
            Real xr = b + xi * (1 - b - Real(1e-3));
            Cplx fs = f_maps({xr, Real(0)}, n, c, FMap::Star);
            ok = ok && fs.re > 0 && abs(fs.im) < Real(1e-20) * (1 + abs(fs.re));
        }
        check(name("phase/f-map-signs"), ok);
    }
    {
        Cplx fa = f_maps({a, Real(0)}, 64, c, FMap::Tilde);
        Cplx fb = f_maps({b, Real(0)}, 64, c, FMap::Star);
        check(name("phase/f-map-turning-zero"),
              fa.re == 0 && fa.im == 0 && fb.re == 0 && fb.im == 0);
    }
    {
        unsigned n = 100;
        Real t = (b - a) * Real(1e-6);
        Real K = Real(8) / (3 * c * c) * pow(1 - c * c, Real(1) / 4);
        Real predicted = pow(Real(3) / 2 * n * K, Real(2) / 3) * t;
        Cplx ft = f_maps({a - t, Real(0)}, n, c, FMap::Tilde);
        bool ok = abs(ft.re / predicted - 1) < Real(1e-4) && abs(ft.im) < Real(1e-20);
        check(name("phase/f-map-linearization"), ok,
              "ratio-1 = " + fmtg(dbl(ft.re / predicted - 1)));
    }
    {
        bool ok = true;
        Real d(1e-8);
        for (double f : {0.3, 0.7}) {
            Real xt = a * Real(f);
            Cplx um = f_maps({xt, d}, 64, c, FMap::Tilde);
            Cplx dm = f_maps({xt, -d}, 64, c, FMap::Tilde);
            ok = ok && abs(um - dm) < Real(1e-5) * (1 + abs(um));
            Real xs = b + Real(f) * (1 - b);
            Cplx us = f_maps({xs, d}, 64, c, FMap::Star);
            Cplx ds = f_maps({xs, -d}, 64, c, FMap::Star);
            ok = ok && abs(us - ds) < Real(1e-5) * (1 + abs(us));
        }
        check(name("phase/f-map-continuity"), ok);
    }
    return check.fails;
}

int run_invariants(const RunConfig& cfg, std::ostream& fallback) {
    std::ofstream file;
    std::ostream* osp = &fallback;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw std::invalid_argument("cannot open output path: " + cfg.out);
        osp = &file;
    }
    std::ostream& os = *osp;

    unsigned bits = cfg.bits;
    double c = cfg.c > 0 ? cfg.c : 0.5;
    PrecisionGuard guard(bits);
    Check check{os};
    Rng rng(cfg.seed);

    suite_numerics(check, rng);
    suite_exact(check);
    suite_equilibrium(check, rng, Real(c), bits);
    check.fails += phase_invariant_block(c, bits, cfg.seed + 1, os);
    suite_airy(check, rng, bits);
    suite_dfun(check, rng, bits);
    suite_asymptotics(check, bits);

    os << (check.fails ? "RESULT FAIL (" + std::to_string(check.fails) + " failed)"
                       : "RESULT PASS")
       << "\n";
    return check.fails ? 2 : 0;
}

}  // namespace dcheb
