#include "dcheb/asymptotics.hpp"

#include "dcheb/airy.hpp"
#include "dcheb/branch.hpp"
#include "dcheb/dfun.hpp"
#include "dcheb/phase.hpp"

#include <algorithm>

namespace dcheb {
namespace {

Real refresh(const Real& x) {
    Real y(0);
    y += x;
    return y;
}
Cplx refresh(const Cplx& z) { return {refresh(z.re), refresh(z.im)}; }

/// cos(N pi z) = (e^{iN pi z} + e^{-iN pi z})/2 assembled in log space; exact zeros
/// of the real-axis cosine come out as the zero element.
LogComplex lc_cos_npi(const Cplx& z, unsigned N) {
    Real npi = N * const_pi();
    LogComplex ep{-npi * z.im, npi * z.re};
    LogComplex em{npi * z.im, -npi * z.re};
    LogComplex s = lc_sum(ep, em);
    if (!s.is_zero()) s.log_mod -= log(Real(2));
    return s;
}

struct AiryPack {
    LogComplex ai, aip;      // Ai, Ai' at f
    LogComplex ai_r, aip_r;  // Ai, Ai' at the rotated argument
};

AiryPack airy_at(const Cplx& f, const Cplx& rot, const PrecisionCtx& ctx) {
    return {airy_eval(f, AirySelector::Ai, ctx), airy_eval(f, AirySelector::AiPrime, ctx),
            airy_eval(rot, AirySelector::Ai, ctx),
            airy_eval(rot, AirySelector::AiPrime, ctx)};
}

}  // namespace

const char* formula_name(FormulaKind k) {
    switch (k) {
        case FormulaKind::Left: return "left";
        case FormulaKind::Right: return "right";
        case FormulaKind::SimpleInner: return "simple-inner";
        case FormulaKind::SimpleNegative: return "simple-negative";
        case FormulaKind::PanWongPos: return "pan-wong-pos";
        case FormulaKind::PanWongNeg: return "pan-wong-neg";
        case FormulaKind::FixedXPos: return "fixed-x-pos";
        case FormulaKind::FixedXNeg: return "fixed-x-neg";
        case FormulaKind::Auto: return "auto";
    }
    return "?";
}

LogComplex eval_left(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx) {
    PrecisionGuard guard(ctx.bits);
    Cplx zz = refresh(z);
    if (zz.im == 0) zz.im = side_nudge();
    bool upper = zz.im > 0;
    EquilibriumData eq = make_equilibrium(p.c);
    const Real& pi = const_pi();

    Cplx ft = f_maps(zz, p.n, p.c, FMap::Tilde);
    Cplx q = branch_quart_ratio(zz, p.a, p.b);
    Cplx f14 = pow(ft, Real(1) / 4);
    LogComplex at = lc_from(q * f14);
    LogComplex bt = lc_from(Cplx(Real(1)) / (q * f14));

    LogComplex d = d_eval(zz, p.N, DSelector::D, ctx);
    LogComplex co = lc_cos_npi(zz, p.N);
    Real npi = p.N * pi;
    LogComplex ep{-npi * zz.im, npi * zz.re};
    LogComplex em{npi * zz.im, -npi * zz.re};

    Real ang = 2 * pi / 3;
    Cplx om{cos(ang), sin(ang)};
    Cplx rot = upper ? om * ft : conj(om) * ft;
    AiryPack airy = airy_at(ft, rot, ctx);

    // Parametrix coefficients: G = Bi(f~) + i sgn Ai(f~) evaluated through the
    // rotation identity (G = -+ 2i om^{+-1} Ai(om^{+-1} f~)), so no cancellation.
    Real l2 = log(Real(2));
    LogComplex g, gp, e;
    if (upper) {
        g = lc_mul({l2, pi / 6}, airy.ai_r);
        gp = lc_mul({l2, 5 * pi / 6}, airy.aip_r);
        e = lc_div(lc_mul({Real(0), -pi / 2}, ep), d);
    } else {
        g = lc_mul({l2, -pi / 6}, airy.ai_r);
        gp = lc_mul({l2, -5 * pi / 6}, airy.aip_r);
        e = lc_div(lc_mul({Real(0), pi / 2}, em), d);
    }
    LogComplex cod = lc_mul(co, d);
    LogComplex brace = lc_sum({lc_mul(lc_mul(cod, g), at), lc_mul(lc_mul(cod, gp), bt),
                               lc_mul(lc_mul(e, airy.ai), at),
                               lc_mul(lc_mul(e, airy.aip), bt)});
    LogComplex pref{p.n * log(Real(p.N)) + log(pi) / 2 + p.n * eq.l / 2, p.n * pi};
    return lc_mul(pref, brace);
}

LogComplex eval_right(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx) {
    PrecisionGuard guard(ctx.bits);
    Cplx zz = refresh(z);
    if (zz.im == 0) zz.im = side_nudge();
    bool upper = zz.im > 0;
    EquilibriumData eq = make_equilibrium(p.c);
    const Real& pi = const_pi();

    Cplx fs = f_maps(zz, p.n, p.c, FMap::Star);
    Cplx q = branch_quart_ratio(zz, p.a, p.b);
    Cplx f14 = pow(fs, Real(1) / 4);
    LogComplex as = lc_from(f14 / q);
    LogComplex bs = lc_from(q / f14);

    LogComplex ds = d_eval(zz, p.N, DSelector::Dstar, ctx);
    LogComplex co = lc_cos_npi(zz, p.N);
    Real npi = p.N * pi;
    LogComplex ep{-npi * zz.im, npi * zz.re};
    LogComplex em{npi * zz.im, -npi * zz.re};

    Real ang = 2 * pi / 3;
    Cplx om{cos(ang), sin(ang)};
    Cplx rot = upper ? conj(om) * fs : om * fs;
    AiryPack airy = airy_at(fs, rot, ctx);

    Real l2 = log(Real(2));
    LogComplex g, gp, e;
    if (upper) {
        g = lc_mul({l2, -pi / 6}, airy.ai_r);
        gp = lc_mul({l2, -5 * pi / 6}, airy.aip_r);
        e = lc_div(lc_mul({Real(0), pi / 2}, ep), ds);
    } else {
        g = lc_mul({l2, pi / 6}, airy.ai_r);
        gp = lc_mul({l2, 5 * pi / 6}, airy.aip_r);
        e = lc_div(lc_mul({Real(0), -pi / 2}, em), ds);
    }
    LogComplex cod = lc_mul(co, ds);
    LogComplex brace = lc_sum({lc_mul(lc_mul(cod, g), as), lc_mul(lc_mul(cod, gp), bs),
                               lc_mul(lc_mul(e, airy.ai), as),
                               lc_mul(lc_mul(e, airy.aip), bs)});
    LogComplex pref{p.n * log(Real(p.N)) + log(pi) / 2 + p.n * eq.l / 2, Real(p.N) * pi};
    return lc_mul(pref, brace);
}

std::pair<LogComplex, FormulaKind> eval_auto(const Cplx& z, const ChebParams& p,
                                             const PrecisionCtx& ctx) {
    if (z.re <= p.x0) return {eval_left(z, p, ctx), FormulaKind::Left};
    return {eval_right(z, p, ctx), FormulaKind::Right};
}

LogComplex eval_simple(const Real& x, const ChebParams& p, const PrecisionCtx& ctx,
                       SimpleBranch branch) {
    PrecisionGuard guard(ctx.bits);
    Real xx = refresh(x);
    EquilibriumData eq = make_equilibrium(p.c);
    if (branch == SimpleBranch::Inner) {
        Real delta = (p.b - p.a) / 20;
        if (!(xx > 0 && xx <= p.a - delta))
            throw std::domain_error("eval_simple: Inner needs 0 < x <= a - delta");
        PhaseBundle ph = phase_functions(Cplx(xx), p.c);
        LogComplex d = d_eval(Cplx(xx), p.N, DSelector::D, ctx);
        Real ratio = (sqrt(p.a - xx) + sqrt(p.b - xx)) / pow((p.a - xx) * (p.b - xx), Real(1) / 4);
        LogComplex v{p.n * log(Real(p.N)) + p.n * eq.l / 2, p.n * const_pi()};
        v = lc_mul(v, {-(p.n * ph.phi_tilde.re), -(p.n * ph.phi_tilde.im)});
        v = lc_mul(v, d);
        v = lc_mul(v, lc_from(ratio));
        return lc_mul(v, lc_cos_npi(Cplx(xx), p.N));
    }
    if (!(xx < 0)) throw std::domain_error("eval_simple: Negative needs x < 0");
    Cplx phi = Cplx(eq.l / 2) - g_eval(Cplx(xx), p.c);
    LogComplex dt = d_eval(Cplx(xx), p.N, DSelector::Dtilde, ctx);
    Real ratio = (sqrt(p.a - xx) + sqrt(p.b - xx)) / pow((p.a - xx) * (p.b - xx), Real(1) / 4);
    LogComplex v{p.n * log(Real(p.N)) + p.n * eq.l / 2 - log(Real(2)), Real(0)};
    v = lc_mul(v, {-(p.n * phi.re), -(p.n * phi.im)});
    v = lc_mul(v, dt);
    return lc_mul(v, lc_from(ratio));
}

LogComplex pan_wong(const Real& x, unsigned n, unsigned N, FormulaKind which) {
    const Real& pi = const_pi();
    bool pos = which == FormulaKind::PanWongPos || which == FormulaKind::FixedXPos;
    bool neg = which == FormulaKind::PanWongNeg || which == FormulaKind::FixedXNeg;
    if (!pos && !neg) throw std::invalid_argument("pan_wong: not a fixed-x formula kind");
    if (pos && !(x > 0)) throw std::domain_error("pan_wong: this form needs x > 0");
    if (neg && !(x < 0)) throw std::domain_error("pan_wong: this form needs x < 0");

    Real c = Real(n) / N;
    Real sx = pos ? sin(pi * x) : Real(0);
    if (pos && sx == 0) return lc_zero();
    switch (which) {
        case FormulaKind::PanWongPos: {
            // (-1)^{n+1} Gamma(n+N+1) (N-1)^x n^{-2x-2} Gamma(x+1) sin(pi x) / (Gamma(N) pi)
            Real lm = lgamma(Real(n + N + 1)) + x * log(Real(N - 1)) - (2 * x + 2) * log(Real(n))
                      + lgamma(x + 1) + log(abs(sx)) - lgamma(Real(N)) - log(pi);
            Real ph = (n + 1) * pi + (sx < 0 ? pi : Real(0));
            return {lm, ph};
        }
        case FormulaKind::PanWongNeg: {
            // (-1)^n Gamma(n+N+1) (N-1)^x n^{-2x-2} / (Gamma(N) Gamma(-x))
            Real lm = lgamma(Real(n + N + 1)) + x * log(Real(N - 1)) - (2 * x + 2) * log(Real(n))
                      - lgamma(Real(N)) - lgamma(-x);
            return {lm, n * pi};
        }
        case FormulaKind::FixedXPos: {
            // (-1)^{n+1} Gamma(x+1) n^{-2x-2} sin(pi x)/pi N^{n+x+1} (1+c)^{n+N+1/2} e^{-n}
            Real lm = lgamma(x + 1) - (2 * x + 2) * log(Real(n)) + log(abs(sx)) - log(pi)
                      + (n + x + 1) * log(Real(N)) + (n + N + Real(1) / 2) * log(1 + c) - n;
            Real ph = (n + 1) * pi + (sx < 0 ? pi : Real(0));
            return {lm, ph};
        }
        case FormulaKind::FixedXNeg: {
            // (-1)^n N^n n^{-2x-2} (1+c)^{n+N+1/2} N^{x+1} e^{-n} / Gamma(-x)
            Real lm = n * log(Real(N)) - (2 * x + 2) * log(Real(n))
                      + (n + N + Real(1) / 2) * log(1 + c) + (x + 1) * log(Real(N)) - n
                      - lgamma(-x);
            return {lm, n * pi};
        }
        default: break;
    }
    throw std::invalid_argument("pan_wong: unreachable");
}

namespace {

LogComplex oracle_verified(const Cplx& z, unsigned n, unsigned N, const PrecisionCtx& ctx,
                           bool monic) {
    unsigned ob = std::max<unsigned>(ctx.bits, 4 * n + 256);
    auto run = [&](unsigned bb) {
        PrecisionGuard g(bb);
        Cplx w = refresh(z);
        if (monic) w = Real(N) * w - Cplx(Real(1) / 2);
        Cplx t = t_recurrence(n, N, w);
        if (monic) t = t * Cplx(Real(monic_scale(n)));
        return lc_from(t);
    };
    LogComplex v1 = run(ob);
    LogComplex v2 = run(ob + 128);
    if (v1.is_zero() != v2.is_zero())
        throw OraclePrecisionError("oracle zero/nonzero mismatch across precisions");
    if (!v2.is_zero() && rel_diff(v1, v2) > ldexp(Real(1), -48))
        throw OraclePrecisionError("oracle values disagree across precisions");
    return v2;
}

}  // namespace

LogComplex oracle_monic(const Cplx& z, unsigned n, unsigned N, const PrecisionCtx& ctx) {
    return oracle_verified(z, n, N, ctx, true);
}

LogComplex oracle_t(const Cplx& w, unsigned n, unsigned N, const PrecisionCtx& ctx) {
    return oracle_verified(w, n, N, ctx, false);
}

ErrorRecord error_record(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx,
                         FormulaKind formula) {
    PrecisionGuard guard(ctx.bits);
    ErrorRecord rec;
    rec.z = refresh(z);
    rec.n = p.n;
    rec.N = p.N;
    FormulaKind resolved = formula;
    if (formula == FormulaKind::Auto)
        resolved = rec.z.re <= p.x0 ? FormulaKind::Left : FormulaKind::Right;
    rec.formula = resolved;

    bool wants_real = resolved != FormulaKind::Left && resolved != FormulaKind::Right;
    if (wants_real && rec.z.im != 0)
        throw std::domain_error("error_record: this formula takes a real abscissa");

    switch (resolved) {
        case FormulaKind::Left: rec.asym = eval_left(rec.z, p, ctx); break;
        case FormulaKind::Right: rec.asym = eval_right(rec.z, p, ctx); break;
        case FormulaKind::SimpleInner:
            rec.asym = eval_simple(rec.z.re, p, ctx, SimpleBranch::Inner);
            break;
        case FormulaKind::SimpleNegative:
            rec.asym = eval_simple(rec.z.re, p, ctx, SimpleBranch::Negative);
            break;
        default: rec.asym = pan_wong(rec.z.re, p.n, p.N, resolved); break;
    }

    bool vs_t = resolved == FormulaKind::PanWongPos || resolved == FormulaKind::PanWongNeg
                || resolved == FormulaKind::FixedXPos || resolved == FormulaKind::FixedXNeg;
    rec.exact = vs_t ? oracle_t(rec.z, p.n, p.N, ctx) : oracle_monic(rec.z, p.n, p.N, ctx);

    // Near structural zeros, measure against a floor of 1e-6 x the local scale.
    Real eps_log = log(Real(1) / 1000000);
    Real env = rec.asym.is_zero() ? rec.exact.log_mod
                                  : (rec.exact.is_zero()
                                         ? rec.asym.log_mod
                                         : fmax(rec.exact.log_mod, rec.asym.log_mod));
    rec.flagged_zero = rec.exact.is_zero() || rec.exact.log_mod < env + eps_log;
    if (!rec.flagged_zero) {
        rec.rel_err = rel_diff(rec.asym, rec.exact);
    } else {
        LogComplex diff = lc_sum(rec.asym, lc_neg(rec.exact));
        rec.rel_err = diff.is_zero() ? Real(0) : exp(diff.log_mod - (env + eps_log));
    }
    return rec;
}

}  // namespace dcheb
