#include "dcheb/airy.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace dcheb {
namespace {

Real refresh(const Real& x) {  // rebuild at the current default precision
    Real y(0);
    y += x;
    return y;
}
Cplx refresh(const Cplx& z) { return {refresh(z.re), refresh(z.im)}; }

std::shared_mutex consts_mutex;
std::map<unsigned, std::pair<Real, Real>> consts_cache;  // bits -> (Ai(0), -Ai'(0))

// c1 = Ai(0) = 3^{-2/3}/Gamma(2/3), c2 = -Ai'(0) = 3^{-1/3}/Gamma(1/3)
std::pair<Real, Real> series_consts() {
    unsigned bits = working_bits();
    {
        std::shared_lock lock(consts_mutex);
        auto it = consts_cache.find(bits);
        if (it != consts_cache.end()) return it->second;
    }
    Real third = Real(1) / 3;
    Real c1 = pow(Real(3), -2 * third) / tgamma(2 * third);
    Real c2 = pow(Real(3), -third) / tgamma(third);
    std::unique_lock lock(consts_mutex);
    consts_cache[bits] = {c1, c2};
    return {c1, c2};
}

// Maclaurin evaluation; caller guards the (padded) precision.
LogComplex series_eval(const Cplx& z0, AirySelector which, unsigned bits) {
    Cplx z = refresh(z0);
    auto [c1, c2] = series_consts();
    Cplx z3 = z * z * z;
    Real cutoff = ldexp(Real(1), -static_cast<int>(bits));
    bool deriv = which == AirySelector::AiPrime || which == AirySelector::BiPrime;

    Cplx sum_f, sum_g;
    if (!deriv) {
        Cplx t{Real(1), Real(0)};  // t_{k+1} = t_k z^3/((3k+2)(3k+3))
        Cplx s = z;                // s_{k+1} = s_k z^3/((3k+3)(3k+4))
        sum_f = t;
        sum_g = s;
        for (unsigned k = 0;; ++k) {
            t = t * z3 / Cplx(Real((3 * k + 2) * (3 * k + 3)));
            s = s * z3 / Cplx(Real((3 * k + 3) * (3 * k + 4)));
            sum_f += t;
            sum_g += s;
            if (abs(t) + abs(s) < cutoff * (abs(sum_f) + abs(sum_g) + 1)) break;
        }
    } else {
        Cplx u = z * z / Cplx(Real(2));  // u_{k+1} = u_k z^3/(3k(3k+2)), u_1 = z^2/2
        Cplx gp{Real(1), Real(0)};       // gp_{k+1} = gp_k z^3/((3k+1)(3k+3))
        sum_f = u;
        sum_g = gp;
        for (unsigned k = 1;; ++k) {
            u = u * z3 / Cplx(Real(3 * k * (3 * k + 2)));
            gp = gp * z3 / Cplx(Real((3 * k - 2) * (3 * k)));
            sum_f += u;
            sum_g += gp;
            if (abs(u) + abs(gp) < cutoff * (abs(sum_f) + abs(sum_g) + 1)) break;
        }
    }
    Cplx value;
    switch (which) {
        case AirySelector::Ai:
        case AirySelector::AiPrime: value = c1 * sum_f - c2 * sum_g; break;
        case AirySelector::Bi:
        case AirySelector::BiPrime: value = sqrt(Real(3)) * (c1 * sum_f + c2 * sum_g); break;
    }
    return lc_from(value);
}

// Asymptotic expansions, valid |arg z| <= 2pi/3: returns (Ai, Ai') as LogComplex.
std::pair<LogComplex, LogComplex> asym_ai_pair(const Cplx& z, unsigned bits) {
    Cplx zeta = Real(2) / 3 * pow(z, Real(3) / 2);
    Cplx zinv = Cplx(Real(1)) / zeta;
    Cplx term{Real(1), Real(0)};  // (-1)^s u_s zeta^{-s}
    Cplx sum_u = term, sum_v = term;
    Real cutoff = ldexp(Real(1), -static_cast<int>(bits + 16));
    Real prev = -1;
    for (unsigned s = 1; s < 16 * bits; ++s) {
        Real num = Real(6 * s - 5) * (6 * s - 3) * (6 * s - 1);
        Real den = Real(2 * s - 1) * 216 * s;
        term = term * (-(num / den)) * zinv;
        Real mag = abs(term);
        if (prev >= 0 && mag > prev) break;
        sum_u += term;
        sum_v += term * (Real(6 * s + 1) / (Real(1) - 6 * int(s)));
        if (mag < cutoff) break;
        prev = mag;
    }
    LogComplex efac{-zeta.re, -zeta.im};
    LogComplex quart = lc_from(pow(z, Real(1) / 4));
    Real log_2sqrtpi = log(2 * sqrt(const_pi()));
    LogComplex ai = lc_mul(efac, lc_from(sum_u));
    ai = lc_div(ai, quart);
    ai.log_mod -= log_2sqrtpi;
    LogComplex aip = lc_mul(efac, lc_from(sum_v));
    aip = lc_mul(aip, quart);
    aip.log_mod -= log_2sqrtpi;
    aip = lc_neg(aip);
    return {ai, aip};
}

// Ai or Ai' for any argument outside the series radius: direct expansion in
// |arg z| <= 2pi/3, rotation identity in the remaining wedge.
LogComplex ai_outer(const Cplx& z, bool deriv, unsigned bits) {
    const Real& pi = const_pi();
    Real theta = arg(z);
    if (abs(theta) <= 2 * pi / 3) {
        auto [ai, aip] = asym_ai_pair(z, bits);
        return deriv ? aip : ai;
    }
    // Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z); Ai'(z) = -w^2 Ai'(wz) - w Ai'(w^2 z)
    Real ang = 2 * pi / 3;
    Cplx w{cos(ang), sin(ang)};
    Cplx w2 = w * w;
    auto [ai1, aip1] = asym_ai_pair(w * z, bits);
    auto [ai2, aip2] = asym_ai_pair(w2 * z, bits);
    LogComplex cw{Real(0), ang + pi};    // -w
    LogComplex cw2{Real(0), 2 * ang + pi};  // -w^2
    if (!deriv) return lc_sum(lc_mul(cw, ai1), lc_mul(cw2, ai2));
    return lc_sum(lc_mul(cw2, aip1), lc_mul(cw, aip2));
}

// Any selector via the asymptotic machinery; Bi through the connection formula.
LogComplex outer_eval(const Cplx& zz, AirySelector which, unsigned bits) {
    if (which == AirySelector::Ai) return ai_outer(zz, false, bits);
    if (which == AirySelector::AiPrime) return ai_outer(zz, true, bits);
    const Real& pi = const_pi();
    bool deriv = which == AirySelector::BiPrime;
    Real ang = 2 * pi / 3;
    Cplx w{cos(ang), sin(ang)};
    bool upper = zz.im >= 0;
    Cplx zrot = upper ? w * zz : conj(w) * zz;
    LogComplex a_rot = ai_outer(zrot, deriv, bits);
    LogComplex a_dir = ai_outer(zz, deriv, bits);
    // Bi  = 2 e^{+-i pi/6} Ai(w^{+-1} z) + e^{-+i pi/2} Ai(z)
    // Bi' = 2 e^{+-i 5pi/6} Ai'(w^{+-1} z) + e^{-+i pi/2} Ai'(z)
    Real ph_rot = (deriv ? 5 * pi / 6 : pi / 6) * (upper ? 1 : -1);
    Real ph_dir = (upper ? -1 : 1) * pi / 2;
    return lc_sum(lc_mul(LogComplex{log(Real(2)), ph_rot}, a_rot),
                  lc_mul(LogComplex{Real(0), ph_dir}, a_dir));
}

}  // namespace

namespace detail {

LogComplex airy_series_path(const Cplx& z, AirySelector which, unsigned bits) {
    // Series terms peak near e^{(2/3)|z|^{3/2}} before cancelling; pad for that.
    double rd = static_cast<double>(abs(z));
    unsigned pad = static_cast<unsigned>(1.93 * rd * std::sqrt(rd)) + 64;
    PrecisionGuard guard(bits + pad);
    LogComplex v = series_eval(z, which, bits + pad);
    PrecisionGuard trim(bits);
    return {refresh(v.log_mod), refresh(v.phase)};
}

LogComplex airy_asym_path(const Cplx& z, AirySelector which, unsigned bits) {
    PrecisionGuard guard(bits + 32);
    LogComplex out = outer_eval(refresh(z), which, bits);
    PrecisionGuard trim(bits);
    return {refresh(out.log_mod), refresh(out.phase)};
}

}  // namespace detail

LogComplex airy_eval(const Cplx& z, AirySelector which, const PrecisionCtx& ctx) {
    unsigned bits = ctx.bits;
    Real switch_radius = fmax(Real(6), fmax(Real(bits) / 10,
                              pow(Real(52) / 100 * (Real(bits) / 2 + 64), Real(2) / 3)));
    if (abs(z) <= switch_radius) return detail::airy_series_path(z, which, bits);
    return detail::airy_asym_path(z, which, bits);
}

}  // namespace dcheb
