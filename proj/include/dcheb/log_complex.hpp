#pragma once

#include "dcheb/cplx.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace dcheb {

/// Nonzero complex stored as (log of modulus, phase). Survives magnitudes like
/// N^n e^{nl/2} that overflow any fixed-exponent float. Zero is the log_mod = -inf
/// sentinel with phase 0.
struct LogComplex {
    Real log_mod;
    Real phase;  // normalized into (-pi, pi]

    LogComplex() : log_mod(-std::numeric_limits<double>::infinity()), phase(0) {}
    LogComplex(Real lm, Real ph);

    bool is_zero() const { return boost::multiprecision::isinf(log_mod) && log_mod < 0; }
};

inline Real wrap_phase(Real p) {
    const Real& pi = const_pi();
    if (p > -pi && p <= pi) return p;
    p = fmod(p, 2 * pi);
    if (p > pi) p -= 2 * pi;
    if (p <= -pi) p += 2 * pi;
    return p;
}

inline LogComplex::LogComplex(Real lm, Real ph)
    : log_mod(std::move(lm)), phase(wrap_phase(std::move(ph))) {
    if (is_zero()) phase = 0;
}

inline LogComplex lc_zero() { return LogComplex(); }
inline LogComplex lc_one() { return {Real(0), Real(0)}; }

inline LogComplex lc_from(const Cplx& w) {
    if (w.re == 0 && w.im == 0) return lc_zero();
    return {log(abs(w)), arg(w)};
}
inline LogComplex lc_from(const Real& x) {
    if (x == 0) return lc_zero();
    return {log(abs(x)), x > 0 ? Real(0) : const_pi()};
}

/// Ordinary-complex export; representable whenever exp(log_mod) fits in Real's
/// (vast) exponent range.
inline Cplx lc_to_cplx(const LogComplex& v) {
    if (v.is_zero()) return {Real(0), Real(0)};
    Real m = exp(v.log_mod);
    return {m * cos(v.phase), m * sin(v.phase)};
}

inline LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return lc_zero();
    return {a.log_mod + b.log_mod, a.phase + b.phase};
}

inline LogComplex lc_div(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) throw std::domain_error("lc_div: division by zero element");
    if (a.is_zero()) return lc_zero();
    return {a.log_mod - b.log_mod, a.phase - b.phase};
}

inline LogComplex lc_neg(const LogComplex& a) {
    if (a.is_zero()) return a;
    return {a.log_mod, a.phase + const_pi()};
}

inline LogComplex lc_conj(const LogComplex& a) {
    if (a.is_zero()) return a;
    return {a.log_mod, -a.phase};
}

inline LogComplex lc_pow(const LogComplex& a, const Real& r) {
    if (a.is_zero()) {
        if (r <= 0) throw std::domain_error("lc_pow: zero element with exponent <= 0");
        return lc_zero();
    }
    return {a.log_mod * r, a.phase * r};
}

/// Sum of arbitrarily scaled values: factor out the maximal log_mod, add the rescaled
/// residuals as ordinary complex numbers, renormalize.
inline LogComplex lc_sum(const std::vector<LogComplex>& terms) {
    if (terms.empty()) throw std::invalid_argument("lc_sum: empty list");
    const Real* mx = nullptr;
    for (const auto& t : terms)
        if (!t.is_zero() && (mx == nullptr || t.log_mod > *mx)) mx = &t.log_mod;
    if (mx == nullptr) return lc_zero();
    Real m = *mx;
    Cplx acc{Real(0), Real(0)};
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        Real s = exp(t.log_mod - m);
        acc.re += s * cos(t.phase);
        acc.im += s * sin(t.phase);
    }
    // Residual at or below the summation's own rounding noise is
    // indistinguishable from exact cancellation: w + (-w) must give the zero
    // element even though the pi in the negated phase was itself rounded.
    Real r = abs(acc);
    Real noise = ldexp(Real(static_cast<unsigned>(terms.size())),
                       32 - static_cast<int>(working_bits()));
    if (r < noise) return lc_zero();
    return {m + log(r), arg(acc)};
}

inline LogComplex lc_sum(const LogComplex& a, const LogComplex& b) { return lc_sum({a, b}); }

/// |a/b - 1| without forming huge exponentials.
inline Real rel_diff(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) throw std::domain_error("rel_diff: reference value is zero");
    if (a.is_zero()) return Real(1);
    Real dl = a.log_mod - b.log_mod;
    Real dp = a.phase - b.phase;
    Real m = exp(dl);  // mpfr exponent range absorbs any dl arising here
    return abs(Cplx{m * cos(dp) - 1, m * sin(dp)});
}

}  // namespace dcheb
