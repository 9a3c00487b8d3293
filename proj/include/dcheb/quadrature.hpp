#pragma once

#include "dcheb/cplx.hpp"

#include <functional>

namespace dcheb {

/// tanh-sinh quadrature on [a,b]: x = m + r tanh((pi/2) sinh t) with m the
/// midpoint, r the half-width. Doubles its correct digits per level, tolerates
/// integrable endpoint singularities. Validation oracle only; nothing in the
/// evaluation pipeline integrates numerically.
template <class F>
auto tanh_sinh(F f, const Real& a, const Real& b, unsigned bits)
    -> decltype(f(std::declval<Real>())) {
    using Out = decltype(f(std::declval<Real>()));
    PrecisionGuard guard(bits + 16);
    const Real& pi = const_pi();
    Real m = (a + b) / 2, r = (b - a) / 2;
    Real cutoff = ldexp(Real(1), -static_cast<int>(bits + 8));
    Real tmax = log(2 * (bits + 8) * log(Real(2)) / pi) + 1;  // weight below cutoff past here

    auto sample = [&](const Real& t, Out& acc) {
        Real sh = pi / 2 * sinh(t);
        Real w = pi / 2 * cosh(t) / (cosh(sh) * cosh(sh));
        if (w < cutoff) return;
        Real x = m + r * tanh(sh);
        if (!(x > a && x < b)) return;  // clamped by rounding; weight negligible
        acc += w * f(x);
    };

    Real h(1);
    Out total = f(m) * (pi / 2);  // t = 0 node, weight pi/2
    for (Real t = h; t < tmax; t += h) {
        sample(t, total);
        sample(-t, total);
    }
    Out best = total * (h * r);
    for (unsigned level = 1; level <= 14; ++level) {
        h /= 2;
        for (Real t = h; t < tmax; t += 2 * h) {
            sample(t, total);
            sample(-t, total);
        }
        Out next = total * (h * r);
        Real change = abs(next - best);
        best = next;
        if (level >= 4 && change < ldexp(Real(1), -static_cast<int>(bits)) * (1 + abs(best)))
            break;
    }
    return best;
}

}  // namespace dcheb
