#pragma once

#include "dcheb/cplx.hpp"

#include <stdexcept>

namespace dcheb {

/// Imaginary offset used when a real-axis point must be pushed to one side of a
/// cut: far below any approximation error yet well above roundoff at the current
/// working precision.
inline Real side_nudge() {
    return ldexp(Real(1), -static_cast<int>(working_bits() / 2 + 32));
}

/// rho(z) = ((z-a)(z-b))^{1/2} cut along [a,b], rho(x) > 0 for real x > b.
/// Taking principal square roots of the two factors separately produces exactly this
/// branch: their product is continuous across (-infty, a) (both factors flip sign
/// together) and equals -sqrt(ab) at z = 0. Points on the open cut must carry a side
/// as a tiny imaginary part; exact real z in (a,b) is rejected.
inline Cplx branch_sqrt_ab(const Cplx& z, const Real& a, const Real& b) {
    if (!(a < b)) throw std::invalid_argument("branch_sqrt_ab: requires a < b");
    if (z.im == 0 && z.re > a && z.re < b)
        throw std::domain_error("branch_sqrt_ab: z on the open cut with no side");
    return sqrt(z - Cplx(a)) * sqrt(z - Cplx(b));
}

/// ((z-b)/(z-a))^{1/4} (reciprocal when inverse is set), cut along [a,b], -> 1 at
/// infinity. The Moebius map (z-b)/(z-a) sends the cut complement onto the plane
/// minus the negative real axis, so a principal quarter power lands on one branch.
inline Cplx branch_quart_ratio(const Cplx& z, const Real& a, const Real& b,
                               bool inverse = false) {
    if (!(a < b)) throw std::invalid_argument("branch_quart_ratio: requires a < b");
    if (z.im == 0 && z.re >= a && z.re <= b)
        throw std::domain_error("branch_quart_ratio: z on the cut with no side");
    Cplx ratio = (z - Cplx(b)) / (z - Cplx(a));
    Real quarter = Real(1) / 4;
    return pow(ratio, inverse ? -quarter : quarter);
}

}  // namespace dcheb
