#include "dcheb/phase.hpp"

#include "dcheb/branch.hpp"

namespace dcheb {

PhaseBundle phase_functions(const Cplx& z, const Real& c, std::optional<Side> side) {
    if (z.im == 0 && (z.re == 0 || z.re == 1))
        throw std::domain_error("phase_functions: z = 0 and z = 1 are logarithmic points");
    Side resolved;
    Cplx zz = z;
    if (z.im > 0) {
        resolved = Side::Upper;
    } else if (z.im < 0) {
        resolved = Side::Lower;
    } else {
        resolved = side.value_or(Side::RealLimit);
        if (resolved == Side::RealLimit) resolved = Side::Upper;
        // evaluate just off the axis so every branch primitive sees the side
        Real d = side_nudge();
        zz.im = resolved == Side::Lower ? -d : d;
        if (!side || *side == Side::RealLimit) resolved = Side::RealLimit;
    }
    EquilibriumData eq = make_equilibrium(c);
    const Real& pi = const_pi();
    Real sgn = resolved == Side::Lower ? Real(-1) : Real(1);
    PhaseBundle out;
    out.phi = eq.l / 2 - g_eval(zz, c);
    out.phi_star = out.phi + Cplx(Real(0), sgn * pi / c) * (Real(1) - zz);
    out.phi_tilde = out.phi + Cplx(Real(0), sgn * pi) * (Real(1) - zz / Cplx(c));
    out.side = resolved;
    return out;
}

Cplx f_maps(const Cplx& z, unsigned n, const Real& c, FMap which) {
    auto [a, b] = endpoints(c);
    Real turning = which == FMap::Tilde ? a : b;
    if (z.im == 0 && z.re == turning) return {Real(0), Real(0)};
    PhaseBundle ph = phase_functions(z, c);
    const Cplx& phase = which == FMap::Tilde ? ph.phi_tilde : ph.phi_star;
    Cplx w = Real(-3) * n / 2 * phase;
    Real p = arg(w);
    const Real& pi = const_pi();
    bool upper = z.im >= 0;
    // Pick the 2/3-power branch by shifting arg w one turn: the half-plane where
    // each map lives determines which side of the cut arg w may cross.
    Real targ;
    if (which == FMap::Tilde) {
        if (upper)
            targ = p <= 0 ? p : p - 2 * pi;
        else
            targ = p >= 0 ? p : p + 2 * pi;
    } else {
        if (upper)
            targ = p >= 0 ? p : p + 2 * pi;
        else
            targ = p <= 0 ? p : p - 2 * pi;
    }
    Real m = pow(abs(w), Real(2) / 3);
    Real ang = 2 * targ / 3;
    return {m * cos(ang), m * sin(ang)};
}

}  // namespace dcheb
