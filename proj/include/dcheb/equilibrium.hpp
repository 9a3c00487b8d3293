#pragma once

#include "dcheb/cplx.hpp"
#include "dcheb/params.hpp"

namespace dcheb {

/// Equilibrium-measure quantities for ratio c: turning points and the Lagrange
/// multiplier l = 2 Re g_+(x) (constant across (a,b)).
struct EquilibriumData {
    Real c;
    Real a;
    Real b;
    Real l;
};

/// Density of the equilibrium measure: (2/(pi c)) arcsin(c/(2 sqrt(x-x^2))) between
/// the turning points, at its ceiling 1/c on [0,a] and [b,1].
Real density(const Real& x, const Real& c);

/// Logarithmic potential g(z) = int_0^1 log(z-s) dmu(s) in closed form, analytic off
/// (-infty, 1]. On the cut pass a side as a tiny imaginary part.
Cplx g_eval(const Cplx& z, const Real& c);

/// g'(z) = (2/c)[log(z+rho+c/2) - log(z-1+rho-c/2)] + (1/c)[log(z-1) - log z].
Cplx g_prime(const Cplx& z, const Real& c);

/// Lagrange multiplier l = 2 Re g_+((a+b)/2).
Real lagrange_l(const Real& c);

EquilibriumData make_equilibrium(const Real& c);

}  // namespace dcheb
