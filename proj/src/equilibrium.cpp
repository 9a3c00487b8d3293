#include "dcheb/equilibrium.hpp"

#include "dcheb/branch.hpp"

#include <stdexcept>

namespace dcheb {

Real density(const Real& x, const Real& c) {
    if (x < 0 || x > 1) throw std::domain_error("density: x outside [0,1]");
    auto [a, b] = endpoints(c);
    if (x <= a || x >= b) return 1 / c;
    Real s = c / (2 * sqrt(x - x * x));
    if (s > 1) s = 1;  // rounding guard at the turning points
    return (2 / (const_pi() * c)) * asin(s);
}

Cplx g_eval(const Cplx& z, const Real& c) {
    if (z.im == 0 && (z.re == 0 || z.re == 1))
        throw std::domain_error("g_eval: z at an interval endpoint; pass a side");
    auto [a, b] = endpoints(c);
    Cplx rho = branch_sqrt_ab(z, a, b);
    Cplx one{Real(1), Real(0)};
    Real half_c = c / 2;
    return Cplx(-1 - 2 * log(Real(2)))
         + (1 / c) * ((z - one) * log(z - one))
         - (1 / c) * (z * log(z))
         + (2 - 2 / c) * log(sqrt(z - Cplx(a)) + sqrt(z - Cplx(b)))
         + (2 / c) * (z * log(z + rho + Cplx(half_c)))
         + (2 / c) * ((one - z) * log(z - one + rho - Cplx(half_c)));
}

Cplx g_prime(const Cplx& z, const Real& c) {
    if (z.im == 0 && (z.re == 0 || z.re == 1))
        throw std::domain_error("g_prime: z at an interval endpoint; pass a side");
    auto [a, b] = endpoints(c);
    Cplx rho = branch_sqrt_ab(z, a, b);
    Cplx one{Real(1), Real(0)};
    Real half_c = c / 2;
    return (2 / c) * (log(z + rho + Cplx(half_c)) - log(z - one + rho - Cplx(half_c)))
         + (1 / c) * (log(z - one) - log(z));
}

Real lagrange_l(const Real& c) {
    Real mid = Real(1) / 2;  // (a+b)/2; the turning points straddle 1/2 symmetrically
    Real nudge = ldexp(Real(1), -static_cast<int>(working_bits() / 2 + 16));
    return 2 * g_eval(Cplx{mid, nudge}, c).re;
}

EquilibriumData make_equilibrium(const Real& c) {
    auto [a, b] = endpoints(c);
    return {c, a, b, lagrange_l(c)};
}

}  // namespace dcheb
