#include "dcheb/dfun.hpp"

#include "dcheb/loggamma.hpp"

namespace dcheb {
namespace {

Real refresh(const Real& x) {
    Real y(0);
    y += x;
    return y;
}

// log D(z) = Nz + log Gamma(Nz + 1/2) - (1/2) log 2pi - Nz Log(Nz)
LogComplex d_plain(const Cplx& z, unsigned N) {
    if (z.re == 0 && z.im == 0) return {-log(Real(2)) / 2, Real(0)};
    Cplx w = Real(N) * z;
    Cplx half{Real(1) / 2, Real(0)};
    Cplx ld = w + log_gamma(w + half) - log(2 * const_pi()) / 2 - w * log(w);
    return {ld.re, ld.im};
}

// log D~(z) = (1/2) log 2pi + Nz - Nz Log(-Nz) - log Gamma(-Nz + 1/2)
LogComplex d_tilde(const Cplx& z, unsigned N) {
    if (z.re == 0 && z.im == 0) return {log(Real(2)) / 2, Real(0)};
    Cplx w = Real(N) * z;
    Cplx half{Real(1) / 2, Real(0)};
    Cplx ld = log(2 * const_pi()) / 2 + w - w * log(-w) - log_gamma(half - w);
    return {ld.re, ld.im};
}

}  // namespace

LogComplex d_eval(const Cplx& z, unsigned N, DSelector which, const PrecisionCtx& ctx) {
    PrecisionGuard guard(ctx.bits + 32);
    Cplx zz{refresh(z.re), refresh(z.im)};
    LogComplex out;
    switch (which) {
        case DSelector::D: out = d_plain(zz, N); break;
        case DSelector::Dtilde: out = d_tilde(zz, N); break;
        case DSelector::Dstar: out = d_plain(Real(1) - zz, N); break;
        case DSelector::DtildeStar: out = d_tilde(Real(1) - zz, N); break;
    }
    PrecisionGuard trim(ctx.bits);
    return {refresh(out.log_mod), refresh(out.phase)};
}

}  // namespace dcheb
