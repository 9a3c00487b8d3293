#pragma once

#include "dcheb/log_complex.hpp"

namespace dcheb {

/// Gamma-ratio factors absorbing the pole chains near the endpoints 0 and 1:
///   D(z)  = e^{Nz} Gamma(Nz+1/2) / (sqrt(2 pi) (Nz)^{Nz}),   |arg z| < pi
///   D~(z) = sqrt(2 pi) e^{Nz} (-Nz)^{-Nz} / Gamma(-Nz+1/2),  |arg(-z)| < pi
/// and the reflected forms D*(z) = D(1-z), D~*(z) = D~(1-z).
enum class DSelector { D, Dtilde, Dstar, DtildeStar };

/// Evaluates the selected function in log space. z = 0 (z = 1 for the starred
/// forms) returns the analytic limit: D -> 1/sqrt(2), D~ -> sqrt(2).
LogComplex d_eval(const Cplx& z, unsigned N, DSelector which, const PrecisionCtx& ctx);

}  // namespace dcheb
