#pragma once

#include "dcheb/log_complex.hpp"

namespace dcheb {

enum class AirySelector { Ai, AiPrime, Bi, BiPrime };

/// Complex Airy function value at configurable precision, as LogComplex (values
/// like Ai at arguments of size n^{2/3} span hundreds of orders of magnitude).
/// Maclaurin series inside the switch radius, asymptotic expansions outside, with
/// the sector rotation Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0 (w = e^{2 pi i/3}) and
/// the Bi connection formula covering the sectors the expansions miss.
LogComplex airy_eval(const Cplx& z, AirySelector which, const PrecisionCtx& ctx);

namespace detail {

/// Maclaurin-series path, valid at any z but only efficient (and well
/// conditioned) inside the switch radius. Exposed for cross-validation.
LogComplex airy_series_path(const Cplx& z, AirySelector which, unsigned bits);

/// Asymptotic-expansion path (with sector rotation), meaningful outside the
/// switch radius only. Exposed for cross-validation against the series path.
LogComplex airy_asym_path(const Cplx& z, AirySelector which, unsigned bits);

}  // namespace detail

}  // namespace dcheb
