#pragma once

#include "dcheb/cplx.hpp"

namespace dcheb {

/// Bernoulli number B_m as an exact rational (cached; thread-safe).
Rational bernoulli(unsigned m);

/// log Gamma(w) for complex w off the pole set, by the Stirling series after
/// promoting the argument with log Gamma(w) = log Gamma(w+k) - sum_j log(w+j).
/// The imaginary part is one valid branch (exact mod 2pi); the real part is exact.
Cplx log_gamma(const Cplx& w);

}  // namespace dcheb
