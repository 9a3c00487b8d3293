#pragma once

#include "dcheb/equilibrium.hpp"

#include <optional>

namespace dcheb {

enum class Side { Upper, Lower, RealLimit };

/// Phase functions at a point, sharing one g-evaluation:
///   phi      = l/2 - g(z)
///   phi_star = phi +- (pi i/c)(1 - z)
///   phi_tilde= phi +- pi i (1 - z/c)
/// with + on the upper side, - on the lower. side records which limit was taken.
struct PhaseBundle {
    Cplx phi;
    Cplx phi_star;
    Cplx phi_tilde;
    Side side;
};

/// Off the real axis the side follows sign(Im z) and the argument is ignored.
/// On the real axis the upper limit is the default (side recorded as RealLimit);
/// pass Side::Lower for the lower limit. z = 0 and z = 1 are rejected.
PhaseBundle phase_functions(const Cplx& z, const Real& c,
                            std::optional<Side> side = std::nullopt);

enum class FMap { Tilde, Star };

/// The conformal Airy arguments f~ = (-(3/2) n phi~)^{2/3} (Tilde) and
/// f* = (-(3/2) n phi*)^{2/3} (Star). The 2/3 power takes the branch that makes
/// f~ real positive on (0,a), real negative on (a,b) and continuous off the cut;
/// f* mirrors this about the midpoint (positive on (b,1)). Exactly at the turning
/// point (a for Tilde, b for Star) the value is 0.
Cplx f_maps(const Cplx& z, unsigned n, const Real& c, FMap which);

}  // namespace dcheb
