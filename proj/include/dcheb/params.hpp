#pragma once

#include "dcheb/precision.hpp"

#include <stdexcept>

namespace dcheb {

/// Problem instance: degree n, node count N, ratio c = n/N, turning points a, b,
/// and the dispatch abscissa x0 separating the left and right evaluation formulas.
struct ChebParams {
    unsigned n;
    unsigned N;
    Real c;
    Real a;
    Real b;
    Real x0;
};

inline std::pair<Real, Real> endpoints(const Real& c) {
    if (!(c > 0 && c < 1)) throw std::domain_error("endpoints: c must lie in (0,1)");
    Real s = sqrt(1 - c * c);
    return {(1 - s) / 2, (1 + s) / 2};
}

/// x0 = 0 requests the default dispatch abscissa 1/2 (the symmetry point).
inline ChebParams make_params(unsigned n, unsigned N, const Real& x0 = Real(0)) {
    if (n < 1 || n >= N) throw std::domain_error("make_params: requires 1 <= n <= N-1");
    ChebParams p;
    p.n = n;
    p.N = N;
    p.c = Real(n) / N;
    auto [a, b] = endpoints(p.c);
    p.a = a;
    p.b = b;
    p.x0 = (x0 == 0) ? Real(1) / 2 : x0;
    if (!(p.x0 > p.a && p.x0 < p.b))
        throw std::domain_error("make_params: x0 must lie in (a,b)");
    return p;
}

}  // namespace dcheb
