#pragma once

#include "dcheb/cplx.hpp"

#include <random>

namespace dt {

/// Fixture pinning the working precision for a whole test case.
struct P256 {
    dcheb::PrecisionGuard guard{256};
};

/// Decimal literal at the current working precision.
inline dcheb::Real R(const char* s) { return dcheb::Real(s); }

inline bool close(const dcheb::Real& x, const dcheb::Real& y, double tol) {
    return abs(x - y) <= dcheb::Real(tol) * (1 + abs(y));
}
inline bool close(const dcheb::Cplx& x, const dcheb::Cplx& y, double tol) {
    return abs(x - y) <= dcheb::Real(tol) * (1 + abs(y));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed = 42) : gen(seed) {}
    double uni(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    dcheb::Cplx in_disc(double radius) {
        for (;;) {
            double re = uni(-radius, radius), im = uni(-radius, radius);
            if (re * re + im * im <= radius * radius)
                return {dcheb::Real(re), dcheb::Real(im)};
        }
    }
};

}  // namespace dt
