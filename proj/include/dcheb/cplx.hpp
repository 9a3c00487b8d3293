#pragma once

#include "dcheb/precision.hpp"

namespace dcheb {

/// Complex number over Real. std::complex<Real> is not usable here (it assumes a
/// builtin floating type), so the handful of operations we need live in this struct.
struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    Cplx(double r, double i) : re(r), im(i) {}

    Cplx operator-() const { return {-re, -im}; }
    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator/(const Cplx& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
    Cplx& operator/=(const Cplx& o) { return *this = *this / o; }
    bool operator==(const Cplx& o) const { return re == o.re && im == o.im; }
};

inline Cplx operator+(const Real& a, const Cplx& b) { return Cplx(a) + b; }
inline Cplx operator-(const Real& a, const Cplx& b) { return Cplx(a) - b; }
inline Cplx operator*(const Real& a, const Cplx& b) { return {a * b.re, a * b.im}; }
inline Cplx operator/(const Real& a, const Cplx& b) { return Cplx(a) / b; }
inline Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real norm2(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

/// Principal log: Im in (-pi, pi].
inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal square root (upper side taken on the negative real axis).
inline Cplx sqrt(const Cplx& z) {
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    Real r = abs(z);
    if (z.re >= 0) {
        Real t = sqrt((r + z.re) / 2);
        return {t, z.im / (2 * t)};
    }
    Real u = sqrt((r - z.re) / 2);
    return {abs(z.im) / (2 * u), z.im >= 0 ? u : -u};
}

/// Principal power with real exponent: exp(p log z).
inline Cplx pow(const Cplx& z, const Real& p) { return exp(p * log(z)); }

inline bool isfinite(const Cplx& z) {
    return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im);
}

}  // namespace dcheb
