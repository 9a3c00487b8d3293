#include "dcheb/exact.hpp"

#include <stdexcept>

namespace dcheb {
namespace {

void check_range(unsigned n, unsigned N) {
    if (n >= N) throw std::domain_error("t_n(z,N): requires n <= N-1");
}

template <typename T>
T recurrence_impl(unsigned n, unsigned N, const T& z) {
    T t0(1);
    if (n == 0) return t0;
    T t1 = 2 * z - T(int(N) - 1);
    for (unsigned m = 1; m < n; ++m) {
        T t2 = (2 * int(2 * m + 1) * (z - T(Rational(int(N) - 1, 2))) * t1 -
                int(m) * (T(int(N)) * int(N) - int(m) * int(m)) * t0) /
               int(m + 1);
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

// Cplx lacks the mixed int/Rational constructors the generic path uses.
Cplx recurrence_cplx(unsigned n, unsigned N, const Cplx& z) {
    Cplx t0{Real(1), Real(0)};
    if (n == 0) return t0;
    Cplx t1 = Real(2) * z - Cplx(Real(int(N) - 1));
    Real shift = Real(int(N) - 1) / 2;
    Real NN = Real(N) * Real(N);
    for (unsigned m = 1; m < n; ++m) {
        Cplx t2 = (Real(2 * (2 * m + 1)) * ((z - Cplx(shift)) * t1) -
                   Real(m) * (NN - Real(m) * Real(m)) * t0) /
                  Cplx(Real(m + 1));
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned j = 0; j < k; ++j) {
        r *= (n - j);
        r /= (j + 1);
    }
    return r;
}

Rational hahn_series(unsigned n, unsigned N, const Rational& z) {
    // 3F2(-n, -z, n+1; -(N-1), 1; 1): the lattice {0..N-1} is the standard Hahn
    // family with parameter N-1. term_0 = 1, ratio (k-n)(k-z)(n+1+k)/((k-N+1)(k+1)^2).
    Rational sum = 1, term = 1;
    for (unsigned k = 0; k < n; ++k) {
        term *= Rational(int(k) - int(n)) * (Rational(int(k)) - z) * Rational(int(n) + 1 + int(k));
        term /= Rational(int(k) - int(N) + 1) * Rational(int(k) + 1) * Rational(int(k) + 1);
        sum += term;
    }
    return sum;
}

}  // namespace

ExactValue exact_from(const Rational& q) { return {true, q, Cplx{}, 0}; }
ExactValue exact_from(const Cplx& z, unsigned bits) { return {false, Rational(0), z, bits}; }

LogComplex exact_to_lc(const ExactValue& v) {
    if (v.is_rational) {
        if (v.rat == 0) return lc_zero();
        Real num(numerator(v.rat));
        Real den(denominator(v.rat));
        return {log(abs(num)) - log(den), v.rat > 0 ? Real(0) : const_pi()};
    }
    return lc_from(v.num);
}

Rational t_recurrence(unsigned n, unsigned N, const Rational& z) {
    check_range(n, N);
    return recurrence_impl<Rational>(n, N, z);
}

Cplx t_recurrence(unsigned n, unsigned N, const Cplx& z) {
    check_range(n, N);
    return recurrence_cplx(n, N, z);
}

ExactValue t_recurrence(unsigned n, unsigned N, const ExactValue& z) {
    if (z.is_rational) return exact_from(t_recurrence(n, N, z.rat));
    return exact_from(t_recurrence(n, N, z.num), z.bits);
}

Rational t_difference(unsigned n, unsigned N, const Rational& z) {
    check_range(n, N);
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Rational p = 1;
        for (unsigned i = 0; i < n; ++i) p *= z + int(j) - int(i);
        for (unsigned i = 0; i < n; ++i) p *= z + int(j) - int(N) - int(i);
        Rational term = Rational(binomial(n, j)) * p;
        sum += ((n - j) % 2 == 0) ? term : -term;
    }
    return sum / Rational(factorial(n));
}

ExactValue t_difference(unsigned n, unsigned N, const ExactValue& z) {
    if (z.is_rational) return exact_from(t_difference(n, N, z.rat));
    check_range(n, N);
    Cplx sum{Real(0), Real(0)};
    for (unsigned j = 0; j <= n; ++j) {
        Cplx p{Real(1), Real(0)};
        for (unsigned i = 0; i < n; ++i) p *= z.num + Cplx(Real(int(j) - int(i)));
        for (unsigned i = 0; i < n; ++i) p *= z.num + Cplx(Real(int(j) - int(N) - int(i)));
        Real coeff(binomial(n, j));
        sum += ((n - j) % 2 == 0 ? coeff : -coeff) * p;
    }
    return exact_from(sum / Cplx(Real(factorial(n))), z.bits);
}

Rational t_hahn(unsigned n, unsigned N, const Rational& z) {
    check_range(n, N);
    Rational kappa = t_recurrence(n, N, Rational(0));  // 3F2 sum collapses to 1 at z = 0
    if (kappa * hahn_series(n, N, Rational(1)) != t_recurrence(n, N, Rational(1)))
        throw std::runtime_error("t_hahn: kappa match fails at z = 1 (convention mismatch)");
    return kappa * hahn_series(n, N, z);
}

ExactValue t_hahn(unsigned n, unsigned N, const ExactValue& z) {
    if (z.is_rational) return exact_from(t_hahn(n, N, z.rat));
    throw std::invalid_argument("t_hahn: rational path only");
}

Rational monic_scale(unsigned n) {
    Integer f = factorial(n);
    return Rational(f * f) / Rational(factorial(2 * n));
}

Rational monic_pi(unsigned n, unsigned N, const Rational& z) {
    return monic_scale(n) * t_recurrence(n, N, z);
}

Cplx monic_pi(unsigned n, unsigned N, const Cplx& z) {
    Rational s = monic_scale(n);
    Real scale = Real(numerator(s)) / Real(denominator(s));
    return scale * t_recurrence(n, N, z);
}

ExactValue monic_pi(unsigned n, unsigned N, const ExactValue& z) {
    if (z.is_rational) return exact_from(monic_pi(n, N, z.rat));
    return exact_from(monic_pi(n, N, z.num), z.bits);
}

Rational norm_check(unsigned n, unsigned m, unsigned N) {
    check_range(n, N);
    check_range(m, N);
    Rational sum = 0;
    for (unsigned k = 0; k < N; ++k) {
        Rational zk{int(k)};
        sum += t_recurrence(n, N, zk) * t_recurrence(m, N, zk);
    }
    return sum;
}

Rational norm_closed_form(unsigned n, unsigned m, unsigned N) {
    if (n != m) return Rational(0);
    return Rational(factorial(N + n)) / (Rational(2 * int(n) + 1) * Rational(factorial(N - n - 1)));
}

}  // namespace dcheb
