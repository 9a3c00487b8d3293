#pragma once

#include "dcheb/log_complex.hpp"

namespace dcheb {

/// Ground-truth value: exact rational when the evaluation point is rational,
/// otherwise high-precision complex at the stated mantissa bits.
struct ExactValue {
    bool is_rational;
    Rational rat;
    Cplx num;
    unsigned bits;
};

ExactValue exact_from(const Rational& q);
ExactValue exact_from(const Cplx& z, unsigned bits);
LogComplex exact_to_lc(const ExactValue& v);

/// t_n(z,N) by the forward three-term recurrence
/// (m+1) t_{m+1} = 2(2m+1)(z - (N-1)/2) t_m - m(N^2 - m^2) t_{m-1},
/// t_0 = 1, t_1 = 2z - N + 1. Forward is stable: t_n dominates off the interval.
Rational t_recurrence(unsigned n, unsigned N, const Rational& z);
Cplx t_recurrence(unsigned n, unsigned N, const Cplx& z);
ExactValue t_recurrence(unsigned n, unsigned N, const ExactValue& z);

/// Independent oracle: the n-th forward difference of the product of two binomial
/// factors, expanded as (1/n!) sum_j (-1)^{n-j} C(n,j) (z+j)_falling_n (z+j-N)_falling_n.
Rational t_difference(unsigned n, unsigned N, const Rational& z);
ExactValue t_difference(unsigned n, unsigned N, const ExactValue& z);

/// Third oracle: terminating 3F2(-n, -z, n+1; -(N-1), 1; 1) scaled by a constant kappa.
/// kappa is discovered by matching t_recurrence at z = 0 and verified at z = 1;
/// a mismatch at z = 1 signals a Hahn-convention difference and throws.
Rational t_hahn(unsigned n, unsigned N, const Rational& z);
ExactValue t_hahn(unsigned n, unsigned N, const ExactValue& z);

/// Monic normalization pi_{N,n} = (n!^2/(2n)!) t_n.
Rational monic_scale(unsigned n);
Rational monic_pi(unsigned n, unsigned N, const Rational& z);
Cplx monic_pi(unsigned n, unsigned N, const Cplx& z);
ExactValue monic_pi(unsigned n, unsigned N, const ExactValue& z);

/// Exact discrete inner product sum_{k=0}^{N-1} t_n(k) t_m(k); the caller compares
/// against norm_closed_form, which is (N+n)!/((2n+1)(N-n-1)!) when n = m, else 0.
Rational norm_check(unsigned n, unsigned m, unsigned N);
Rational norm_closed_form(unsigned n, unsigned m, unsigned N);

}  // namespace dcheb
