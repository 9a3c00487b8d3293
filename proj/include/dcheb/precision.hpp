#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>

namespace dcheb {

/// Arbitrary-precision real, precision chosen at runtime (bits).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

namespace detail {
inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.3010299956639812) + 3;
}
inline unsigned& tracked_bits() {
    thread_local unsigned bits = 256;
    return bits;
}
}  // namespace detail

/// Sets the working precision for all Real values created in scope; restores on exit.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits)
        : old_digits_(Real::default_precision()), old_bits_(detail::tracked_bits()) {
        Real::default_precision(detail::bits_to_digits10(bits));
        detail::tracked_bits() = bits;
    }
    ~PrecisionGuard() {
        Real::default_precision(old_digits_);
        detail::tracked_bits() = old_bits_;
    }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned old_digits_;
    unsigned old_bits_;
};

/// Mantissa bits most recently set through PrecisionGuard on this thread.
inline unsigned working_bits() { return detail::tracked_bits(); }

/// Working precision (bits) and acceptance tolerance for floating evaluation.
struct PrecisionCtx {
    unsigned bits;
    Real tol;
};

/// tol defaults to 2^(-bits/2).
inline PrecisionCtx make_ctx(unsigned bits, const Real& tol = Real(0)) {
    if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
    PrecisionCtx ctx{bits, tol};
    if (ctx.tol <= 0) ctx.tol = ldexp(Real(1), -static_cast<int>(bits / 2));
    return ctx;
}

/// pi at the current working precision (cached per precision, per thread).
inline const Real& const_pi() {
    thread_local unsigned cached_bits = 0;
    thread_local Real value;
    if (cached_bits != detail::tracked_bits()) {
        value = 4 * atan(Real(1));
        cached_bits = detail::tracked_bits();
    }
    return value;
}

}  // namespace dcheb
