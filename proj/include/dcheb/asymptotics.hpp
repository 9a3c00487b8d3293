#pragma once

#include "dcheb/exact.hpp"
#include "dcheb/params.hpp"

#include <stdexcept>
#include <utility>

namespace dcheb {

enum class FormulaKind {
    Left,            ///< global Airy form for Re z <= x0
    Right,           ///< global Airy form for Re z >= x0
    SimpleInner,     ///< simplified real form on (0, a - delta]
    SimpleNegative,  ///< simplified real form on (-inf, 0)
    PanWongPos,      ///< Pan-Wong fixed x > 0 comparator for t_n
    PanWongNeg,      ///< Pan-Wong fixed x < 0 comparator for t_n
    FixedXPos,       ///< fixed-x limit of the global form, x > 0
    FixedXNeg,       ///< fixed-x limit of the global form, x < 0
    Auto             ///< dispatch Left/Right on Re z vs x0 (tie -> Left)
};

/// Kebab-case name used in CSV/JSON output ("left", "simple-inner", ...).
const char* formula_name(FormulaKind k);

/// One grid point of an error map: exact oracle vs asymptotic value. flagged_zero
/// marks points where the exact value sits under the structural-zero floor and
/// rel_err is measured against that floor instead.
struct ErrorRecord {
    Cplx z;
    unsigned n;
    unsigned N;
    FormulaKind formula;
    LogComplex exact;
    LogComplex asym;
    Real rel_err;
    bool flagged_zero;
};

/// The two oracle passes (at p and p+128 bits) disagreed: the requested point
/// needs more working precision than the policy granted.
struct OraclePrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monic value pi_{N,n}(N z - 1/2) by the left-half global Airy formula. Real z is
/// taken as the upper-side limit. Valid for Re z <= x0 plus an overlap margin.
LogComplex eval_left(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx);

/// Mirror form for Re z >= x0 minus an overlap margin.
LogComplex eval_right(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx);

/// Dispatch on Re z vs x0 (tie goes left); reports which formula ran.
std::pair<LogComplex, FormulaKind> eval_auto(const Cplx& z, const ChebParams& p,
                                             const PrecisionCtx& ctx);

enum class SimpleBranch { Inner, Negative };

/// Simplified real-axis leading forms: Inner on 0 < x <= a - delta with
/// delta = 0.05(b - a), Negative on x < 0.
LogComplex eval_simple(const Real& x, const ChebParams& p, const PrecisionCtx& ctx,
                       SimpleBranch branch);

/// Fixed-x comparators for t_n(x, N) itself (not the monic form): the Pan-Wong
/// closed forms and the fixed-x limits of the global formulas.
LogComplex pan_wong(const Real& x, unsigned n, unsigned N, FormulaKind which);

/// Exact oracle as LogComplex at >= max(ctx.bits, 4n+256) bits, verified by a
/// second pass at +128 bits agreeing to 2^-48. oracle_monic takes the plane
/// variable z (evaluates at N z - 1/2); oracle_t takes the polynomial argument.
LogComplex oracle_monic(const Cplx& z, unsigned n, unsigned N, const PrecisionCtx& ctx);
LogComplex oracle_t(const Cplx& w, unsigned n, unsigned N, const PrecisionCtx& ctx);

ErrorRecord error_record(const Cplx& z, const ChebParams& p, const PrecisionCtx& ctx,
                         FormulaKind formula);

}  // namespace dcheb
