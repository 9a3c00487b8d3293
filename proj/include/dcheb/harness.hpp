#pragma once

#include "dcheb/asymptotics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dcheb {

/// One CLI run, after flag/config/default merging. Coordinates are carried as
/// doubles (they come from command-line text) and promoted exactly into Real.
struct RunConfig {
    unsigned n = 0;
    unsigned N = 0;        // 0: derive from c as round(n/c)
    double c = 0;          // 0: derive from n/N
    bool has_z = false;
    double z_re = 0, z_im = 0;
    bool has_x = false;    // polynomial-variable abscissa, z = (x + 1/2)/N
    double x = 0;
    bool has_grid = false;
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
    unsigned rows = 0, cols = 0;
    std::vector<unsigned> n_list;   // converge
    FormulaKind formula = FormulaKind::Auto;
    bool exact_only = false;
    unsigned bits = 256;
    double x0 = 0;         // 0: default dispatch abscissa 1/2
    unsigned long long seed = 42;
    std::string out;       // empty: stdout
    bool json = false;
};

/// "auto", "left", ..., as accepted by --formula; throws invalid_argument.
FormulaKind parse_formula(const std::string& name);

/// Shell-safe complex literal: "a", "bi", "a+bi", "a-bi" (also "i", "-i").
std::pair<double, double> parse_complex(const std::string& text);

/// Least-squares slope of log y against log x; needs >= 2 points, x, y > 0.
Real fit_log_slope(const std::vector<std::pair<Real, Real>>& pts);

/// Subcommand drivers. Return a process exit code (0 ok, 2 invariant failure);
/// usage problems throw invalid_argument, oracle trouble throws
/// OraclePrecisionError, and the CLI maps those to exit codes 1 and 3.
int run_eval(const RunConfig& cfg, std::ostream& os);
int run_error_map(const RunConfig& cfg, std::ostream& os);
int run_converge(const RunConfig& cfg, std::ostream& os);
int run_invariants(const RunConfig& cfg, std::ostream& os);

/// Phase-function invariant block at one node-density ratio, reusable outside
/// run_invariants (the acceptance driver sweeps several ratios). Appends one
/// "PASS name" / "FAIL name detail" line per check and returns the fail count.
unsigned phase_invariant_block(double c, unsigned bits, unsigned long long seed,
                               std::ostream& os);

}  // namespace dcheb
