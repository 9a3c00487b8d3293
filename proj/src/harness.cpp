#include "dcheb/harness.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

namespace dcheb {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double dbl(const Real& r) { return static_cast<double>(r); }

double log10_mod(const LogComplex& v) {
    if (v.is_zero()) return -std::numeric_limits<double>::infinity();
    return dbl(v.log_mod / log(Real(10)));
}

struct Resolved {
    ChebParams p;
    PrecisionCtx ctx;
};

unsigned derive_node_count(unsigned n, unsigned N, double c) {
    if (N != 0) return N;
    if (!(c > 0 && c < 1))
        throw std::invalid_argument("need --N, or --c in (0,1) to derive N = round(n/c)");
    return static_cast<unsigned>(std::lround(n / c));
}

Resolved resolve(const RunConfig& cfg, unsigned n_override = 0) {
    unsigned n = n_override ? n_override : cfg.n;
    if (n == 0) throw std::invalid_argument("--n is required (and must be >= 1 here)");
    unsigned N = derive_node_count(n, n_override ? 0 : cfg.N, cfg.c);
    PrecisionCtx ctx = make_ctx(cfg.bits);
    PrecisionGuard guard(ctx.bits);
    return {make_params(n, N, Real(cfg.x0)), ctx};
}

Cplx point_of(const RunConfig& cfg, const ChebParams& p) {
    if (cfg.has_z == cfg.has_x)
        throw std::invalid_argument("give exactly one of --z and --x");
    if (cfg.has_z) return {Real(cfg.z_re), Real(cfg.z_im)};
    return {(Real(cfg.x) + Real(1) / 2) / p.N, Real(0)};
}

ordered_json record_json(const ErrorRecord& rec) {
    ordered_json j;
    j["re"] = dbl(rec.z.re);
    j["im"] = dbl(rec.z.im);
    j["n"] = rec.n;
    j["N"] = rec.N;
    j["formula"] = formula_name(rec.formula);
    j["log10_abs_exact"] = rec.exact.is_zero() ? ordered_json() : ordered_json(log10_mod(rec.exact));
    j["phase_exact"] = dbl(rec.exact.phase);
    j["log10_abs_asym"] = rec.asym.is_zero() ? ordered_json() : ordered_json(log10_mod(rec.asym));
    j["phase_asym"] = dbl(rec.asym.phase);
    j["rel_err"] = dbl(rec.rel_err);
    j["flagged_zero"] = rec.flagged_zero;
    return j;
}

const char* kCsvHeader =
    "re,im,n,N,formula,log10_abs_exact,phase_exact,log10_abs_asym,phase_asym,"
    "rel_err,flagged_zero";

void record_csv(std::ostream& os, const ErrorRecord& rec) {
    os << fmt(dbl(rec.z.re)) << ',' << fmt(dbl(rec.z.im)) << ',' << rec.n << ',' << rec.N
       << ',' << formula_name(rec.formula) << ',' << fmt(log10_mod(rec.exact)) << ','
       << fmt(dbl(rec.exact.phase)) << ',' << fmt(log10_mod(rec.asym)) << ','
       << fmt(dbl(rec.asym.phase)) << ',' << fmt(dbl(rec.rel_err)) << ','
       << (rec.flagged_zero ? 1 : 0) << '\n';
}

/// Opens cfg.out for writing, or returns the fallback stream.
class Sink {
  public:
    Sink(const RunConfig& cfg, std::ostream& fallback) {
        if (!cfg.out.empty()) {
            file_.open(cfg.out);
            if (!file_) throw std::invalid_argument("cannot open output path: " + cfg.out);
        } else {
            os_ = &fallback;
        }
    }
    std::ostream& os() { return os_ ? *os_ : file_; }

  private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

int exact_only_eval(const RunConfig& cfg, std::ostream& os) {
    if (cfg.n == 0 && cfg.N == 0)
        throw std::invalid_argument("exact evaluation of degree 0 needs an explicit --N");
    unsigned N = derive_node_count(cfg.n, cfg.N, cfg.c);
    if (cfg.n >= N) throw std::invalid_argument("exact evaluation needs n <= N-1");
    if (cfg.has_z == cfg.has_x)
        throw std::invalid_argument("give exactly one of --z and --x");
    double re = cfg.has_z ? cfg.z_re : cfg.x;
    double im = cfg.has_z ? cfg.z_im : 0;
    Sink sink(cfg, os);
    if (im == 0) {
        Rational q(re);  // dyadic rational, exact
        Rational t = t_recurrence(cfg.n, N, q);
        if (denominator(t) == 1)
            sink.os() << numerator(t) << "\n";
        else
            sink.os() << numerator(t) << "/" << denominator(t) << "\n";
        return 0;
    }
    PrecisionCtx ctx = make_ctx(std::max(cfg.bits, 4 * cfg.n + 256));
    PrecisionGuard guard(ctx.bits);
    LogComplex v = lc_from(t_recurrence(cfg.n, N, Cplx{Real(re), Real(im)}));
    sink.os() << "log10|t| = " << fmt(log10_mod(v)) << "  phase = " << fmt(dbl(v.phase))
              << "\n";
    return 0;
}

}  // namespace

FormulaKind parse_formula(const std::string& name) {
    for (FormulaKind k :
         {FormulaKind::Left, FormulaKind::Right, FormulaKind::SimpleInner,
          FormulaKind::SimpleNegative, FormulaKind::PanWongPos, FormulaKind::PanWongNeg,
          FormulaKind::FixedXPos, FormulaKind::FixedXNeg, FormulaKind::Auto})
        if (name == formula_name(k)) return k;
    throw std::invalid_argument("unknown formula: " + name);
}

std::pair<double, double> parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    auto parse_part = [](std::string s) -> double {
        if (s.empty() || s == "+") s = "1";
        else if (s == "-") s = "-1";
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad numeric literal: " + s);
        return v;
    };
    if (text.back() != 'i' && text.back() != 'I') return {parse_part(text), 0.0};
    std::string body = text.substr(0, text.size() - 1);
    // split at the last +/- that is not leading and not an exponent sign
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char ch = body[i];
        if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_part(body)};
    return {parse_part(body.substr(0, split)), parse_part(body.substr(split))};
}

Real fit_log_slope(const std::vector<std::pair<Real, Real>>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("fit_log_slope: need >= 2 points");
    Real sx(0), sy(0), sxx(0), sxy(0);
    for (const auto& [x, y] : pts) {
        if (!(x > 0 && y > 0)) throw std::invalid_argument("fit_log_slope: needs x, y > 0");
        Real lx = log(x), ly = log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    Real m = Real(static_cast<unsigned>(pts.size()));
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int run_eval(const RunConfig& cfg, std::ostream& os) {
    if (cfg.exact_only) return exact_only_eval(cfg, os);
    Resolved r = resolve(cfg);
    Cplx z = point_of(cfg, r.p);
    ErrorRecord rec = error_record(z, r.p, r.ctx, cfg.formula);
    Sink sink(cfg, os);
    if (cfg.json) {
        sink.os() << record_json(rec).dump(2) << "\n";
        return 0;
    }
    sink.os() << "z = " << fmt(dbl(rec.z.re)) << " + " << fmt(dbl(rec.z.im))
              << "i   n = " << rec.n << "  N = " << rec.N
              << "  formula = " << formula_name(rec.formula) << "\n"
              << "exact : log10|.| = " << fmt(log10_mod(rec.exact))
              << "  phase = " << fmt(dbl(rec.exact.phase)) << "\n"
              << "asym  : log10|.| = " << fmt(log10_mod(rec.asym))
              << "  phase = " << fmt(dbl(rec.asym.phase)) << "\n"
              << "rel_err = " << fmt(dbl(rec.rel_err))
              << (rec.flagged_zero ? "  (flagged: near structural zero)" : "") << "\n";
    return 0;
}

int run_error_map(const RunConfig& cfg, std::ostream& os) {
    if (!cfg.has_grid) throw std::invalid_argument("error-map needs a grid specification");
    if (cfg.rows == 0 || cfg.cols == 0)
        throw std::invalid_argument("grid dimensions must be positive");
    Resolved r = resolve(cfg);
    auto coord = [](double lo, double hi, unsigned i, unsigned count) {
        return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    };
    std::vector<ErrorRecord> recs(static_cast<size_t>(cfg.rows) * cfg.cols);
    unsigned workers = std::max(1u, std::min(cfg.rows, std::thread::hardware_concurrency()));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                PrecisionGuard guard(cfg.bits);
                unsigned r0 = cfg.rows * t / workers, r1 = cfg.rows * (t + 1) / workers;
                for (unsigned row = r0; row < r1; ++row) {
                    double im = coord(cfg.im_min, cfg.im_max, row, cfg.rows);
                    for (unsigned col = 0; col < cfg.cols; ++col) {
                        double re = coord(cfg.re_min, cfg.re_max, col, cfg.cols);
                        recs[static_cast<size_t>(row) * cfg.cols + col] =
                            error_record({Real(re), Real(im)}, r.p, r.ctx, cfg.formula);
                    }
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Sink sink(cfg, os);
    if (cfg.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rec : recs) arr.push_back(record_json(rec));
        sink.os() << arr.dump(2) << "\n";
        return 0;
    }
    sink.os() << kCsvHeader << "\n";
    for (const auto& rec : recs) record_csv(sink.os(), rec);
    return 0;
}

int run_converge(const RunConfig& cfg, std::ostream& os) {
    if (cfg.n_list.empty()) throw std::invalid_argument("converge needs --n-list");
    for (size_t i = 1; i < cfg.n_list.size(); ++i)
        if (cfg.n_list[i] <= cfg.n_list[i - 1])
            throw std::invalid_argument("--n-list must be strictly increasing");
    double c = cfg.c;
    if (!(c > 0)) {
        if (cfg.N == 0 || cfg.n == 0)
            throw std::invalid_argument("converge needs --c (or --n with --N to derive it)");
        c = static_cast<double>(cfg.n) / cfg.N;
    }
    struct Row {
        unsigned n, N;
        Real rel;
    };
    std::vector<Row> table;
    for (unsigned n : cfg.n_list) {
        unsigned N = static_cast<unsigned>(std::lround(n / c));
        PrecisionCtx ctx = make_ctx(cfg.bits);
        PrecisionGuard guard(ctx.bits);
        ChebParams p = make_params(n, N, Real(cfg.x0));
        Cplx z = point_of(cfg, p);
        ErrorRecord rec = error_record(z, p, ctx, cfg.formula);
        table.push_back({n, N, rec.rel_err});
    }
    bool have_slope = table.size() >= 2;
    Real slope(0);
    if (have_slope) {
        std::vector<std::pair<Real, Real>> pts;
        for (const auto& row : table) pts.push_back({Real(row.n), row.rel});
        slope = fit_log_slope(pts);
    }

    Sink sink(cfg, os);
    if (cfg.json) {
        ordered_json j;
        j["entries"] = ordered_json::array();
        for (size_t i = 0; i < table.size(); ++i) {
            ordered_json e;
            e["n"] = table[i].n;
            e["N"] = table[i].N;
            e["rel_err"] = dbl(table[i].rel);
            if (i > 0) e["ratio"] = dbl(table[i].rel / table[i - 1].rel);
            j["entries"].push_back(e);
        }
        if (have_slope) j["slope"] = dbl(slope);
        sink.os() << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.out.empty()) {
        sink.os() << "n      N      rel_err        ratio\n";
        for (size_t i = 0; i < table.size(); ++i) {
            char line[128];
            std::snprintf(line, sizeof line, "%-6u %-6u %-14.6g %s\n", table[i].n,
                          table[i].N, dbl(table[i].rel),
                          i ? fmt(dbl(table[i].rel / table[i - 1].rel)).c_str() : "-");
            sink.os() << line;
        }
        if (have_slope) sink.os() << "slope " << fmt(dbl(slope)) << "\n";
        return 0;
    }
    sink.os() << "n,N,rel_err,ratio,slope\n";
    for (size_t i = 0; i < table.size(); ++i) {
        sink.os() << table[i].n << ',' << table[i].N << ',' << fmt(dbl(table[i].rel)) << ','
                  << (i ? fmt(dbl(table[i].rel / table[i - 1].rel)) : std::string())
                  << ',' << (have_slope ? fmt(dbl(slope)) : std::string()) << '\n';
    }
    return 0;
}

}  // namespace dcheb
