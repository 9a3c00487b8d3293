#include "CLI11.hpp"
#include "dcheb/harness.hpp"

#include <clocale>
#include <iostream>
#include <stdexcept>
#include <string>

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"discrete Chebyshev polynomials: exact oracles vs Airy-type asymptotics"};
    app.set_config("--config", "", "flat key=value config file (flags win)");
    app.require_subcommand(1);

    dcheb::RunConfig cfg;
    std::string z_text, formula_text = "auto", format_text = "csv";

    // Every option lives on the root app so a flat key=value config file can
    // address all of them; subcommands are verbs and fall through.
    app.add_option("--precision", cfg.bits, "working mantissa bits, >= 64")
        ->capture_default_str();
    app.add_option("--x0", cfg.x0, "left/right dispatch abscissa in (a,b); 0 selects 1/2");
    app.add_option("--seed", cfg.seed, "seed for randomized invariant sampling")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    app.add_option("--n", cfg.n, "degree");
    app.add_option("--N", cfg.N, "node count (omit to derive round(n/c))");
    app.add_option("--c", cfg.c, "ratio n/N in (0,1)");
    app.add_option("--formula", formula_text,
                   "auto left right simple-inner simple-negative "
                   "pan-wong-pos pan-wong-neg fixed-x-pos fixed-x-neg");
    CLI::Option* oz = app.add_option("--z", z_text, "plane point, shell-safe a+bi form");
    CLI::Option* ox =
        app.add_option("--x", cfg.x, "polynomial abscissa; maps to z = (x+1/2)/N");
    oz->excludes(ox);
    app.add_flag("--exact-only", cfg.exact_only, "eval: print the exact value and stop");
    CLI::Option* olist = app.add_option("--n-list", cfg.n_list,
                                        "converge: strictly increasing degrees")
                             ->delimiter(',');
    CLI::Option* grid[6] = {
        app.add_option("--re-min", cfg.re_min, "error-map: grid bounds"),
        app.add_option("--re-max", cfg.re_max, "error-map: grid bounds"),
        app.add_option("--im-min", cfg.im_min, "error-map: grid bounds"),
        app.add_option("--im-max", cfg.im_max, "error-map: grid bounds"),
        app.add_option("--rows", cfg.rows, "error-map: grid rows (imaginary direction)"),
        app.add_option("--cols", cfg.cols, "error-map: grid columns (real direction)"),
    };

    CLI::App* eval = app.add_subcommand("eval", "one-point evaluation against the oracle");
    CLI::App* emap = app.add_subcommand("error-map", "relative-error grid, row-major");
    CLI::App* conv = app.add_subcommand("converge", "error vs degree with fitted slope");
    CLI::App* inv = app.add_subcommand("invariants", "property suite across all modules");
    for (CLI::App* s : {eval, emap, conv, inv}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        cfg.formula = dcheb::parse_formula(formula_text);
        cfg.json = format_text == "json";
        if (oz->count()) {
            auto [re, im] = dcheb::parse_complex(z_text);
            cfg.has_z = true;
            cfg.z_re = re;
            cfg.z_im = im;
        }
        cfg.has_x = ox->count() > 0;
        if (emap->parsed()) {
            for (CLI::Option* o : grid)
                if (!o->count())
                    throw std::invalid_argument(
                        "error-map needs --re-min --re-max --im-min --im-max --rows --cols");
            cfg.has_grid = true;
        }
        if (conv->parsed() && !olist->count())
            throw std::invalid_argument("converge needs --n-list");

        if (eval->parsed()) return dcheb::run_eval(cfg, std::cout);
        if (emap->parsed()) return dcheb::run_error_map(cfg, std::cout);
        if (conv->parsed()) return dcheb::run_converge(cfg, std::cout);
        return dcheb::run_invariants(cfg, std::cout);
    } catch (const dcheb::OraclePrecisionError& e) {
        std::cerr << "oracle precision failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
