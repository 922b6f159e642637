#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "verify/commands.hpp"
#include "verify/suites.hpp"

#ifndef ELLPL_VERSION
#define ELLPL_VERSION "0.0.0"
#endif

using namespace ellpl;

int main(int argc, char** argv) {
    CLI::App app{"Elliptic functions, D-variant polylogarithm sections and Eisenstein classes"};
    app.set_version_flag("--version", ELLPL_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Precision prec;
    app.add_option("--q-tail-eps", prec.q_tail_eps, "Series truncation threshold");
    app.add_option("--quad-points", prec.quad_points, "Trapezoid nodes per contour");
    app.add_option("--lattice-radius", prec.lattice_radius, "Direct lattice-sum box radius");
    app.add_option("--deriv-radius-frac", prec.deriv_radius_frac,
                   "Contour radius as a fraction of the distance to the nearest pole");

    verify::EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function");
    eval->add_option("function", ev.function,
                     "theta, J, r_k, s_D, e_k, E, F, DF, A_n or eis_class")
        ->required();
    eval->add_option("--z", ev.z, "Complex literal a+bi");
    eval->add_option("--w", ev.w, "Complex literal a+bi");
    eval->add_option("--tau", ev.tau, "Point of the upper half plane, a+bi");
    eval->add_option("--k", ev.k, "Weight or coefficient index");
    eval->add_option("--a", ev.a);
    eval->add_option("--b", ev.b);
    eval->add_option("--x", ev.x, "First torsion coordinate for E");
    eval->add_option("--y", ev.y, "Second torsion coordinate for E");
    eval->add_option("--N", ev.N, "Level");
    eval->add_option("--D", ev.D, "D-variant multiplier");
    eval->add_option("--n", ev.n, "Degree");
    eval->add_option("--gamma", ev.gamma, "a,b,c,d of the Gamma(N) matrix for A_n");
    eval->add_option("--shift", ev.shift, "m,n of the deck shift for A_n");
    eval->add_option("--kind", ev.kind,
                     "plain, relative-1form, absolute-1form or absolute-2form for A_n");

    verify::RunConfig rc;
    std::string suite;
    CLI::App* ver = app.add_subcommand("verify", "Run a named verification suite");
    ver->add_option("suite", suite, "Suite name")->required();
    ver->add_option("--seed", rc.seed, "Sampling seed");
    ver->add_option("--samples", rc.samples, "Sample count override");
    ver->add_option("--n", rc.n, "Restrict to one degree");
    ver->add_option("--N", rc.N, "Restrict to one level");
    ver->add_option("--D", rc.D, "Restrict to one D");

    verify::TableArgs tb;
    std::string out;
    CLI::App* table = app.add_subcommand("table", "Tabulate a function over a tau grid");
    table->add_option("function", tb.function, "theta, e_k, s_D, F, DF or eis_class")->required();
    table->add_option("--tau-re", tb.tau_re, "Real part shared by all tau");
    table->add_option("--im-from", tb.im_from, "First Im(tau)");
    table->add_option("--im-to", tb.im_to, "Last Im(tau)");
    table->add_option("--im-step", tb.im_step, "Im(tau) increment");
    table->add_option("--z", tb.z);
    table->add_option("--k", tb.k);
    table->add_option("--a", tb.a);
    table->add_option("--b", tb.b);
    table->add_option("--N", tb.N);
    table->add_option("--D", tb.D);
    table->add_option("--n", tb.n);
    table->add_option("--format", tb.format, "csv or json");
    table->add_option("--out", out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        prec.validate();
        if (eval->parsed()) {
            std::cout << verify::evaluate(ev, prec).dump(2) << "\n";
            return 0;
        }
        if (ver->parsed()) {
            rc.prec = prec;
            const verify::SuiteReport rep = verify::run_suite(suite, rc);
            std::cout << verify::to_json(rep).dump(2) << "\n";
            return rep.passed() ? 0 : 1;
        }
        if (table->parsed()) {
            const std::string text = verify::make_table(tb, prec, ELLPL_VERSION);
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
                f << text;
                if (!f) throw std::runtime_error("write to '" + out + "' failed");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
