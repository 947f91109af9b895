// Command line interface: transform, invert, eval, measure, cheb-form,
// verify.  Exit codes: 0 success (including a benign not_dvz answer),
// 2 input or validation error, 3 verification suite failure.
// CMVDVZ_QUAD_NODES overrides the quadrature node count.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmvdvz/cmvdvz.hpp"

namespace {

using cmvdvz::json;

struct FamilyArgs {
    std::string family = "free";
    double param = 0.0;
    std::string input_path;  // sequence JSON, overrides the family selector
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.family,
                    "free|bernstein_szego|lebesgue_mass|second_kind");
    cmd->add_option("--param", args.param, "family parameter (alpha or m)");
    cmd->add_option("--input", args.input_path,
                    "sequence JSON file ({\"alphas\": [...]} or family form)");
}

cmvdvz::VerblunskySequence resolve_sequence(const FamilyArgs& args, std::size_t n) {
    if (!args.input_path.empty())
        return cmvdvz::sequence_from_json(cmvdvz::load_json_file(args.input_path), n);
    return cmvdvz::family_by_name(args.family, args.param, std::max<std::size_t>(n, 1))
        .seq;
}

cmvdvz::FamilyInstance resolve_family(const FamilyArgs& args, std::size_t n_max) {
    return cmvdvz::family_by_name(args.family, args.param, n_max);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw cmvdvz::DomainError("cannot write " + path);
    out << text;
}

bool parse_grid(const std::string& grid, double& a, double& b, int& steps) {
    return std::sscanf(grid.c_str(), "%lf:%lf:%d", &a, &b, &steps) == 3 && steps >= 2;
}

int run(int argc, char** argv) {
    CLI::App app{"CMV <-> Jacobi transforms, orthogonal polynomials and measures"};
    app.require_subcommand(1);
    const cmvdvz::QuadratureSpec quad = cmvdvz::QuadratureSpec::from_env();

    // transform
    auto* transform = app.add_subcommand(
        "transform", "Jacobi matrix of the pencil lambda0 L + lambda1 M");
    FamilyArgs tr_args;
    add_family_options(transform, tr_args);
    double tr_l0 = 1.0, tr_l1 = 1.0;
    std::size_t tr_n = 8;
    std::string tr_out;
    transform->add_option("--lambda0", tr_l0, "coefficient of L (default 1)");
    transform->add_option("--lambda,--lambda1", tr_l1, "coefficient of M");
    transform->add_option("-n,--size", tr_n, "truncation size");
    transform->add_option("-o,--output", tr_out, "output path (default stdout)");
    transform->callback([&] {
        const auto seq = resolve_sequence(tr_args, tr_n);
        const auto jac = cmvdvz::dvz_forward(seq, tr_l0, tr_l1, tr_n);
        json out = cmvdvz::tridiagonal_to_json(jac);
        out["lambda0"] = tr_l0;
        out["lambda1"] = tr_l1;
        write_output(tr_out, out.dump(2) + "\n");
    });

    // invert
    auto* invert = app.add_subcommand(
        "invert", "recover (lambda0, lambda1, alphas) from a Jacobi matrix");
    std::string inv_path, inv_out;
    double inv_tol = 1e-9;
    invert->add_option("--jacobi", inv_path, "Jacobi JSON file")->required();
    invert->add_option("--tol", inv_tol, "circle residual tolerance");
    invert->add_option("-o,--output", inv_out, "output path (default stdout)");
    invert->callback([&] {
        const auto jac = cmvdvz::tridiagonal_from_json(cmvdvz::load_json_file(inv_path));
        json out;
        try {
            const auto inv = cmvdvz::dvz_invert(jac, inv_tol);
            if (inv.ok()) {
                out["lambda0"] = inv.params->lambda0;
                out["lambda1"] = inv.params->lambda1;
                out["alphas"] = inv.params->alphas.alphas();
                out["max_residual"] = inv.max_residual;
            } else {
                out["not_dvz"] = inv.reason;
                out["max_residual"] = inv.max_residual;
            }
        } catch (const cmvdvz::DegenerateInput& e) {
            out["not_dvz"] = std::string("underdetermined: ") + e.what();
            out["underdetermined"] = true;
        }
        write_output(inv_out, out.dump(2) + "\n");
    });

    // eval
    auto* eval = app.add_subcommand("eval", "tabulate q_0..q_n on a grid");
    FamilyArgs ev_args;
    add_family_options(eval, ev_args);
    double ev_lambda = 1.0;
    std::size_t ev_degree = 8;
    std::string ev_grid = "-2:2:41", ev_out;
    eval->add_option("--lambda", ev_lambda, "pencil parameter");
    eval->add_option("--degree", ev_degree, "highest degree");
    eval->add_option("--grid", ev_grid, "a:b:steps");
    eval->add_option("-o,--output", ev_out, "output path (default stdout)");
    eval->callback([&] {
        double a = 0, b = 0;
        int steps = 0;
        if (!parse_grid(ev_grid, a, b, steps))
            throw cmvdvz::DomainError("grid must be a:b:steps with steps >= 2");
        const auto seq = resolve_sequence(ev_args, ev_degree + 1);
        std::vector<cmvdvz::ChebForm> forms;
        for (std::size_t n = 0; n <= ev_degree; ++n)
            forms.push_back(cmvdvz::cheb_form(seq, n));
        std::string csv = "x";
        for (std::size_t n = 0; n <= ev_degree; ++n)
            csv += ",q" + std::to_string(n);
        csv += "\n";
        for (int i = 0; i < steps; ++i) {
            const double x = a + (b - a) * i / (steps - 1);
            csv += cmvdvz::format_double(x);
            for (const auto& form : forms)
                csv += "," + cmvdvz::format_double(cmvdvz::eval_q(form, ev_lambda, x));
            csv += "\n";
        }
        write_output(ev_out, csv);
    });

    // measure
    auto* measure = app.add_subcommand(
        "measure", "sample the pushforward measure nu_lambda");
    FamilyArgs me_args;
    add_family_options(measure, me_args);
    double me_lambda = 1.0;
    int me_samples = 200;
    std::string me_out, me_meta;
    measure->add_option("--lambda", me_lambda, "pencil parameter");
    measure->add_option("--samples", me_samples, "samples per segment")
        ->check(CLI::PositiveNumber);
    measure->add_option("-o,--output", me_out, "CSV output path (default stdout)");
    measure->add_option("--meta", me_meta, "metadata JSON path (default stdout)");
    measure->callback([&] {
        const auto fam = resolve_family(me_args, 8);
        const auto nu = cmvdvz::dvz_pushforward(fam.mu, me_lambda);
        std::string csv = "segment,x,density\n";
        int seg_index = 0;
        for (const auto& s : nu.segments()) {
            for (int i = 1; i <= me_samples; ++i) {
                const double x = s.lo + (s.hi - s.lo) * i / (me_samples + 1.0);
                csv += std::to_string(seg_index) + "," + cmvdvz::format_double(x) +
                       "," + cmvdvz::format_double(s.density(x)) + "\n";
            }
            ++seg_index;
        }
        csv += "atom_x,mass\n";
        for (const auto& a : nu.atoms())
            csv += cmvdvz::format_double(a.x) + "," + cmvdvz::format_double(a.mass) +
                   "\n";
        write_output(me_out, csv);
        const json meta =
            cmvdvz::line_measure_metadata(nu, cmvdvz::total_mass(nu, quad));
        write_output(me_meta, meta.dump(2) + "\n");
    });

    // cheb-form
    auto* chf = app.add_subcommand(
        "cheb-form", "Laurent coefficients and U-basis form of q_n");
    FamilyArgs ch_args;
    add_family_options(chf, ch_args);
    std::size_t ch_degree = 8;
    std::string ch_out;
    chf->add_option("--degree", ch_degree, "highest index");
    chf->add_option("-o,--output", ch_out, "output path (default stdout)");
    chf->callback([&] {
        const auto seq = resolve_sequence(ch_args, ch_degree + 1);
        const auto chis = cmvdvz::olpuc_all(seq, ch_degree);
        std::string out = cmvdvz::laurent_table_csv(chis);
        out += "n,j,Q,Qt\n";
        for (std::size_t n = 0; n <= ch_degree; ++n) {
            const auto form = cmvdvz::cheb_form(chis[n], n);
            const std::size_t rows = std::max(form.q.size(), form.qt.size());
            for (std::size_t j = 0; j < rows; ++j)
                out += std::to_string(n) + "," + std::to_string(j) + "," +
                       cmvdvz::format_double(j < form.q.size() ? form.q[j] : 0.0) +
                       "," +
                       cmvdvz::format_double(j < form.qt.size() ? form.qt[j] : 0.0) +
                       "\n";
        }
        write_output(ch_out, out);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a numerical check suite");
    std::string ve_suite = "all", ve_report;
    int exit_code = 0;
    cmvdvz::VerifyOptions ve_opt;
    ve_opt.quad = quad;
    verify->add_option("--suite", ve_suite,
                       "gram|mass|stieltjes|matrix-identities|diagram|all");
    verify->add_option("--family", ve_opt.family, "restrict to one family");
    verify->add_option("--param", ve_opt.param, "family parameter");
    verify->add_option("--lambda", ve_opt.lambda, "pencil parameter");
    verify->add_option("--size", ve_opt.size, "matrix size");
    verify->add_option("--tol", ve_opt.tol, "override tolerance");
    verify->add_option("--report", ve_report, "write JSON report to this path");
    verify->callback([&] {
        const auto report = cmvdvz::run_verify_suite(ve_suite, ve_opt);
        json jreport = json::array();
        for (const auto& c : report.checks) {
            std::printf("%-52s residual %.3e  tol %.1e  %s\n", c.name.c_str(),
                        c.residual, c.tol, c.pass ? "pass" : "FAIL");
            jreport.push_back({{"check", c.name},
                               {"residual", c.residual},
                               {"tol", c.tol},
                               {"pass", c.pass}});
        }
        if (!ve_report.empty()) write_output(ve_report, jreport.dump(2) + "\n");
        if (!report.all_pass()) exit_code = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cmvdvz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
