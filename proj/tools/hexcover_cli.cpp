#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hexcover/covering.hpp"
#include "hexcover/elliptic.hpp"
#include "hexcover/gamma.hpp"
#include "hexcover/gridio.hpp"
#include "hexcover/verify.hpp"

using namespace hexcover;

namespace {

std::string eis_str(EisensteinInt x) {
    std::string s;
    if (x.u != 0 || x.v == 0)
        s = std::to_string(x.u);
    if (x.v != 0) {
        if (x.v > 0 && !s.empty())
            s += '+';
        if (x.v == -1)
            s += '-';
        else if (x.v != 1)
            s += std::to_string(x.v);
        s += 'w';
    }
    return s;
}

int run_eval(const std::string& fn_name, const std::string& point_text,
             double tol, int cutoff) {
    cplx z = parse_complex(point_text);
    GridFunction f = parse_function(fn_name);
    if (cutoff > 0 && f != GridFunction::wp)
        throw std::invalid_argument("--cutoff only applies to wp");
    cplx value;
    bool have_residual = false;
    double residual = 0.0;
    switch (f) {
    case GridFunction::wp:
    case GridFunction::wp_prime: {
        EllipticContext ctx = make_context(EXCISED_W1, EXCISED_W2);
        if (cutoff > 0)
            value = wp_direct_oracle(EXCISED_W1, EXCISED_W2, z, cutoff);
        else
            value = f == GridFunction::wp ? wp(ctx, z) : wp_prime(ctx, z);
        break;
    }
    case GridFunction::lambda:
        value = modular_lambda(ModularPoint(z));
        break;
    case GridFunction::j:
        value = klein_j(ModularPoint(z));
        break;
    case GridFunction::phi: {
        CoverContext ctx = make_cover_context();
        if (tol > 0)
            ctx.residual_target = tol;
        PhiResult r = phi(z, ctx);
        value = r.value;
        residual = r.residual;
        have_residual = true;
        break;
    }
    case GridFunction::phi_prime: {
        CoverContext ctx = make_cover_context();
        if (tol > 0)
            ctx.residual_target = tol;
        value = phi_prime(z, ctx);
        break;
    }
    }
    std::printf("value = %s\n", format_complex(value).c_str());
    if (have_residual)
        std::printf("residual = %.3g\n", residual);
    return 0;
}

int run_verify(const std::string& suite) {
    std::vector<RunReport> reports;
    if (suite == "all") {
        reports = verify_all();
    } else if (suite == "group") {
        reports.push_back(verify_group());
    } else if (suite == "elliptic") {
        reports.push_back(verify_elliptic());
    } else if (suite == "cover") {
        reports.push_back(verify_cover(make_cover_context()));
    } else if (suite == "sl3") {
        reports.push_back(verify_sl3());
    } else {
        throw std::invalid_argument("unknown suite: " + suite +
                                    " (expected group, elliptic, cover, sl3 or all)");
    }
    bool all_ok = true;
    for (const RunReport& r : reports) {
        print_report(r, std::cout);
        all_ok = all_ok && r.failed() == 0;
    }
    return all_ok ? 0 : 1;
}

int run_group(const std::string& word_text) {
    Word w = word_from_string(word_text);
    GammaElt m = word_to_matrix(w);
    AffineMap img = psi_word(w);
    NormalForm nf = normal_form(img);
    std::printf("word = %s\n", word_to_string(w).c_str());
    std::printf("matrix = [[%lld, %lld], [%lld, %lld]]\n",
                static_cast<long long>(m.a), static_cast<long long>(m.b),
                static_cast<long long>(m.c), static_cast<long long>(m.d));
    std::printf("linear = %s\n", eis_str(img.linear).c_str());
    std::printf("trans = %s\n", eis_str(img.trans).c_str());
    std::printf("normal = (%lld, %lld, %d)\n", static_cast<long long>(nf.p),
                static_cast<long long>(nf.q), nf.k);
    std::printf("ell = %d\n", ell_character(m));
    std::printf("in_N = %s\n", in_N(m) ? "true" : "false");
    return 0;
}

int run_grid(const std::string& fn_name, const GridSpec& spec,
             const std::string& out_path, const std::string& ppm_path,
             double tol) {
    GridFunction f = parse_function(fn_name);
    CoverContext ctx = make_cover_context();
    if (tol > 0)
        ctx.residual_target = tol;
    std::vector<GridNode> nodes = evaluate_grid(f, spec, ctx);
    write_csv(out_path, nodes);
    if (!ppm_path.empty())
        write_ppm(ppm_path, spec, nodes);
    std::size_t failed = 0;
    for (const GridNode& n : nodes)
        if (!n.ok) ++failed;
    std::printf("wrote %zu rows to %s", nodes.size(), out_path.c_str());
    if (failed > 0)
        std::printf(" (%zu unevaluated)", failed);
    std::printf("\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexagonal covering map: evaluation, verification, group calculus, grids"};
    app.require_subcommand(1);

    std::string eval_fn, eval_point;
    double eval_tol = 0.0;
    int eval_cutoff = 0;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->add_option("function", eval_fn, "wp, wp-prime, lambda, j, phi, phi-prime")
        ->required();
    eval->add_option("point", eval_point, "complex literal, e.g. 0.3+1.1i")->required();
    eval->add_option("--tol", eval_tol, "Newton residual target for phi/phi-prime");
    eval->add_option("--cutoff", eval_cutoff,
                     "evaluate wp by the truncated lattice sum with this cutoff");

    std::string verify_suite = "all";
    CLI::App* ver = app.add_subcommand("verify", "run an invariant suite");
    ver->add_option("suite", verify_suite, "group, elliptic, cover, sl3 or all");

    std::string group_word;
    CLI::App* grp = app.add_subcommand("group", "analyze a word in S, T, t (t = T^-1)");
    grp->add_option("word", group_word)->required();

    std::string grid_fn, grid_out, grid_ppm;
    GridSpec spec;
    double grid_tol = 0.0;
    CLI::App* grid = app.add_subcommand("grid", "evaluate on a grid, write CSV (and PPM)");
    grid->add_option("function", grid_fn)->required();
    grid->add_option("--re-min", spec.re_min)->required();
    grid->add_option("--re-max", spec.re_max)->required();
    grid->add_option("--im-min", spec.im_min)->required();
    grid->add_option("--im-max", spec.im_max)->required();
    grid->add_option("--nx", spec.nx)->required();
    grid->add_option("--ny", spec.ny)->required();
    grid->add_option("--out", grid_out, "CSV output path")->required();
    grid->add_option("--ppm", grid_ppm, "optional PPM image path");
    grid->add_option("--tol", grid_tol, "Newton residual target for phi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_fn, eval_point, eval_tol, eval_cutoff);
        if (ver->parsed())
            return run_verify(verify_suite);
        if (grp->parsed())
            return run_group(group_word);
        if (grid->parsed())
            return run_grid(grid_fn, spec, grid_out, grid_ppm, grid_tol);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
