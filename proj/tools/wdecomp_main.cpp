#include <iostream>

#include <CLI11.hpp>

#include "wdecomp/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Partially symmetric decompositions of W-state products"};
    app.require_subcommand(1);

    wdecomp::DecomposeArgs dargs;
    auto* dec = app.add_subcommand("decompose",
                                   "Compute and verify a decomposition of W_{d1} x ... x W_{dk}");
    dec->add_option("--dims", dargs.dims, "degrees d1,d2,...")->required()->delimiter(',');
    dec->add_option("--tol", dargs.tolerance, "verification tolerance");
    dec->add_option("--out", dargs.out_path, "output path");
    dec->add_option("--format", dargs.format, "json|text")->default_str("json");
    dec->add_flag("--scaled", dargs.scaled, "decompose prod(dj) * W instead of W");
    dec->add_option("--parallel", dargs.parallel, "worker cap for per-J pipelines");
    dec->add_option("--mode", dargs.mode, "float|hybrid")->default_str("hybrid");

    wdecomp::VerifyArgs vargs;
    auto* ver = app.add_subcommand("verify", "Re-verify a stored decomposition file");
    ver->add_option("path", vargs.path, "decomposition json")->required();
    ver->add_option("--tol", vargs.tolerance, "verification tolerance");

    wdecomp::SylvesterArgs sargs;
    auto* syl = app.add_subcommand("sylvester", "Waring rank and decomposition of a binary form");
    syl->add_option("--coeffs", sargs.coeffs, "a0,a1,...,ae (binomial-basis coefficients)")
        ->required()
        ->delimiter(',');
    syl->add_option("--format", sargs.format, "text|json")->default_str("text");

    wdecomp::BorderArgs bargs;
    auto* bor = app.add_subcommand("border", "Border-rank certificate: flattening + jet family");
    bor->add_option("--dims", bargs.dims, "degrees d1,d2,...")->required()->delimiter(',');
    bor->add_option("--eps", bargs.eps, "jet parameter");

    wdecomp::ReportArgs rargs;
    auto* repo = app.add_subcommand("report", "Bound/achieved table over a degree grid");
    repo->add_option("--kmax", rargs.kmax, "largest factor count");
    repo->add_option("--dmax", rargs.dmax, "largest degree");
    repo->add_option("--out", rargs.out_path, "also write the table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wdecomp::kExitUsage;
    }

    if (dec->parsed()) return wdecomp::cmd_decompose(dargs, std::cout, std::cerr);
    if (ver->parsed()) return wdecomp::cmd_verify(vargs, std::cout, std::cerr);
    if (syl->parsed()) return wdecomp::cmd_sylvester(sargs, std::cout, std::cerr);
    if (bor->parsed()) return wdecomp::cmd_border(bargs, std::cout, std::cerr);
    if (repo->parsed()) return wdecomp::cmd_report(rargs, std::cout, std::cerr);
    return wdecomp::kExitUsage;
}
