#include "wdecomp/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wdecomp/border.hpp"
#include "wdecomp/decompose.hpp"
#include "wdecomp/io.hpp"

namespace wdecomp {

namespace {

std::string complex_str(const Complex& z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

void print_terms_text(std::ostream& out, const Decomposition<Complex>& dec) {
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        const auto& t = dec.terms[i];
        out << "  term " << i + 1 << ": weight = " << complex_str(t.weight) << "; vectors";
        for (const auto& f : t.factors)
            out << " (" << complex_str(f[0]) << ", " << complex_str(f[1]) << ")";
        out << "\n";
    }
}

}  // namespace

int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
    DegreeProfile profile;
    try {
        profile = DegreeProfile(args.dims);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (args.format != "json" && args.format != "text") {
        err << "error: format must be json or text\n";
        return kExitUsage;
    }
    DecomposeOptions options;
    if (args.tolerance > 0) options.tolerance = args.tolerance;
    options.scaled = args.scaled;
    options.parallel = args.parallel;
    if (args.mode == "float")
        options.mode = ScalarMode::Float;
    else if (args.mode == "hybrid")
        options.mode = ScalarMode::Hybrid;
    else {
        err << "error: mode must be float or hybrid\n";
        return kExitUsage;
    }

    DecompositionReport report;
    try {
        report = decompose_w_product(profile, options);
    } catch (const VerificationError& e) {
        err << "error: verification failed, residual " << e.residual << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    out << "dims " << profile.str() << ": " << report.length << " terms (bound "
        << report.bound << ", prior bound " << report.bound + prior_bound_delta(profile)
        << "), residual " << std::scientific << std::setprecision(3) << report.residual
        << std::defaultfloat << ", " << std::setprecision(3) << report.elapsed_seconds
        << " s\n";

    DecompositionFile file;
    file.decomposition = report.decomposition;
    file.meta.anchors = default_anchors(profile).by_degree;
    file.meta.tolerance = options.tolerance;
    file.meta.residual = report.residual;
    if (args.format == "json") {
        if (args.out_path.empty())
            out << serialize_decomposition(file) << "\n";
        else
            write_decomposition_file(args.out_path, file);
    } else {
        if (args.out_path.empty()) {
            print_terms_text(out, report.decomposition);
        } else {
            std::ofstream os(args.out_path);
            if (!os) {
                err << "error: cannot open " << args.out_path << "\n";
                return kExitUsage;
            }
            print_terms_text(os, report.decomposition);
        }
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    DecompositionFile file;
    try {
        file = read_decomposition_file(args.path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const double tol = args.tolerance > 0 ? args.tolerance : default_tolerance();
    const VerifyResult v = verify_decomposition(file.decomposition, tol);
    out << "residual " << std::scientific << std::setprecision(6) << v.residual << " (tolerance "
        << tol << "): " << (v.pass ? "pass" : "FAIL") << "\n";
    return v.pass ? kExitOk : kExitFailure;
}

int cmd_sylvester(const SylvesterArgs& args, std::ostream& out, std::ostream& err) {
    if (args.coeffs.size() < 2) {
        err << "error: need at least two coefficients a_0,a_1,...\n";
        return kExitUsage;
    }
    BinaryForm<Complex> f;
    f.a.resize(static_cast<Eigen::Index>(args.coeffs.size()));
    for (std::size_t i = 0; i < args.coeffs.size(); ++i) f.a(i) = Complex(args.coeffs[i]);
    if (f.is_zero()) {
        err << "error: zero form\n";
        return kExitUsage;
    }

    SylvesterResult res;
    try {
        res = sylvester_decompose(f);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    if (args.format == "json") {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& r : res.root_pairs)
            roots.push_back({{r[0].real(), r[0].imag()}, {r[1].real(), r[1].imag()}});
        nlohmann::json kernelv = nlohmann::json::array();
        for (Eigen::Index j = 0; j < res.kernel_element.size(); ++j)
            kernelv.push_back({res.kernel_element(j).real(), res.kernel_element(j).imag()});
        nlohmann::json weights = nlohmann::json::array();
        for (const auto& t : res.terms)
            weights.push_back({t.weight.real(), t.weight.imag()});
        out << nlohmann::json{{"rank", res.rank},
                              {"kernel_element", kernelv},
                              {"roots", roots},
                              {"weights", weights},
                              {"residual", res.residual}}
                   .dump(2)
            << "\n";
    } else {
        out << "rank " << res.rank << "\n";
        out << "kernel element (c_j for du^{m-j} dv^j):";
        for (Eigen::Index j = 0; j < res.kernel_element.size(); ++j)
            out << " " << complex_str(res.kernel_element(j));
        out << "\nroots [alpha : beta]:\n";
        for (const auto& r : res.root_pairs)
            out << "  [" << complex_str(r[0]) << " : " << complex_str(r[1]) << "]\n";
        out << "weights:\n";
        for (const auto& t : res.terms) out << "  " << complex_str(t.weight) << "\n";
        out << "reconstruction residual " << std::scientific << std::setprecision(3)
            << res.residual << "\n";
    }
    return kExitOk;
}

int cmd_border(const BorderArgs& args, std::ostream& out, std::ostream& err) {
    DegreeProfile profile;
    try {
        profile = DegreeProfile(args.dims);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!(args.eps > 0)) {
        err << "error: eps must be positive\n";
        return kExitUsage;
    }
    const long long expected = 1ll << profile.k();
    const long long rank = flattening_rank(profile);
    out << "flattening rank " << rank << (rank == expected ? " = " : " != ") << "2^"
        << profile.k() << "\n";

    if (jet_eps_near_noise_floor(profile, args.eps))
        out << "warning: eps " << args.eps
            << " is near the floating-point noise floor; residuals are unreliable\n";

    bool ratios_ok = true;
    double prev = 0.0;
    out << "jet residuals:\n";
    for (int i = 0; i < 3; ++i) {
        const double eps = args.eps / (1 << i);
        const double res = jet_residual(profile, eps);
        out << "  eps " << std::scientific << std::setprecision(3) << eps << " -> residual "
            << res;
        if (i > 0) {
            const double ratio = res / prev;
            out << " (ratio " << std::defaultfloat << std::setprecision(3) << ratio << ")";
            if (!(ratio >= 0.4 && ratio <= 0.6)) ratios_ok = false;
        }
        out << "\n";
        prev = res;
    }
    return (rank == expected && ratios_ok) ? kExitOk : kExitFailure;
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
    if (args.kmax < 2 || args.dmax < 3 || args.kmax > 5 || args.dmax > 8) {
        err << "error: report grid must satisfy 2 <= kmax <= 5, 3 <= dmax <= 8\n";
        return kExitUsage;
    }
    std::ostringstream table;
    table << std::left << std::setw(14) << "dims" << std::setw(8) << "bound" << std::setw(8)
          << "prior" << std::setw(10) << "achieved" << std::setw(12) << "residual"
          << std::setw(10) << "flat-rank" << "\n";

    // one row per multiset of degrees; permuted profiles share their bound
    std::vector<std::vector<int>> dims_list;
    for (int k = 2; k <= args.kmax; ++k) {
        std::vector<int> cur(k, 3);
        while (true) {
            dims_list.push_back(cur);
            int j = k - 1;
            while (j >= 0 && cur[j] == args.dmax) --j;
            if (j < 0) break;
            ++cur[j];
            for (int l = j + 1; l < k; ++l) cur[l] = cur[j];
        }
    }
    for (const auto& dims : dims_list) {
        const DegreeProfile profile(dims);
        DecompositionReport rep;
        try {
            rep = decompose_w_product(profile);
        } catch (const std::exception& e) {
            err << "error: dims " << profile.str() << ": " << e.what() << "\n";
            return kExitFailure;
        }
        table << std::left << std::setw(14) << profile.str() << std::setw(8) << rep.bound
              << std::setw(8) << rep.bound + prior_bound_delta(profile) << std::setw(10)
              << rep.length << std::setw(12) << std::scientific << std::setprecision(2)
              << rep.residual << std::defaultfloat << std::setw(10)
              << flattening_rank(profile) << "\n";
    }
    out << table.str();
    if (!args.out_path.empty()) {
        std::ofstream os(args.out_path);
        if (!os) {
            err << "error: cannot open " << args.out_path << "\n";
            return kExitUsage;
        }
        os << table.str();
    }
    return kExitOk;
}

}  // namespace wdecomp
