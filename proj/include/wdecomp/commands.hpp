#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdecomp {

// Exit codes shared by every subcommand: 0 success, 2 invalid input,
// 3 verification or algorithm failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

struct DecomposeArgs {
    std::vector<int> dims;
    double tolerance = -1.0;  // < 0: default / WDECOMP_TOL
    std::string out_path;
    std::string format = "json";
    bool scaled = false;
    int parallel = 0;
    std::string mode = "hybrid";
};
int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::string path;
    double tolerance = -1.0;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct SylvesterArgs {
    std::vector<double> coeffs;  // a_0..a_e
    std::string format = "text";
};
int cmd_sylvester(const SylvesterArgs& args, std::ostream& out, std::ostream& err);

struct BorderArgs {
    std::vector<int> dims;
    double eps = 1e-4;
};
int cmd_border(const BorderArgs& args, std::ostream& out, std::ostream& err);

struct ReportArgs {
    int kmax = 3;
    int dmax = 4;
    std::string out_path;
};
int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);

}  // namespace wdecomp
