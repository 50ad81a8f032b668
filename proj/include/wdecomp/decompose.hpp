#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wdecomp/binary_forms.hpp"
#include "wdecomp/coord_tensor.hpp"
#include "wdecomp/indexing.hpp"

namespace wdecomp {

// 2^{k-1} (d_1 + ... + d_k - 2k + 2)
[[nodiscard]] long long bound_value(const DegreeProfile& profile);

// 2^k (k-1), the improvement over the previously known bound; the prior bound
// is bound_value + prior_bound_delta.
[[nodiscard]] long long prior_bound_delta(const DegreeProfile& profile);

// Default verification tolerance 1e-8; the WDECOMP_TOL environment variable
// overrides it.
[[nodiscard]] double default_tolerance();

enum class ScalarMode {
    Float,   // double end to end
    Hybrid,  // exact rationals for system, signs and kernels; doubles for roots
};

struct DecomposeOptions {
    double tolerance = default_tolerance();
    std::optional<AnchorChoice> anchors;
    ScalarMode mode = ScalarMode::Hybrid;
    int parallel = 0;  // worker cap for the per-J pipelines; 0 = all cores
    bool scaled = false;  // decompose prod d_j * W instead of W
    NumericOptions numeric{};
};

struct VerificationError : std::runtime_error {
    explicit VerificationError(double res)
        : std::runtime_error("reconstruction residual " + std::to_string(res) +
                             " exceeds tolerance"),
          residual(res) {}
    double residual;
};

struct DecompositionReport {
    Decomposition<Complex> decomposition;
    long long length = 0;
    long long bound = 0;
    double residual = 0.0;
    std::vector<std::pair<SubsetJ, int>> per_j_ranks;
    double elapsed_seconds = 0.0;
};

// End-to-end pipeline: sparse closed-form solution, per-J assembly and
// sigma-corrected Sylvester decomposition (cached over the at most four sign
// variants), pullback to curve points, global verification.
[[nodiscard]] DecompositionReport decompose_w_product(const DegreeProfile& profile,
                                                      const DecomposeOptions& options = {});

struct VerifyResult {
    bool pass = false;
    double residual = 0.0;
};

[[nodiscard]] VerifyResult verify_decomposition(const Decomposition<Complex>& dec,
                                                double tolerance);

}  // namespace wdecomp
