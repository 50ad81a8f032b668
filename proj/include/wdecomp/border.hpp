#pragma once

#include <vector>

#include "wdecomp/coord_tensor.hpp"
#include "wdecomp/exact_linalg.hpp"
#include "wdecomp/indexing.hpp"
#include "wdecomp/rational.hpp"

namespace wdecomp {

// Flattening Sym^2 x ... x Sym^2 -> Sym^{d_1-2}* x ... x Sym^{d_k-2}* of the
// W product. Rows are dual monomials prod_j a_{j,0}^{e_j} a_{j,1}^{2-e_j}
// (a_{j,0} dual to the linear variable of the factor), columns the target
// monomials recorded by their x-exponent per factor. Entries are the exact
// integer derivative-pairing coefficients.
struct FlatteningMatrix {
    DenseMat<Rational> entries;            // 3^k rows, prod (d_j - 1) columns
    std::vector<MultiIndex> row_ops;       // e_j in {0,1,2} per factor
    std::vector<MultiIndex> col_monomials; // x-exponent in [0, d_j-2] per factor
};

[[nodiscard]] FlatteningMatrix flattening_matrix(const DegreeProfile& profile);

// Exact rank over the rationals; equals 2^k for every valid profile.
[[nodiscard]] long long flattening_rank(const DegreeProfile& profile);

// The 2^k-term family prod_j (d_j eps)^{-1} ((x_j + eps y_j)^{x d_j} - x_j^{x d_j});
// its residual against W is O(eps), witnessing border rank <= 2^k.
[[nodiscard]] Decomposition<Complex> jet_family(const DegreeProfile& profile, double eps);

[[nodiscard]] double jet_residual(const DegreeProfile& profile, double eps);

// Single-factor reduction (d eps)^{-1} ((x + eps y)^{x d} - x^{x d}) vs W_d.
[[nodiscard]] double single_factor_jet_residual(int d, double eps);

// eps values whose predicted residual sinks below ~1e3 machine epsilons give
// meaningless convergence ratios.
[[nodiscard]] bool jet_eps_near_noise_floor(const DegreeProfile& profile, double eps);

}  // namespace wdecomp
