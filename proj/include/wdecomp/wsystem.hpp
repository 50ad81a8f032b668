#pragma once

#include <vector>

#include "wdecomp/curves.hpp"
#include "wdecomp/exact_linalg.hpp"
#include "wdecomp/indexing.hpp"
#include "wdecomp/rational.hpp"

namespace wdecomp {

// Solution of prod d_j * W = sum_J T^J: one alpha_s^J per (degree, subset).
struct SolutionTable {
    DegreeProfile profile;
    std::vector<SubsetJ> subsets;  // column order: |J| ascending, then lex
    DenseMat<Rational> alpha;      // (d+1) x 2^{k-1}

    [[nodiscard]] const Rational& at(int s, SubsetJ J) const;
    [[nodiscard]] int column_of(SubsetJ J) const;
};

// Subsystem S_s: rows over A_{d,s} in enumeration order, columns over J in
// table order, entries eps_i^J; rhs is 1 on the row of (d_1-1,...,d_k-1) when
// s = d-k and 0 everywhere else.
struct Subsystem {
    DenseMat<Rational> matrix;
    DenseVec<Rational> rhs;
    std::vector<MultiIndex> rows;
    std::vector<SubsetJ> cols;
};

[[nodiscard]] Subsystem build_subsystem(const DegreeProfile& profile, const AnchorChoice& anchors,
                                        int s);

// alpha_{d-k}^J = 2^{1-k} for every J; sparse keeps only alpha_{k-2}^J =
// (-1)^{|J|} besides that, while the full variant also populates the free
// degrees [0,k-2] and [d-k+2,d] with (-1)^{|J|}.
[[nodiscard]] SolutionTable closed_form_solution(const DegreeProfile& profile,
                                                 const AnchorChoice& anchors, bool sparse);

struct SolveReport {
    SolutionTable table;
    std::vector<int> rank_by_degree;
    std::vector<int> nullity_by_degree;

    [[nodiscard]] bool has_nonzero_solution(int s) const;
};

// Exact-rational row reduction of every subsystem. The table holds the unique
// solution where it exists and a canonical nonzero null vector elsewhere.
[[nodiscard]] SolveReport solve_exact(const DegreeProfile& profile, const AnchorChoice& anchors);

[[nodiscard]] CurveSpanElement<Rational> assemble_TJ(const DegreeProfile& profile,
                                                     const AnchorChoice& anchors,
                                                     const SolutionTable& table, SubsetJ J);

}  // namespace wdecomp
