#include "wdecomp/wsystem.hpp"

#include <stdexcept>

namespace wdecomp {

int SolutionTable::column_of(SubsetJ J) const {
    for (std::size_t c = 0; c < subsets.size(); ++c)
        if (subsets[c] == J) return static_cast<int>(c);
    throw std::invalid_argument("subset not in table");
}

const Rational& SolutionTable::at(int s, SubsetJ J) const {
    return alpha(s, column_of(J));
}

Subsystem build_subsystem(const DegreeProfile& profile, const AnchorChoice& anchors, int s) {
    if (s < 0 || s > profile.total()) throw std::out_of_range("subsystem degree outside [0,d]");
    Subsystem sys;
    sys.rows = enumerate_indices(profile, s);
    sys.cols = all_subsets(profile.k());
    const int nr = static_cast<int>(sys.rows.size());
    const int nc = static_cast<int>(sys.cols.size());
    sys.matrix.resize(nr, nc);
    sys.rhs = DenseVec<Rational>::Constant(nr, Rational(0));
    const MultiIndex& t = anchors.at(s);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c)
            sys.matrix(r, c) = Rational(epsilon_sign(sys.cols[c], t, sys.rows[r]));
    if (s == profile.total() - profile.k()) {
        MultiIndex w(profile.k());
        for (int j = 0; j < profile.k(); ++j) w[j] = profile.degrees[j] - 1;
        for (int r = 0; r < nr; ++r)
            if (sys.rows[r] == w) sys.rhs(r) = Rational(1);
    }
    return sys;
}

SolutionTable closed_form_solution(const DegreeProfile& profile, const AnchorChoice& anchors,
                                   bool sparse) {
    if (!valid_anchors(profile, anchors)) throw std::invalid_argument("invalid anchor choice");
    const int k = profile.k();
    const int d = profile.total();
    SolutionTable table;
    table.profile = profile;
    table.subsets = all_subsets(k);
    table.alpha = DenseMat<Rational>::Constant(d + 1, table.subsets.size(), Rational(0));
    for (std::size_t c = 0; c < table.subsets.size(); ++c) {
        const Rational canon((table.subsets[c].size() % 2) ? -1 : 1);
        table.alpha(k - 2, c) = canon;
        table.alpha(d - k, c) = Rational(1, 1ll << (k - 1));
        if (!sparse) {
            for (int s = 0; s <= k - 2; ++s) table.alpha(s, c) = canon;
            for (int s = d - k + 2; s <= d; ++s) table.alpha(s, c) = canon;
        }
    }
    return table;
}

bool SolveReport::has_nonzero_solution(int s) const {
    for (Eigen::Index c = 0; c < table.alpha.cols(); ++c)
        if (!table.alpha(s, c).is_zero()) return true;
    return false;
}

SolveReport solve_exact(const DegreeProfile& profile, const AnchorChoice& anchors) {
    if (!valid_anchors(profile, anchors)) throw std::invalid_argument("invalid anchor choice");
    const int d = profile.total();
    const int k = profile.k();
    SolveReport rep;
    rep.table.profile = profile;
    rep.table.subsets = all_subsets(k);
    rep.table.alpha =
        DenseMat<Rational>::Constant(d + 1, rep.table.subsets.size(), Rational(0));
    rep.rank_by_degree.resize(d + 1);
    rep.nullity_by_degree.resize(d + 1);
    for (int s = 0; s <= d; ++s) {
        const Subsystem sys = build_subsystem(profile, anchors, s);
        DenseMat<Rational> m = sys.matrix;
        const int rank = static_cast<int>(row_reduce(m).size());
        rep.rank_by_degree[s] = rank;
        rep.nullity_by_degree[s] = static_cast<int>(sys.matrix.cols()) - rank;
        if (s == d - k) {
            auto sol = solve_exact(sys.matrix, sys.rhs);
            // the W coordinate makes S_{d-k} inhomogeneous and solvable by
            // construction; anything else indicates a convention bug
            if (!sol) throw std::logic_error("S_{d-k} inconsistent");
            rep.table.alpha.row(s) = sol->transpose();
        } else if (rep.nullity_by_degree[s] > 0) {
            const auto basis = nullspace_exact(sys.matrix);
            rep.table.alpha.row(s) = basis.front().transpose();
        }
    }
    return rep;
}

CurveSpanElement<Rational> assemble_TJ(const DegreeProfile& profile, const AnchorChoice& anchors,
                                       const SolutionTable& table, SubsetJ J) {
    CurveSpanElement<Rational> el;
    el.curve = {profile, J};
    el.anchors = anchors;
    const int col = table.column_of(J);
    el.alphas = table.alpha.col(col);
    return el;
}

}  // namespace wdecomp
