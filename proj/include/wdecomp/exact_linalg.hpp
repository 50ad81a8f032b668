#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace wdecomp {

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// In-place reduced row echelon form with exact pivoting (first nonzero entry).
// Meant for scalars with exact equality, e.g. Rational. Returns pivot columns.
template <class S>
std::vector<int> row_reduce(DenseMat<S>& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!(m(i, c) == S(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const S inv = S(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == S(0)) continue;
            const S f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

template <class S>
int rank_exact(DenseMat<S> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Basis of the right null space, one vector per free column.
template <class S>
std::vector<DenseVec<S>> nullspace_exact(DenseMat<S> m) {
    const Eigen::Index cols = m.cols();
    const std::vector<int> pivots = row_reduce(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<DenseVec<S>> basis;
    for (Eigen::Index fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        DenseVec<S> v = DenseVec<S>::Constant(cols, S(0));
        v(fc) = S(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v(pivots[pr]) = -m(pr, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of A x = b with free variables set to zero; nullopt when
// the system is inconsistent.
template <class S>
std::optional<DenseVec<S>> solve_exact(const DenseMat<S>& a, const DenseVec<S>& b) {
    DenseMat<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const std::vector<int> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols())) return std::nullopt;
    DenseVec<S> x = DenseVec<S>::Constant(a.cols(), S(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x(pivots[pr]) = aug(pr, a.cols());
    return x;
}

}  // namespace wdecomp
