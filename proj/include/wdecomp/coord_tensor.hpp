#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "wdecomp/exact_linalg.hpp"
#include "wdecomp/indexing.hpp"
#include "wdecomp/rational.hpp"

namespace wdecomp {

using Complex = std::complex<double>;

template <class S>
struct RealOf {
    using type = S;
};
template <class T>
struct RealOf<std::complex<T>> {
    using type = T;
};
template <class S>
using real_t = typename RealOf<S>::type;

inline double abs_value(const Complex& x) { return std::abs(x); }
inline double abs_value(double x) { return std::abs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

// Coordinate bookkeeping for A_d shared by every tensor over a profile:
// positions follow enumerate_indices, lookups go through a mixed-radix table.
class CoordLayout {
public:
    explicit CoordLayout(DegreeProfile profile)
        : profile_(std::move(profile)), indices_(enumerate_indices(profile_)) {
        strides_.resize(profile_.k());
        long long s = 1;
        for (int j = profile_.k() - 1; j >= 0; --j) {
            strides_[j] = s;
            s *= profile_.degrees[j] + 1;
        }
        pos_of_flat_.assign(s, -1);
        for (std::size_t p = 0; p < indices_.size(); ++p) pos_of_flat_[flat(indices_[p])] = static_cast<int>(p);
    }

    [[nodiscard]] const DegreeProfile& profile() const { return profile_; }
    [[nodiscard]] const std::vector<MultiIndex>& indices() const { return indices_; }
    [[nodiscard]] Eigen::Index size() const { return static_cast<Eigen::Index>(indices_.size()); }

    [[nodiscard]] int offset(const MultiIndex& i) const {
        if (!profile_.contains(i)) throw std::out_of_range("index outside A_d");
        return pos_of_flat_[flat(i)];
    }

private:
    [[nodiscard]] long long flat(const MultiIndex& i) const {
        long long f = 0;
        for (int j = 0; j < profile_.k(); ++j) f += i[j] * strides_[j];
        return f;
    }

    DegreeProfile profile_;
    std::vector<MultiIndex> indices_;
    std::vector<long long> strides_;
    std::vector<int> pos_of_flat_;
};

using LayoutPtr = std::shared_ptr<const CoordLayout>;

inline LayoutPtr make_layout(const DegreeProfile& profile) {
    return std::make_shared<const CoordLayout>(profile);
}

// Dense coordinate array over A_d. The represented multihomogeneous form is
// sum_i z[i] * prod_j binom(d_j, i_j) x_{j,0}^{i_j} x_{j,1}^{d_j - i_j}, so the
// binomials live in the basis and rank-one points have pure monomial coordinates.
template <class S>
struct CoordTensor {
    LayoutPtr layout;
    DenseVec<S> z;

    explicit CoordTensor(LayoutPtr lay)
        : layout(std::move(lay)), z(DenseVec<S>::Constant(layout->size(), S(0))) {}

    [[nodiscard]] S& at(const MultiIndex& i) { return z(layout->offset(i)); }
    [[nodiscard]] const S& at(const MultiIndex& i) const { return z(layout->offset(i)); }
};

// Factor point (p, q) meaning x_{j,0} = p, x_{j,1} = q.
template <class S>
using FactorPoint = std::array<S, 2>;

template <class S>
struct RankOneTerm {
    S weight{};
    std::vector<FactorPoint<S>> factors;  // size k
};

template <class S>
struct Decomposition {
    DegreeProfile profile;
    std::vector<RankOneTerm<S>> terms;
    double target_scale = 1.0;  // 1 for W itself, prod d_j for the scaled target
};

// prod d_j * W  (single coordinate 1 at (d_1-1,...,d_k-1)) or W itself.
template <class S>
CoordTensor<S> w_product(const LayoutPtr& layout, bool scaled) {
    const DegreeProfile& p = layout->profile();
    MultiIndex w(p.k());
    long long prod = 1;
    for (int j = 0; j < p.k(); ++j) {
        w[j] = p.degrees[j] - 1;
        prod *= p.degrees[j];
    }
    CoordTensor<S> t(layout);
    t.at(w) = scaled ? S(1) : S(1) / S(prod);
    return t;
}

// z_i = weight * prod_j p_j^{i_j} q_j^{d_j - i_j}
template <class S>
CoordTensor<S> term_coords(const LayoutPtr& layout, const RankOneTerm<S>& term) {
    const DegreeProfile& prof = layout->profile();
    const int k = prof.k();
    if (static_cast<int>(term.factors.size()) != k)
        throw std::invalid_argument("term has wrong number of factors");
    std::vector<std::vector<S>> p_pow(k), q_pow(k);
    for (int j = 0; j < k; ++j) {
        const int dj = prof.degrees[j];
        p_pow[j].resize(dj + 1);
        q_pow[j].resize(dj + 1);
        p_pow[j][0] = S(1);
        q_pow[j][0] = S(1);
        for (int e = 1; e <= dj; ++e) {
            p_pow[j][e] = p_pow[j][e - 1] * term.factors[j][0];
            q_pow[j][e] = q_pow[j][e - 1] * term.factors[j][1];
        }
    }
    CoordTensor<S> out(layout);
    const auto& idx = layout->indices();
    for (Eigen::Index pos = 0; pos < layout->size(); ++pos) {
        S v = term.weight;
        for (int j = 0; j < k; ++j) v *= p_pow[j][idx[pos][j]] * q_pow[j][prof.degrees[j] - idx[pos][j]];
        out.z(pos) = v;
    }
    return out;
}

template <class S>
CoordTensor<S> eval_decomposition(const LayoutPtr& layout, const Decomposition<S>& dec) {
    if (!(dec.profile == layout->profile()))
        throw std::invalid_argument("decomposition profile does not match layout");
    CoordTensor<S> acc(layout);
    for (const auto& term : dec.terms) acc.z += term_coords(layout, term).z;
    return acc;
}

template <class S>
CoordTensor<S> eval_decomposition(const Decomposition<S>& dec) {
    return eval_decomposition(make_layout(dec.profile), dec);
}

// max-norm of A - B over max(1, max-norm of B)
template <class S>
real_t<S> residual(const CoordTensor<S>& a, const CoordTensor<S>& b) {
    if (!(a.layout->profile() == b.layout->profile()))
        throw std::invalid_argument("residual: profile mismatch");
    real_t<S> diff{}, scale{};
    for (Eigen::Index i = 0; i < a.z.size(); ++i) {
        const auto d = abs_value(S(a.z(i) - b.z(i)));
        const auto m = abs_value(b.z(i));
        if (diff < d) diff = d;
        if (scale < m) scale = m;
    }
    if (scale < real_t<S>(1)) scale = real_t<S>(1);
    return diff / scale;
}

}  // namespace wdecomp
