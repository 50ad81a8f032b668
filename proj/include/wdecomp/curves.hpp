#pragma once

#include <stdexcept>
#include <vector>

#include "wdecomp/binary_forms.hpp"
#include "wdecomp/coord_tensor.hpp"
#include "wdecomp/indexing.hpp"

namespace wdecomp {

// The (1,...,1)-curve L^J cut out by x_{1,0} x_{r,1} = eps_r^J x_{1,1} x_{r,0},
// and its degree-d rational normal curve image under the Segre-Veronese map.
struct CurveSpec {
    DegreeProfile profile;
    SubsetJ J;
};

// z_lhs = sign * z_rhs with rhs = Delta_{1,r}(lhs)
struct SpanEquation {
    MultiIndex lhs;
    MultiIndex rhs;
    int sign = 1;
};

[[nodiscard]] std::vector<SpanEquation> span_equations(const CurveSpec& curve);

// Point of the curve at parameter [t:u]: v_1 = (t,u), v_j = (eps_j^J t, u).
template <class S>
RankOneTerm<S> curve_point(const CurveSpec& curve, const S& t, const S& u) {
    if (t == S(0) && u == S(0)) throw std::invalid_argument("curve_point: parameter (0,0)");
    const int k = curve.profile.k();
    RankOneTerm<S> term;
    term.weight = S(1);
    term.factors.resize(k);
    term.factors[0] = {t, u};
    for (int j = 2; j <= k; ++j) term.factors[j - 1] = {S(curve.J.eps(j)) * t, u};
    return term;
}

// sigma_s^J = prod_{j>=2} (eps_j^J)^{t^{(s)}_j}: the curve-point coordinate
// sign at the degree-s anchor. The phi image of a curve point is a power of a
// linear form only after twisting each coefficient by this sign.
[[nodiscard]] int sigma(const CurveSpec& curve, const AnchorChoice& anchors, int s);

// Element of span(C_d^J): coordinate at i in A_{d,s} is eps_i^J * alpha_s.
template <class S>
struct CurveSpanElement {
    CurveSpec curve;
    AnchorChoice anchors;
    DenseVec<S> alphas;  // alpha_0..alpha_d
};

template <class S>
CoordTensor<S> element_coords(const LayoutPtr& layout, const CurveSpanElement<S>& el) {
    if (!(layout->profile() == el.curve.profile))
        throw std::invalid_argument("element/layout profile mismatch");
    CoordTensor<S> out(layout);
    const auto& idx = layout->indices();
    for (Eigen::Index pos = 0; pos < layout->size(); ++pos) {
        const int s = index_degree(idx[pos]);
        const int e = epsilon_sign(el.curve.J, el.anchors.at(s), idx[pos]);
        out.z(pos) = S(e) * el.alphas(s);
    }
    return out;
}

// phi^J: degree-d binary form with a_s = alpha_s (anchor-relative, no sigma).
template <class S>
BinaryForm<S> phi(const CurveSpanElement<S>& el) {
    BinaryForm<S> f;
    f.a = el.alphas;
    return f;
}

// a_s = sigma_s^J * alpha_s; Waring decompositions of this form pull back to
// curve points.
template <class S>
BinaryForm<S> corrected_form(const CurveSpanElement<S>& el) {
    BinaryForm<S> f;
    f.a = el.alphas;
    for (Eigen::Index s = 0; s < f.a.size(); ++s)
        f.a(s) *= S(sigma(el.curve, el.anchors, static_cast<int>(s)));
    return f;
}

// Waring term lambda (alpha u + beta v)^d of the corrected form becomes the
// weighted curve point at [t:u] = [beta:alpha].
template <class S>
std::vector<RankOneTerm<S>> pullback(const CurveSpec& curve, const AnchorChoice& anchors,
                                     const std::vector<WaringTermT<S>>& waring) {
    (void)anchors;
    std::vector<RankOneTerm<S>> terms;
    terms.reserve(waring.size());
    for (const auto& w : waring) {
        RankOneTerm<S> t = curve_point(curve, w.beta, w.alpha);
        t.weight = w.weight;
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace wdecomp
