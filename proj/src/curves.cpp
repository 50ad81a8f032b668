#include "wdecomp/curves.hpp"

namespace wdecomp {

std::vector<SpanEquation> span_equations(const CurveSpec& curve) {
    const DegreeProfile& p = curve.profile;
    std::vector<SpanEquation> eqs;
    for (const MultiIndex& i : enumerate_indices(p)) {
        if (i[0] < 1) continue;
        for (int r = 2; r <= p.k(); ++r) {
            if (i[r - 1] > p.degrees[r - 1] - 1) continue;
            eqs.push_back({i, standard_shift(p, i, 1, r), curve.J.eps(r)});
        }
    }
    return eqs;
}

int sigma(const CurveSpec& curve, const AnchorChoice& anchors, int s) {
    if (s < 0 || s >= static_cast<int>(anchors.by_degree.size()))
        throw std::out_of_range("sigma: degree outside [0,d]");
    const MultiIndex& t = anchors.at(s);
    int parity = 0;
    for (int j = 2; j <= curve.profile.k(); ++j)
        if (curve.J.contains(j) && (t[j - 1] & 1)) parity ^= 1;
    return parity ? -1 : 1;
}

}  // namespace wdecomp
