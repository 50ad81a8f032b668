#include "wdecomp/border.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wdecomp {

namespace {

std::vector<MultiIndex> mixed_radix(const std::vector<int>& radices) {
    std::vector<MultiIndex> out;
    MultiIndex cur(radices.size(), 0);
    while (true) {
        out.push_back(cur);
        int j = static_cast<int>(radices.size()) - 1;
        while (j >= 0 && cur[j] + 1 >= radices[j]) cur[j--] = 0;
        if (j < 0) break;
        ++cur[j];
    }
    return out;
}

}  // namespace

FlatteningMatrix flattening_matrix(const DegreeProfile& profile) {
    const int k = profile.k();
    FlatteningMatrix f;
    f.row_ops = mixed_radix(std::vector<int>(k, 3));
    std::vector<int> col_radices(k);
    for (int j = 0; j < k; ++j) col_radices[j] = profile.degrees[j] - 1;
    f.col_monomials = mixed_radix(col_radices);
    f.entries = DenseMat<Rational>::Constant(f.row_ops.size(), f.col_monomials.size(),
                                             Rational(0));
    // per factor: d_y^{e} d_x^{2-e} (x^{d-1} y) = [e <= 1] * (d-1)!/(d-1-(2-e))!
    //             * x^{d-1-(2-e)} y^{1-e}
    for (std::size_t r = 0; r < f.row_ops.size(); ++r) {
        long long value = 1;
        MultiIndex col(k);
        bool nonzero = true;
        for (int j = 0; j < k && nonzero; ++j) {
            const int e = f.row_ops[r][j];
            const int dj = profile.degrees[j];
            if (e > 1) {
                nonzero = false;
                break;
            }
            for (int step = 0; step < 2 - e; ++step) value *= dj - 1 - step;
            col[j] = dj - 1 - (2 - e);
        }
        if (!nonzero) continue;
        for (std::size_t c = 0; c < f.col_monomials.size(); ++c)
            if (f.col_monomials[c] == col) {
                f.entries(r, c) = Rational(value);
                break;
            }
    }
    return f;
}

long long flattening_rank(const DegreeProfile& profile) {
    return rank_exact(flattening_matrix(profile).entries);
}

Decomposition<Complex> jet_family(const DegreeProfile& profile, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("jet_family: eps must be positive");
    const int k = profile.k();
    Decomposition<Complex> dec;
    dec.profile = profile;
    dec.target_scale = 1.0;
    double inv = 1.0;
    for (int dj : profile.degrees) inv /= dj * eps;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        RankOneTerm<Complex> term;
        const int in_s = __builtin_popcount(mask);
        term.weight = Complex(((k - in_s) % 2 ? -1.0 : 1.0) * inv);
        term.factors.resize(k);
        for (int j = 0; j < k; ++j)
            term.factors[j] = {Complex(1.0), Complex((mask >> j) & 1u ? eps : 0.0)};
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

double jet_residual(const DegreeProfile& profile, double eps) {
    const LayoutPtr layout = make_layout(profile);
    return residual(eval_decomposition(layout, jet_family(profile, eps)),
                    w_product<Complex>(layout, /*scaled=*/false));
}

double single_factor_jet_residual(int d, double eps) {
    if (d < 1 || !(eps > 0)) throw std::invalid_argument("bad single-factor jet arguments");
    // z_i((1,eps)) = eps^{d-i}; W_d has z_{d-1} = 1/d
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i <= d; ++i) {
        const double jet = (std::pow(eps, d - i) - (i == d ? 1.0 : 0.0)) / (d * eps);
        const double w = (i == d - 1) ? 1.0 / d : 0.0;
        diff = std::max(diff, std::abs(jet - w));
        scale = std::max(scale, std::abs(w));
    }
    return diff / std::max(1.0, scale);
}

bool jet_eps_near_noise_floor(const DegreeProfile& profile, double eps) {
    const double predicted = eps * (profile.total() - 1) / 2.0;
    return predicted < 1e3 * std::numeric_limits<double>::epsilon();
}

}  // namespace wdecomp
