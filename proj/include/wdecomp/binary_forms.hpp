#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "wdecomp/exact_linalg.hpp"
#include "wdecomp/indexing.hpp"
#include "wdecomp/rational.hpp"

namespace wdecomp {

using Complex = std::complex<double>;

[[nodiscard]] inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

// F = sum_i a_i binom(e,i) u^{e-i} v^i
template <class S>
struct BinaryForm {
    DenseVec<S> a;

    [[nodiscard]] int degree() const { return static_cast<int>(a.size()) - 1; }
    [[nodiscard]] bool is_zero() const {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (!(a(i) == S(0))) return false;
        return true;
    }
};

// p = sum_j c_j du^{m-j} dv^j. p annihilates F iff sum_j c_j a_{r+j} = 0 for
// every r, which is exactly the Hankel kernel condition.
template <class S>
struct ApolarOperator {
    DenseVec<S> c;

    [[nodiscard]] int degree() const { return static_cast<int>(c.size()) - 1; }
};

template <class S>
struct WaringTermT {
    S weight{};
    S alpha{};
    S beta{};
};
using WaringTerm = WaringTermT<Complex>;
using WaringDecomposition = std::vector<WaringTerm>;

struct NumericOptions {
    double rank_tol = 1e-10;      // relative singular-value threshold
    double root_sep_tol = 1e-8;   // minimal pairwise root separation
    double recon_tol = 1e-8;      // relative reconstruction acceptance
};

struct SylvesterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hankel matrix of a_0..a_e, shape (e-m+1) x (m+1), entries[r][c] = a_{r+c}.
template <class S>
DenseMat<S> catalecticant(const BinaryForm<S>& f, int m) {
    const int e = f.degree();
    if (m < 0 || m > e) throw std::out_of_range("catalecticant order outside [0,e]");
    DenseMat<S> cat(e - m + 1, m + 1);
    for (int r = 0; r <= e - m; ++r)
        for (int c = 0; c <= m; ++c) cat(r, c) = f.a(r + c);
    return cat;
}

[[nodiscard]] inline int rank_numeric(const DenseMat<Complex>& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<DenseMat<Complex>> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++r;
    return r;
}

template <class S>
int cat_rank(const BinaryForm<S>& f, int m, const NumericOptions& opts = {}) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)opts;
        return rank_exact(catalecticant(f, m));
    } else {
        return rank_numeric(catalecticant(f, m), opts.rank_tol);
    }
}

template <class S>
std::vector<ApolarOperator<S>> kernel(const BinaryForm<S>& f, int m,
                                      const NumericOptions& opts = {}) {
    std::vector<ApolarOperator<S>> out;
    if constexpr (std::is_same_v<S, Rational>) {
        (void)opts;
        for (auto& v : nullspace_exact(catalecticant(f, m))) out.push_back({std::move(v)});
    } else {
        const DenseMat<Complex> cat = catalecticant(f, m);
        Eigen::JacobiSVD<DenseMat<Complex>> svd(cat, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double top = sv.size() ? sv(0) : 0.0;
        for (Eigen::Index c = 0; c < cat.cols(); ++c) {
            const bool in_kernel = c >= sv.size() || top <= 0.0 || sv(c) <= opts.rank_tol * top;
            if (in_kernel) out.push_back({svd.matrixV().col(c)});
        }
    }
    return out;
}

namespace detail {

// Exact square-free test via a primitive pseudo-remainder gcd over the
// integers; coefficients highest degree first. Intermediate values live in
// __int128 with content stripping per step, overflow throws.
using Wide = __int128;

inline Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Wide checked_mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial gcd overflow");
    return out;
}

inline std::vector<Wide> strip_content(std::vector<Wide> p) {
    std::size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
    Wide g = 0;
    for (Wide c : p) g = wide_gcd(g, c);
    if (g > 1)
        for (Wide& c : p) c /= g;
    return p;
}

inline std::vector<Wide> pseudo_mod(std::vector<Wide> a, const std::vector<Wide>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Wide la = a[0], lb = b[0];
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_mul(a[i], lb);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= checked_mul(la, b[i]);
        a = strip_content(std::move(a));
    }
    return a;
}

inline bool univariate_square_free(const std::vector<Rational>& p) {
    if (p.size() <= 2) return true;  // degree <= 1
    Wide lcm = 1;
    for (const Rational& c : p) lcm = checked_mul(lcm / wide_gcd(lcm, c.den()), c.den());
    std::vector<Wide> ip(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        ip[i] = checked_mul(Wide(p[i].num()), lcm / p[i].den());
    const int deg = static_cast<int>(p.size()) - 1;
    std::vector<Wide> dp(p.size() - 1);
    for (int i = 0; i < deg; ++i) dp[i] = checked_mul(ip[i], deg - i);
    std::vector<Wide> a = strip_content(std::move(ip)), b = strip_content(std::move(dp));
    while (!b.empty()) {
        auto r = pseudo_mod(a, b);
        a = std::move(b);
        b = strip_content(std::move(r));
    }
    return a.size() <= 1;
}

// significant support [j0, j1] of a coefficient vector; (-1,-1) when zero
template <class S>
std::pair<int, int> support(const DenseVec<S>& c, double rel_tol) {
    int j0 = -1, j1 = -1;
    if constexpr (std::is_same_v<S, Rational>) {
        for (int j = 0; j < c.size(); ++j)
            if (!c(j).is_zero()) {
                if (j0 < 0) j0 = j;
                j1 = j;
            }
    } else {
        double top = 0;
        for (int j = 0; j < c.size(); ++j) top = std::max(top, std::abs(c(j)));
        for (int j = 0; j < c.size(); ++j)
            if (std::abs(c(j)) > rel_tol * top) {
                if (j0 < 0) j0 = j;
                j1 = j;
            }
    }
    return {j0, j1};
}

}  // namespace detail

// True iff K(X,Y) = sum_j c_j X^{m-j} Y^j has m distinct projective roots.
template <class S>
bool square_free(const ApolarOperator<S>& p, const NumericOptions& opts = {});

std::vector<std::array<Complex, 2>> operator_roots_impl(const DenseVec<Complex>& c,
                                                        const NumericOptions& opts);

// The m projective roots [alpha : beta] of a square-free operator, beta = 1
// for finite roots and (1,0) at infinity.
template <class S>
std::vector<std::array<Complex, 2>> roots(const ApolarOperator<S>& p,
                                          const NumericOptions& opts = {}) {
    if (!square_free(p, opts)) throw std::invalid_argument("roots: operator is not square-free");
    DenseVec<Complex> c(p.c.size());
    for (Eigen::Index j = 0; j < p.c.size(); ++j) {
        if constexpr (std::is_same_v<S, Rational>)
            c(j) = Complex(p.c(j).to_double(), 0.0);
        else
            c(j) = Complex(p.c(j));
    }
    return operator_roots_impl(c, opts);
}

template <class S>
bool square_free(const ApolarOperator<S>& p, const NumericOptions& opts) {
    const int m = p.degree();
    auto [j0, j1] = detail::support(p.c, opts.rank_tol);
    if (j0 < 0) throw std::invalid_argument("square_free: zero operator");
    if (m == 0) return false;
    if (j0 >= 2 || m - j1 >= 2) return false;  // repeated root at [1:0] or [0:1]
    if constexpr (std::is_same_v<S, Rational>) {
        bool interior = false;
        for (int j = j0 + 1; j < j1; ++j)
            if (!p.c(j).is_zero()) interior = true;
        if (!interior) return true;  // c_{j0} X^n + c_{j1} Y^n has n distinct roots
        std::vector<Rational> q(p.c.data() + j0, p.c.data() + j1 + 1);
        return detail::univariate_square_free(q);
    } else {
        DenseVec<Complex> c(p.c.size());
        for (Eigen::Index j = 0; j < p.c.size(); ++j) c(j) = Complex(p.c(j));
        auto rs = operator_roots_impl(c, opts);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t l = i + 1; l < rs.size(); ++l) {
                const Complex di = rs[i][0] * rs[l][1] - rs[l][0] * rs[i][1];
                const double sc = std::max({1.0, std::abs(rs[i][0]), std::abs(rs[l][0])});
                if (std::abs(di) <= opts.root_sep_tol * sc) return false;
            }
        return true;
    }
}

namespace detail {

// Search a kernel span for a square-free element: the binomial combination
// c_0 du^m - c_m dv^m first (closed-form roots), then basis elements, then a
// pencil scan. For a 2-dimensional kernel the scan over 2m+2 parameters is
// decisive: the non-square-free locus of a pencil is cut out by a discriminant
// of degree 2m-2 unless it is the whole pencil.
template <class S>
std::optional<DenseVec<S>> find_square_free(const std::vector<ApolarOperator<S>>& basis, int m,
                                            const NumericOptions& opts) {
    if (basis.empty() || m == 0) return std::nullopt;
    const int dim = static_cast<int>(basis.size());
    const auto try_vec = [&](DenseVec<S> v) -> std::optional<DenseVec<S>> {
        bool zero = true;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            if (!(v(j) == S(0))) zero = false;
        if (zero) return std::nullopt;
        if (square_free(ApolarOperator<S>{v}, opts)) return v;
        return std::nullopt;
    };

    // elements supported on {0, m} within the span; for m == 1 the basis scan
    // below already covers every element
    if (m >= 2) {
        DenseMat<S> constraints(std::max(0, m - 1), dim);
        for (int j = 1; j < m; ++j)
            for (int b = 0; b < dim; ++b) constraints(j - 1, b) = basis[b].c(j);
        std::vector<DenseVec<S>> combos;
        if constexpr (std::is_same_v<S, Rational>) {
            combos = nullspace_exact(constraints);
        } else {
            DenseMat<Complex> cc = constraints;
            Eigen::JacobiSVD<DenseMat<Complex>> svd(cc, Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            const double top = sv.size() ? sv(0) : 0.0;
            for (Eigen::Index c = 0; c < cc.cols(); ++c)
                if (c >= sv.size() || top <= 0.0 || sv(c) <= opts.rank_tol * top)
                    combos.push_back(svd.matrixV().col(c));
        }
        for (const auto& co : combos) {
            DenseVec<S> v = DenseVec<S>::Constant(m + 1, S(0));
            for (int b = 0; b < dim; ++b) v += co(b) * basis[b].c;
            if (auto r = try_vec(std::move(v))) return r;
        }
    }

    for (const auto& b : basis)
        if (auto r = try_vec(b.c)) return r;

    if (dim >= 2) {
        for (int t = 0; t <= 2 * m + 1; ++t) {
            DenseVec<S> v = basis[0].c + S(t) * basis[1].c;
            if (auto r = try_vec(std::move(v))) return r;
        }
    }
    if (dim > 2) {
        std::mt19937 rng(20240811u);
        std::uniform_int_distribution<int> coef(-5, 5);
        for (int it = 0; it < 64; ++it) {
            DenseVec<S> v = DenseVec<S>::Constant(m + 1, S(0));
            for (int b = 0; b < dim; ++b) v += S(coef(rng)) * basis[b].c;
            if (auto r = try_vec(std::move(v))) return r;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// rank(F) = r if ker(Cat_r(F)) contains a square-free element, e - r + 2
// otherwise, where r is the rank of the most square catalecticant.
template <class S>
int sylvester_rank(const BinaryForm<S>& f, const NumericOptions& opts = {}) {
    if (f.is_zero()) throw std::invalid_argument("sylvester_rank: zero form");
    const int e = f.degree();
    const int r = cat_rank(f, e / 2, opts);
    if (r == 0) throw std::invalid_argument("sylvester_rank: zero form");
    if (detail::find_square_free(kernel(f, r, opts), r, opts)) return r;
    return e - r + 2;
}

struct SylvesterResult {
    int rank = 0;
    DenseVec<Complex> kernel_element;  // the square-free operator actually used
    std::vector<std::array<Complex, 2>> root_pairs;
    WaringDecomposition terms;
    double residual = 0.0;
};

template <class S>
SylvesterResult sylvester_decompose(const BinaryForm<S>& f, const NumericOptions& opts = {}) {
    if (f.is_zero()) throw std::invalid_argument("sylvester_decompose: zero form");
    const int e = f.degree();
    const int r = cat_rank(f, e / 2, opts);

    int order = r;
    auto element = detail::find_square_free(kernel(f, r, opts), r, opts);
    if (!element) {
        order = e - r + 2;
        element = detail::find_square_free(kernel(f, order, opts), order, opts);
        if (!element)
            throw SylvesterError("no square-free apolar element at order " + std::to_string(r) +
                                 " or " + std::to_string(order));
    }

    SylvesterResult res;
    res.rank = order;
    res.kernel_element.resize(element->size());
    for (Eigen::Index j = 0; j < element->size(); ++j) {
        if constexpr (std::is_same_v<S, Rational>)
            res.kernel_element(j) = Complex((*element)(j).to_double(), 0.0);
        else
            res.kernel_element(j) = Complex((*element)(j));
    }
    res.root_pairs = operator_roots_impl(res.kernel_element, opts);

    // coefficient matching: sum_m lambda_m alpha_m^{e-s} beta_m^s = a_s
    const int nroots = static_cast<int>(res.root_pairs.size());
    DenseMat<Complex> vmat(e + 1, nroots);
    DenseVec<Complex> avec(e + 1);
    for (int s = 0; s <= e; ++s) {
        if constexpr (std::is_same_v<S, Rational>)
            avec(s) = Complex(f.a(s).to_double(), 0.0);
        else
            avec(s) = Complex(f.a(s));
        for (int i = 0; i < nroots; ++i)
            vmat(s, i) = std::pow(res.root_pairs[i][0], e - s) * std::pow(res.root_pairs[i][1], s);
    }
    const DenseVec<Complex> lam = vmat.completeOrthogonalDecomposition().solve(avec);
    double scale = 1.0;
    for (int s = 0; s <= e; ++s) scale = std::max(scale, std::abs(avec(s)));
    res.residual = (vmat * lam - avec).template lpNorm<Eigen::Infinity>() / scale;
    if (res.residual > opts.recon_tol)
        throw SylvesterError("coefficient matching failed, residual " +
                             std::to_string(res.residual));
    res.terms.reserve(nroots);
    for (int i = 0; i < nroots; ++i)
        res.terms.push_back({lam(i), res.root_pairs[i][0], res.root_pairs[i][1]});
    return res;
}

// Rebuild a_s = sum_m lambda_m alpha_m^{e-s} beta_m^s.
[[nodiscard]] inline BinaryForm<Complex> form_from_waring(int e, const WaringDecomposition& terms) {
    BinaryForm<Complex> f;
    f.a = DenseVec<Complex>::Constant(e + 1, Complex(0));
    for (const auto& t : terms)
        for (int s = 0; s <= e; ++s) f.a(s) += t.weight * std::pow(t.alpha, e - s) * std::pow(t.beta, s);
    return f;
}

// The per-J form of the decomposition pipeline: a_{k-2} = s1 and
// a_{d-k} = s2 * 2^{1-k}, every other coefficient zero. Its rank is d-2k+2.
template <class S>
BinaryForm<S> minimizer_form(const DegreeProfile& profile, int s1, int s2) {
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
        throw std::invalid_argument("minimizer_form: signs must be +1 or -1");
    const int k = profile.k();
    const int d = profile.total();
    BinaryForm<S> f;
    f.a = DenseVec<S>::Constant(d + 1, S(0));
    f.a(k - 2) = S(s1);
    f.a(d - k) = S(s2) / S(1ll << (k - 1));
    return f;
}

}  // namespace wdecomp
