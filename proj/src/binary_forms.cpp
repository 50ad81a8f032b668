#include "wdecomp/binary_forms.hpp"

namespace wdecomp {

namespace {

Complex horner(const std::vector<Complex>& q, Complex x) {
    Complex v(0);
    for (Complex c : q) v = v * x + c;
    return v;
}

}  // namespace

std::vector<std::array<Complex, 2>> operator_roots_impl(const DenseVec<Complex>& c,
                                                        const NumericOptions& opts) {
    const int m = static_cast<int>(c.size()) - 1;
    auto [j0, j1] = detail::support(c, opts.rank_tol);
    if (j0 < 0) throw std::invalid_argument("roots: zero operator");
    if (j0 >= 2 || m - j1 >= 2) throw std::invalid_argument("roots: repeated projective root");

    std::vector<std::array<Complex, 2>> out;
    if (j0 == 1) out.push_back({Complex(1), Complex(0)});

    // K(x,1) = x^{m-j1} * Q(x) with Q(x) = sum_{j=j0..j1} c_j x^{j1-j}
    const int n = j1 - j0;
    if (n > 0) {
        const bool binomial_support = [&] {
            for (int j = j0 + 1; j < j1; ++j)
                if (std::abs(c(j)) > opts.rank_tol * std::max(std::abs(c(j0)), std::abs(c(j1))))
                    return false;
            return true;
        }();
        if (binomial_support) {
            // Q = c_{j0} x^n + c_{j1}: roots are the scaled n-th roots of unity
            const Complex rho = std::pow(-c(j1) / c(j0), 1.0 / n);
            for (int i = 0; i < n; ++i) {
                const double th = 2.0 * M_PI * i / n;
                out.push_back({rho * Complex(std::cos(th), std::sin(th)), Complex(1)});
            }
        } else {
            std::vector<Complex> q(n + 1);  // highest degree first, monic
            for (int j = j0; j <= j1; ++j) q[j - j0] = c(j) / c(j0);
            DenseMat<Complex> comp = DenseMat<Complex>::Constant(n, n, Complex(0));
            for (int i = 1; i < n; ++i) comp(i, i - 1) = Complex(1);
            for (int i = 0; i < n; ++i) comp(i, n - 1) = -q[n - i];
            Eigen::ComplexEigenSolver<DenseMat<Complex>> es(comp);
            std::vector<Complex> dq(n);
            for (int i = 0; i < n; ++i) dq[i] = q[i] * Complex(n - i);
            for (int i = 0; i < n; ++i) {
                Complex x = es.eigenvalues()(i);
                for (int it = 0; it < 2; ++it) {
                    const Complex der = horner(dq, x);
                    if (std::abs(der) < 1e-14) break;
                    x -= horner(q, x) / der;
                }
                out.push_back({x, Complex(1)});
            }
        }
    }
    if (m - j1 == 1) out.push_back({Complex(0), Complex(1)});
    return out;
}

}  // namespace wdecomp
