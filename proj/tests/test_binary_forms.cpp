#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "wdecomp/binary_forms.hpp"

using namespace wdecomp;

namespace {

BinaryForm<Rational> form_from(std::vector<Rational> a) {
    BinaryForm<Rational> f;
    f.a.resize(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) f.a(i) = a[i];
    return f;
}

BinaryForm<Complex> to_complex(const BinaryForm<Rational>& f) {
    BinaryForm<Complex> out;
    out.a.resize(f.a.size());
    for (Eigen::Index i = 0; i < f.a.size(); ++i) out.a(i) = Complex(f.a(i).to_double());
    return out;
}

// does the reported kernel span contain the vector v?
bool span_contains(const std::vector<ApolarOperator<Rational>>& basis,
                   const DenseVec<Rational>& v) {
    const int n = static_cast<int>(v.size());
    DenseMat<Rational> with(n, basis.size() + 1), without(n, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        with.col(b) = basis[b].c;
        without.col(b) = basis[b].c;
    }
    with.col(basis.size()) = v;
    return rank_exact(with) == rank_exact(without);
}

// power form (alpha u + beta v)^e: a_s = alpha^{e-s} beta^s
BinaryForm<Rational> power_form(int e, Rational alpha, Rational beta) {
    BinaryForm<Rational> f;
    f.a.resize(e + 1);
    for (int s = 0; s <= e; ++s)
        f.a(s) = Rational::pow(alpha, e - s) * Rational::pow(beta, s);
    return f;
}

// independent of the r / e-r+2 dichotomy: scan orders from below and return
// the first one whose kernel holds a square-free element; confirm by solving
// the interpolation at its roots
int oracle_min_rank(const BinaryForm<Rational>& f) {
    const int e = f.degree();
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int r = 1; r <= e; ++r) {
        const auto basis = kernel(f, r);
        std::vector<DenseVec<Rational>> candidates;
        for (const auto& b : basis) candidates.push_back(b.c);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t l = i + 1; l < basis.size(); ++l)
                for (int t = 1; t <= 2 * r + 1; ++t)
                    candidates.push_back(basis[i].c + Rational(t) * basis[l].c);
        for (int it = 0; it < 100 && basis.size() > 1; ++it) {
            DenseVec<Rational> v = DenseVec<Rational>::Constant(r + 1, Rational(0));
            for (const auto& b : basis) v += Rational(coef(rng)) * b.c;
            candidates.push_back(std::move(v));
        }
        for (const auto& cand : candidates) {
            bool zero = true;
            for (Eigen::Index j = 0; j < cand.size(); ++j)
                if (!cand(j).is_zero()) zero = false;
            if (zero || !square_free(ApolarOperator<Rational>{cand})) continue;
            const auto rts = roots(ApolarOperator<Rational>{cand});
            DenseMat<Complex> vmat(e + 1, rts.size());
            DenseVec<Complex> avec(e + 1);
            for (int s = 0; s <= e; ++s) {
                avec(s) = Complex(f.a(s).to_double());
                for (std::size_t m = 0; m < rts.size(); ++m)
                    vmat(s, m) = std::pow(rts[m][0], e - s) * std::pow(rts[m][1], s);
            }
            const DenseVec<Complex> lam = vmat.completeOrthogonalDecomposition().solve(avec);
            if ((vmat * lam - avec).lpNorm<Eigen::Infinity>() < 1e-8) return r;
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("catalecticant matrices") {
    // the worked degree-6 form with a = (1/2, 0, 0, 0, 1/2, 0, 1/4)
    const auto f = form_from({Rational(1, 2), 0, 0, 0, Rational(1, 2), 0, Rational(1, 4)});
    const auto c3 = catalecticant(f, 3);
    REQUIRE(c3.rows() == 4);
    REQUIRE(c3.cols() == 4);
    const Rational h = Rational(1, 2);
    CHECK(c3(0, 0) == h);
    CHECK(c3(1, 3) == h);
    CHECK(c3(2, 2) == h);
    CHECK(c3(3, 1) == h);
    CHECK(c3(3, 3) == Rational(1, 4));
    CHECK(c3(0, 1) == Rational(0));

    CHECK(catalecticant(f, 0).cols() == 1);
    CHECK(catalecticant(f, 6).rows() == 1);
    const auto c2 = catalecticant(f, 2);
    const auto c4 = catalecticant(f, 4);
    CHECK(c2 == c4.transpose());
    CHECK_THROWS_AS(catalecticant(f, 7), std::out_of_range);
}

TEST_CASE("catalecticant ranks") {
    const auto f = form_from({Rational(1, 2), 0, 0, 0, Rational(1, 2), 0, 0});
    CHECK(cat_rank(f, 3) == 4);
    const auto f0 = form_from({0, 0, 0, 0, Rational(1, 2), 0, 0});  // a_0 = 0 drops the rank
    CHECK(cat_rank(f0, 3) == 3);

    const auto zero = form_from({0, 0, 0, 0});
    CHECK(cat_rank(zero, 1) == 0);

    const auto pw = power_form(5, Rational(2), Rational(-3));
    for (int m = 1; m <= 4; ++m) CHECK(cat_rank(pw, m) == 1);

    // monotone up to the most square order, here on float data
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        BinaryForm<Complex> g;
        g.a.resize(9);
        for (int i = 0; i <= 8; ++i) g.a(i) = Complex(coef(rng), 0);
        if (g.is_zero()) continue;
        for (int m = 0; m + 1 <= 4; ++m) CHECK(cat_rank(g, m) <= cat_rank(g, m + 1));
    }
}

TEST_CASE("kernels and the operator convention") {
    // a = (alpha_0, 0, 0, 0, 1/2, 0, 0) with alpha_0 = 1/2:
    // kernel(Cat_4) = < du^4 - dv^4, du^3 dv >
    const auto f = form_from({Rational(1, 2), 0, 0, 0, Rational(1, 2), 0, 0});
    const auto basis = kernel(f, 4);
    REQUIRE(basis.size() == 2);
    DenseVec<Rational> gen1 = DenseVec<Rational>::Constant(5, Rational(0));
    gen1(0) = Rational(1);
    gen1(4) = Rational(-1);
    DenseVec<Rational> gen2 = DenseVec<Rational>::Constant(5, Rational(0));
    gen2(1) = Rational(1);
    CHECK(span_contains(basis, gen1));
    CHECK(span_contains(basis, gen2));

    // generic alpha_0: du^4 - 2 alpha_0 dv^4 stays apolar
    const Rational a0(3, 7);
    const auto fg = form_from({a0, 0, 0, 0, Rational(1, 2), 0, 0});
    DenseVec<Rational> gen = DenseVec<Rational>::Constant(5, Rational(0));
    gen(0) = Rational(1);
    gen(4) = Rational(-2) * a0;
    CHECK(span_contains(kernel(fg, 4), gen));

    // v^e: du kills it at order one
    const auto ve = form_from({0, 0, 0, 0, Rational(1)});
    const auto k1 = kernel(ve, 1);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].c(0) == Rational(1));
    CHECK(k1[0].c(1) == Rational(0));

    // Hankel condition holds exactly for every reported kernel element
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 12; ++trial) {
        BinaryForm<Rational> g;
        const int e = 4 + trial % 4;
        g.a.resize(e + 1);
        for (int i = 0; i <= e; ++i) g.a(i) = Rational(coef(rng), 1 + (trial % 3));
        for (int m = 1; m <= e - 1; ++m)
            for (const auto& p : kernel(g, m))
                for (int r = 0; r + m <= e; ++r) {
                    Rational acc(0);
                    for (int j = 0; j <= m; ++j) acc += p.c(j) * g.a(r + j);
                    CHECK(acc == Rational(0));
                }
    }
}

TEST_CASE("square-free detection") {
    DenseVec<Rational> v = DenseVec<Rational>::Constant(5, Rational(0));
    v(0) = Rational(1);
    v(4) = Rational(-1);
    CHECK(square_free(ApolarOperator<Rational>{v}));  // du^4 - dv^4

    DenseVec<Rational> w = DenseVec<Rational>::Constant(5, Rational(0));
    w(1) = Rational(1);  // du^3 dv
    CHECK_FALSE(square_free(ApolarOperator<Rational>{w}));

    DenseVec<Rational> um = DenseVec<Rational>::Constant(4, Rational(0));
    um(0) = Rational(1);  // du^3
    CHECK_FALSE(square_free(ApolarOperator<Rational>{um}));

    DenseVec<Rational> pair = DenseVec<Rational>::Constant(3, Rational(0));
    pair(0) = Rational(1);
    pair(1) = Rational(-3);
    pair(2) = Rational(2);  // (X - Y)(X - 2Y)
    CHECK(square_free(ApolarOperator<Rational>{pair}));

    DenseVec<Rational> sq = DenseVec<Rational>::Constant(3, Rational(0));
    sq(0) = Rational(1);
    sq(1) = Rational(-2);
    sq(2) = Rational(1);  // (X - Y)^2
    CHECK_FALSE(square_free(ApolarOperator<Rational>{sq}));

    // same calls through the float path
    DenseVec<Complex> vf(5);
    vf << Complex(1), Complex(0), Complex(0), Complex(0), Complex(-1);
    CHECK(square_free(ApolarOperator<Complex>{vf}));
    DenseVec<Complex> sf(3);
    sf << Complex(1), Complex(-2), Complex(1);
    CHECK_FALSE(square_free(ApolarOperator<Complex>{sf}));
}

TEST_CASE("roots of apolar operators") {
    DenseVec<Rational> v = DenseVec<Rational>::Constant(5, Rational(0));
    v(0) = Rational(1);
    v(4) = Rational(-1);
    auto rts = roots(ApolarOperator<Rational>{v});
    REQUIRE(rts.size() == 4);
    for (const auto& r : rts) {
        CHECK(std::abs(r[1] - Complex(1)) < 1e-12);
        CHECK(std::abs(std::pow(r[0], 4) - Complex(1)) < 1e-10);  // alpha^4 = 1
    }

    DenseVec<Rational> w = DenseVec<Rational>::Constant(5, Rational(0));
    w(0) = Rational(1);
    w(4) = Rational(1);
    rts = roots(ApolarOperator<Rational>{w});
    REQUIRE(rts.size() == 4);
    for (const auto& r : rts) CHECK(std::abs(std::pow(r[0], 4) + Complex(1)) < 1e-10);

    // general binomial: roots satisfy K(alpha, 1) = 0
    DenseVec<Rational> b = DenseVec<Rational>::Constant(6, Rational(0));
    b(0) = Rational(3);
    b(5) = Rational(-7);
    rts = roots(ApolarOperator<Rational>{b});
    REQUIRE(rts.size() == 5);
    for (const auto& r : rts)
        CHECK(std::abs(Complex(3) * std::pow(r[0], 5) - Complex(7)) < 1e-9);

    // root at infinity: dv = (0,1) vanishes at [1:0]
    DenseVec<Rational> dv = DenseVec<Rational>::Constant(2, Rational(0));
    dv(1) = Rational(1);
    rts = roots(ApolarOperator<Rational>{dv});
    REQUIRE(rts.size() == 1);
    CHECK(rts[0][0] == Complex(1));
    CHECK(rts[0][1] == Complex(0));

    // dense square-free operator through the companion path
    DenseVec<Rational> dense(4);
    dense << Rational(1), Rational(-1), Rational(-4), Rational(4);
    rts = roots(ApolarOperator<Rational>{dense});
    REQUIRE(rts.size() == 3);
    for (const auto& r : rts) {
        Complex val(0);
        for (int j = 0; j <= 3; ++j)
            val += Complex(dense(j).to_double()) * std::pow(r[0], 3 - j) * std::pow(r[1], j);
        CHECK(std::abs(val) < 1e-9);
    }

    DenseVec<Rational> notsf = DenseVec<Rational>::Constant(5, Rational(0));
    notsf(1) = Rational(1);
    CHECK_THROWS_AS(roots(ApolarOperator<Rational>{notsf}), std::invalid_argument);
}

TEST_CASE("sylvester rank") {
    const auto worked = form_from({Rational(1, 2), 0, 0, 0, Rational(1, 2), 0, 0});
    CHECK(sylvester_rank(worked) == 4);

    for (int e = 3; e <= 12; ++e) {
        std::vector<Rational> a(e + 1, Rational(0));
        a[e - 1] = Rational(1);  // the W_d binary form u v^{e-1}
        CHECK(sylvester_rank(form_from(a)) == e);
    }

    CHECK(sylvester_rank(power_form(6, Rational(1), Rational(1))) == 1);

    const auto zero = form_from({0, 0, 0});
    CHECK_THROWS_AS(sylvester_rank(zero), std::invalid_argument);
}

TEST_CASE("sylvester rank against the brute-force oracle") {
    // monomials u^{e-i} v^i: rank is max(i, e-i) + 1 for 0 < i < e, else 1
    for (int e = 3; e <= 8; ++e)
        for (int i = 0; i <= e; ++i) {
            std::vector<Rational> a(e + 1, Rational(0));
            a[i] = Rational(1);
            const auto f = form_from(a);
            const int expected = (i == 0 || i == e) ? 1 : std::max(i, e - i) + 1;
            CHECK(sylvester_rank(f) == expected);
            CHECK(oracle_min_rank(f) == expected);
        }

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const int e = 4 + trial % 5;
        std::vector<Rational> a(e + 1);
        for (int i = 0; i <= e; ++i) a[i] = Rational(coef(rng), 2);
        const auto f = form_from(a);
        if (f.is_zero()) continue;
        CHECK(sylvester_rank(f) == oracle_min_rank(f));
    }
}

TEST_CASE("sylvester decomposition") {
    // v^e comes back as the single pair (0, 1) with unit weight
    const auto ve = form_from({0, 0, 0, 0, Rational(1)});
    const auto rv = sylvester_decompose(ve);
    REQUIRE(rv.terms.size() == 1);
    CHECK(std::abs(rv.terms[0].weight - Complex(1)) < 1e-12);
    CHECK(std::abs(rv.terms[0].alpha) < 1e-12);
    CHECK(std::abs(rv.terms[0].beta - Complex(1)) < 1e-12);

    // the worked degree-6 form: rank 4, roots of unity, exact coefficients back
    const auto worked = form_from({Rational(1, 2), 0, 0, 0, Rational(1, 2), 0, 0});
    const auto rw = sylvester_decompose(worked);
    CHECK(rw.rank == 4);
    CHECK(rw.residual <= 1e-12);
    const auto rebuilt = form_from_waring(6, rw.terms);
    for (int s = 0; s <= 6; ++s)
        CHECK(std::abs(rebuilt.a(s) - Complex(worked.a(s).to_double())) <= 1e-10);

    // random forms built from three known points reconstruct to 1e-9
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        WaringDecomposition truth;
        for (int i = 0; i < 3; ++i)
            truth.push_back({Complex(uni(rng)), Complex(uni(rng)), Complex(1 + 0.3 * i)});
        const auto f = form_from_waring(6, truth);
        if (rank_numeric(catalecticant(f, 3), 1e-10) != 3) continue;  // degenerate draw
        const auto res = sylvester_decompose(f);
        CHECK(res.rank == 3);
        const auto back = form_from_waring(6, res.terms);
        double err = 0, scale = 1;
        for (int s = 0; s <= 6; ++s) {
            err = std::max(err, std::abs(back.a(s) - f.a(s)));
            scale = std::max(scale, std::abs(f.a(s)));
        }
        CHECK(err / scale <= 1e-9);
    }
}

TEST_CASE("minimizer forms") {
    const DegreeProfile p({3, 3});
    const auto f = minimizer_form<Rational>(p, 1, 1);
    REQUIRE(f.degree() == 6);
    CHECK(f.a(0) == Rational(1));
    CHECK(f.a(4) == Rational(1, 2));
    for (int s : {1, 2, 3, 5, 6}) CHECK(f.a(s) == Rational(0));
    CHECK(sylvester_rank(f) == 4);

    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) CHECK(sylvester_rank(minimizer_form<Rational>(p, s1, s2)) == 4);
    CHECK(2 * sylvester_rank(f) == 8);  // two curves, rank four each

    CHECK_THROWS_AS(minimizer_form<Rational>(p, 0, 1), std::invalid_argument);

    // a taste of both branches of the rank argument
    for (const DegreeProfile& q :
         {DegreeProfile({3, 3}), DegreeProfile({6, 6}), DegreeProfile({3, 3, 3}),
          DegreeProfile({6, 6, 6}), DegreeProfile({3, 3, 3, 3})}) {
        const int expected = q.total() - 2 * q.k() + 2;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                CHECK(sylvester_rank(minimizer_form<Rational>(q, s1, s2)) == expected);
    }
}
