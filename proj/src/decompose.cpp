#include "wdecomp/decompose.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "wdecomp/curves.hpp"
#include "wdecomp/wsystem.hpp"

namespace wdecomp {

long long bound_value(const DegreeProfile& profile) {
    return (1ll << (profile.k() - 1)) * (profile.total() - 2 * profile.k() + 2);
}

long long prior_bound_delta(const DegreeProfile& profile) {
    // for k = 2 the best previously known bound already coincides with ours
    if (profile.k() == 2) return 0;
    return (1ll << profile.k()) * (profile.k() - 1);
}

double default_tolerance() {
    if (const char* env = std::getenv("WDECOMP_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-8;
}

namespace {

struct SignPair {
    int s1;
    int s2;
    friend bool operator<(SignPair a, SignPair b) {
        return std::tie(a.s1, a.s2) < std::tie(b.s1, b.s2);
    }
};

template <class S>
BinaryForm<S> to_scalar(const BinaryForm<Rational>& f) {
    if constexpr (std::is_same_v<S, Rational>) {
        return f;
    } else {
        BinaryForm<S> out;
        out.a.resize(f.a.size());
        for (Eigen::Index i = 0; i < f.a.size(); ++i) out.a(i) = S(f.a(i).to_double());
        return out;
    }
}

template <class S>
std::vector<RankOneTerm<Complex>> run_pipeline_for(const CurveSpec& curve,
                                                   const AnchorChoice& anchors,
                                                   const SolutionTable& table,
                                                   std::map<SignPair, SylvesterResult>& cache,
                                                   std::mutex& cache_mutex,
                                                   const NumericOptions& numeric) {
    const DegreeProfile& profile = curve.profile;
    const int k = profile.k();
    const int d = profile.total();
    const CurveSpanElement<Rational> element = assemble_TJ(profile, anchors, table, curve.J);
    const BinaryForm<Rational> corrected = corrected_form(element);

    const SignPair key{sigma(curve, anchors, k - 2) * (curve.J.size() % 2 ? -1 : 1),
                       sigma(curve, anchors, d - k)};
    SylvesterResult syl;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const auto reference = minimizer_form<Rational>(profile, key.s1, key.s2);
            if (!(corrected.a == reference.a))
                throw std::logic_error("corrected form disagrees with its sign variant");
            it = cache.emplace(key, sylvester_decompose(to_scalar<S>(corrected), numeric)).first;
        }
        syl = it->second;
    }

    std::vector<WaringTerm> waring = syl.terms;
    return pullback(curve, anchors, waring);
}

}  // namespace

DecompositionReport decompose_w_product(const DegreeProfile& profile,
                                        const DecomposeOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const int k = profile.k();
    const AnchorChoice anchors = options.anchors ? *options.anchors : default_anchors(profile);
    if (!valid_anchors(profile, anchors)) throw std::invalid_argument("invalid anchor choice");
    const SolutionTable table = closed_form_solution(profile, anchors, /*sparse=*/true);
    const std::vector<SubsetJ> subsets = all_subsets(k);

    std::map<SignPair, SylvesterResult> cache;
    std::mutex cache_mutex;
    const auto run_one = [&](SubsetJ J) {
        const CurveSpec curve{profile, J};
        if (options.mode == ScalarMode::Hybrid)
            return run_pipeline_for<Rational>(curve, anchors, table, cache, cache_mutex,
                                              options.numeric);
        return run_pipeline_for<Complex>(curve, anchors, table, cache, cache_mutex,
                                         options.numeric);
    };

    std::vector<std::vector<RankOneTerm<Complex>>> per_j(subsets.size());
    int workers = options.parallel > 0 ? options.parallel
                                       : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(subsets.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < subsets.size(); ++i) per_j[i] = run_one(subsets[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> futs;
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < subsets.size();
                     i = next.fetch_add(1))
                    per_j[i] = run_one(subsets[i]);
            }));
        for (auto& f : futs) f.get();
    }

    long long prod = 1;
    for (int dj : profile.degrees) prod *= dj;
    DecompositionReport rep;
    rep.bound = bound_value(profile);
    rep.decomposition.profile = profile;
    rep.decomposition.target_scale = options.scaled ? static_cast<double>(prod) : 1.0;
    const Complex weight_scale = options.scaled ? Complex(1) : Complex(1.0 / prod);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        rep.per_j_ranks.emplace_back(subsets[i], static_cast<int>(per_j[i].size()));
        for (auto& term : per_j[i]) {
            term.weight *= weight_scale;
            rep.decomposition.terms.push_back(std::move(term));
        }
    }
    rep.length = static_cast<long long>(rep.decomposition.terms.size());
    if (rep.length > rep.bound) throw std::logic_error("decomposition exceeds the bound");

    const VerifyResult v = verify_decomposition(rep.decomposition, options.tolerance);
    rep.residual = v.residual;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) throw VerificationError(v.residual);
    return rep;
}

VerifyResult verify_decomposition(const Decomposition<Complex>& dec, double tolerance) {
    const LayoutPtr layout = make_layout(dec.profile);
    const CoordTensor<Complex> actual = eval_decomposition(layout, dec);
    CoordTensor<Complex> target = w_product<Complex>(layout, /*scaled=*/false);
    target.z *= Complex(dec.target_scale);
    const double res = residual(actual, target);
    return {res <= tolerance, res};
}

}  // namespace wdecomp
