#include "wdecomp/indexing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wdecomp {

DegreeProfile::DegreeProfile(std::vector<int> d) : degrees(std::move(d)) {
    if (degrees.size() < 2) throw std::invalid_argument("profile needs k >= 2 factors");
    for (int dj : degrees)
        if (dj < 3) throw std::invalid_argument("degrees must be >= 3");
}

int DegreeProfile::total() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

long long DegreeProfile::ambient_size() const {
    long long n = 1;
    for (int dj : degrees) n *= dj + 1;
    return n;
}

bool DegreeProfile::contains(const MultiIndex& i) const {
    if (static_cast<int>(i.size()) != k()) return false;
    for (int j = 0; j < k(); ++j)
        if (i[j] < 0 || i[j] > degrees[j]) return false;
    return true;
}

std::string DegreeProfile::str() const {
    std::string s;
    for (int j = 0; j < k(); ++j) {
        if (j) s += ',';
        s += std::to_string(degrees[j]);
    }
    return s;
}

int index_degree(const MultiIndex& i) {
    return std::accumulate(i.begin(), i.end(), 0);
}

std::vector<int> SubsetJ::members(int k) const {
    std::vector<int> m;
    for (int r = 2; r <= k; ++r)
        if (contains(r)) m.push_back(r);
    return m;
}

std::string SubsetJ::str(int k) const {
    std::string s = "{";
    bool first = true;
    for (int r : members(k)) {
        if (!first) s += ',';
        s += std::to_string(r);
        first = false;
    }
    return s + "}";
}

std::vector<SubsetJ> all_subsets(int k) {
    std::vector<SubsetJ> js;
    js.reserve(1u << (k - 1));
    for (std::uint32_t m = 0; m < (1u << (k - 1)); ++m) js.push_back({m});
    std::sort(js.begin(), js.end(), [k](SubsetJ a, SubsetJ b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members(k) < b.members(k);
    });
    return js;
}

namespace {

void emit_slice(const DegreeProfile& profile, int pos, int rem, MultiIndex& cur,
                std::vector<MultiIndex>& out) {
    const int k = profile.k();
    if (pos == k) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    // descending entry loop yields descending lexicographic order directly
    for (int v = std::min(profile.degrees[pos], rem); v >= 0; --v) {
        cur.push_back(v);
        emit_slice(profile, pos + 1, rem - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(const DegreeProfile& profile, int s) {
    if (s < 0 || s > profile.total()) throw std::out_of_range("slice degree out of [0,d]");
    std::vector<MultiIndex> out;
    MultiIndex cur;
    cur.reserve(profile.k());
    emit_slice(profile, 0, s, cur, out);
    return out;
}

std::vector<MultiIndex> enumerate_indices(const DegreeProfile& profile) {
    std::vector<MultiIndex> out;
    out.reserve(profile.ambient_size());
    for (int s = 0; s <= profile.total(); ++s) {
        auto slice = enumerate_indices(profile, s);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

MultiIndex standard_shift(const DegreeProfile& profile, const MultiIndex& i, int r1, int r2) {
    if (!profile.contains(i)) throw std::invalid_argument("index outside A_d");
    if (r1 == r2 || r1 < 1 || r2 < 1 || r1 > profile.k() || r2 > profile.k())
        throw std::invalid_argument("shift factors must be distinct labels in [1,k]");
    if (i[r1 - 1] < 1 || i[r2 - 1] > profile.degrees[r2 - 1] - 1)
        throw std::out_of_range("standard shift out of bounds");
    MultiIndex out = i;
    --out[r1 - 1];
    ++out[r2 - 1];
    return out;
}

int epsilon_sign(SubsetJ J, const MultiIndex& anchor, const MultiIndex& i) {
    if (anchor.size() != i.size() || index_degree(anchor) != index_degree(i))
        throw std::invalid_argument("epsilon_sign: anchor and index must share a degree slice");
    int parity = 0;
    for (std::size_t j = 1; j < i.size(); ++j) {
        if (((anchor[j] - i[j]) & 1) && J.contains(static_cast<int>(j) + 1)) parity ^= 1;
    }
    return parity ? -1 : 1;
}

namespace {

// Degree-s index with all entries at positions >= 2 even, head-loading factor 1.
// Returns empty when no such index exists.
MultiIndex parity_safe_bottom(const DegreeProfile& profile, int s) {
    const int k = profile.k();
    MultiIndex t(k, 0);
    t[0] = std::min(s, profile.degrees[0]);
    int rem = s - t[0];
    if ((rem & 1) && t[0] >= 1) {
        --t[0];
        ++rem;
    }
    for (int j = 1; j < k && rem > 0; ++j) {
        int c = std::min(2 * (profile.degrees[j] / 2), rem);
        c -= c & 1;
        t[j] = c;
        rem -= c;
    }
    return rem == 0 ? t : MultiIndex{};
}

}  // namespace

AnchorChoice default_anchors(const DegreeProfile& profile) {
    const int k = profile.k();
    const int d = profile.total();
    AnchorChoice a;
    a.by_degree.resize(d + 1);
    for (int s = 0; s <= d; ++s) {
        if (s == d - k) {
            MultiIndex w(k);
            for (int j = 0; j < k; ++j) w[j] = profile.degrees[j] - 1;
            a.by_degree[s] = std::move(w);
            continue;
        }
        MultiIndex t;
        if (s <= k - 2) {
            t = parity_safe_bottom(profile, s);
        } else if (s >= d - k + 2) {
            MultiIndex c = parity_safe_bottom(profile, d - s);
            if (!c.empty()) {
                t.resize(k);
                for (int j = 0; j < k; ++j) t[j] = profile.degrees[j] - c[j];
            }
        }
        if (t.empty()) t = enumerate_indices(profile, s).front();
        a.by_degree[s] = std::move(t);
    }
    return a;
}

bool valid_anchors(const DegreeProfile& profile, const AnchorChoice& anchors) {
    const int d = profile.total();
    const int k = profile.k();
    if (static_cast<int>(anchors.by_degree.size()) != d + 1) return false;
    for (int s = 0; s <= d; ++s) {
        const MultiIndex& t = anchors.by_degree[s];
        if (!profile.contains(t) || index_degree(t) != s) return false;
    }
    for (int j = 0; j < k; ++j)
        if (anchors.by_degree[d - k][j] != profile.degrees[j] - 1) return false;
    return true;
}

std::set<std::vector<int>> sign_pattern_set(const DegreeProfile& profile, int s,
                                            const MultiIndex& anchor) {
    const int k = profile.k();
    std::set<std::vector<int>> patterns;
    for (const MultiIndex& i : enumerate_indices(profile, s)) {
        std::vector<int> p(k - 1);
        for (int r = 2; r <= k; ++r) p[r - 2] = epsilon_sign(SubsetJ{1u << (r - 2)}, anchor, i);
        patterns.insert(std::move(p));
    }
    return patterns;
}

int min_full_pattern_degree(const DegreeProfile& profile) {
    const std::size_t full = 1u << (profile.k() - 1);
    for (int s = 0; s <= profile.total(); ++s) {
        const MultiIndex anchor = enumerate_indices(profile, s).front();
        if (sign_pattern_set(profile, s, anchor).size() == full) return s;
    }
    throw std::logic_error("no degree reaches the full sign-pattern set");
}

ParityCounts subset_parity_counts(SubsetJ N, int k) {
    if (k < 2) throw std::invalid_argument("subset_parity_counts needs k >= 2");
    ParityCounts c;
    for (std::uint32_t m = 0; m < (1u << (k - 1)); ++m) {
        const int inter = __builtin_popcount(m & N.mask);
        const int size = __builtin_popcount(m);
        (inter % 2 ? c.odd_inter : c.even_inter) += 1;
        ((size + inter) % 2 ? c.odd_sum : c.even_sum) += 1;
    }
    return c;
}

}  // namespace wdecomp
