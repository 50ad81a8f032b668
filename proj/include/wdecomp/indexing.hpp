#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace wdecomp {

// A multi-index (i_1,...,i_k) with 0 <= i_j <= d_j. Factor labels are 1-based
// throughout, matching the usual multiprojective notation.
using MultiIndex = std::vector<int>;

struct DegreeProfile {
    std::vector<int> degrees;

    DegreeProfile() = default;
    explicit DegreeProfile(std::vector<int> d);

    [[nodiscard]] int k() const { return static_cast<int>(degrees.size()); }
    [[nodiscard]] int total() const;
    [[nodiscard]] long long ambient_size() const;  // prod (d_j + 1)
    [[nodiscard]] bool contains(const MultiIndex& i) const;
    [[nodiscard]] std::string str() const;  // "3,3,4"

    friend bool operator==(const DegreeProfile& a, const DegreeProfile& b) {
        return a.degrees == b.degrees;
    }
};

[[nodiscard]] int index_degree(const MultiIndex& i);

// Subset J of [2,k]; bit (r-2) set means r in J. eps_r^J = -1 iff r in J.
struct SubsetJ {
    std::uint32_t mask = 0;

    [[nodiscard]] bool contains(int r) const { return (mask >> (r - 2)) & 1u; }
    [[nodiscard]] int size() const { return __builtin_popcount(mask); }
    [[nodiscard]] int eps(int r) const { return contains(r) ? -1 : 1; }
    [[nodiscard]] std::vector<int> members(int k) const;
    [[nodiscard]] std::string str(int k) const;  // "{2,4}" or "{}"

    friend bool operator==(SubsetJ a, SubsetJ b) { return a.mask == b.mask; }
    friend bool operator<(SubsetJ a, SubsetJ b) { return a.mask < b.mask; }
};

// All 2^{k-1} subsets of [2,k], ordered by cardinality, then lexicographically
// on the sorted member lists: {}, {2}, ..., {k}, {2,3}, {2,4}, ...
[[nodiscard]] std::vector<SubsetJ> all_subsets(int k);

// A_d, or the slice A_{d,s} when s is given. Graded lexicographic order,
// grade ascending; within a grade, lexicographic with i_1 most significant,
// entries compared descending.
[[nodiscard]] std::vector<MultiIndex> enumerate_indices(const DegreeProfile& profile);
[[nodiscard]] std::vector<MultiIndex> enumerate_indices(const DegreeProfile& profile, int s);

// Delta_{r1,r2}: decrement entry r1, increment entry r2 (1-based labels).
[[nodiscard]] MultiIndex standard_shift(const DegreeProfile& profile,
                                        const MultiIndex& i, int r1, int r2);

// eps_i^J = (-1)^{|N_i cap J|} with N_i = { j >= 2 : t_j - i_j odd }. N_i is a
// set of positions; the anchor t fixes where the sign is +1.
[[nodiscard]] int epsilon_sign(SubsetJ J, const MultiIndex& anchor, const MultiIndex& i);

// Per-degree anchors t^{(s)}; t^{(d-k)} is pinned to (d_1-1,...,d_k-1).
struct AnchorChoice {
    std::vector<MultiIndex> by_degree;  // size d+1

    [[nodiscard]] const MultiIndex& at(int s) const { return by_degree.at(s); }
};

// Anchors for which the closed-form solution of the W system is valid: at the
// free degrees s in [0,k-2] and [d-k+2,d] every entry t_j (j >= 2) is kept
// congruent mod 2 to 0 resp. d_j, which rules out N_i = [2,k]. Elsewhere the
// anchor is the first index of the slice.
[[nodiscard]] AnchorChoice default_anchors(const DegreeProfile& profile);

[[nodiscard]] bool valid_anchors(const DegreeProfile& profile, const AnchorChoice& anchors);

// B_{d,s}: the set of sign patterns (eps_i^{{2}},...,eps_i^{{k}}) over the slice.
[[nodiscard]] std::set<std::vector<int>> sign_pattern_set(const DegreeProfile& profile, int s,
                                                          const MultiIndex& anchor);

// Smallest s with |B_{d,s}| = 2^{k-1}; equals k-1 for every valid profile.
[[nodiscard]] int min_full_pattern_degree(const DegreeProfile& profile);

struct ParityCounts {
    long long even_inter = 0;  // |J cap N| even
    long long odd_inter = 0;
    long long even_sum = 0;  // |J| + |J cap N| even
    long long odd_sum = 0;
};

// Counts of J subseteq [2,k] by parity of |J cap N| and |J| + |J cap N|,
// by direct enumeration.
[[nodiscard]] ParityCounts subset_parity_counts(SubsetJ N, int k);

}  // namespace wdecomp
