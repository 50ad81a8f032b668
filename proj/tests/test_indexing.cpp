#include <doctest.h>

#include <set>
#include <stdexcept>

#include "wdecomp/indexing.hpp"

using namespace wdecomp;

namespace {
SubsetJ subset_of(std::initializer_list<int> members) {
    SubsetJ j;
    for (int r : members) j.mask |= 1u << (r - 2);
    return j;
}
}  // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(DegreeProfile({3}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeProfile({2, 3}), std::invalid_argument);
    const DegreeProfile p({3, 4});
    CHECK(p.k() == 2);
    CHECK(p.total() == 7);
    CHECK(p.ambient_size() == 20);
}

TEST_CASE("index enumeration order") {
    const DegreeProfile p({3, 3});
    CHECK(enumerate_indices(p, 1) == std::vector<MultiIndex>{{1, 0}, {0, 1}});
    CHECK(enumerate_indices(p, 0) == std::vector<MultiIndex>{{0, 0}});
    CHECK(enumerate_indices(p, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_indices(DegreeProfile({3, 3, 3})).size() == 64);
    CHECK_THROWS_AS(enumerate_indices(p, 7), std::out_of_range);
    CHECK_THROWS_AS(enumerate_indices(p, -1), std::out_of_range);

    // graded: degree never decreases along the full enumeration
    int last = 0;
    for (const auto& i : enumerate_indices(p)) {
        CHECK(index_degree(i) >= last);
        last = index_degree(i);
    }
}

TEST_CASE("standard shift") {
    const DegreeProfile p({3, 3});
    CHECK(standard_shift(p, {2, 2}, 1, 2) == MultiIndex{1, 3});
    CHECK(standard_shift(p, {1, 3}, 2, 1) == MultiIndex{2, 2});
    CHECK_THROWS_AS(standard_shift(p, {0, 1}, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(standard_shift(p, {1, 3}, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(standard_shift(p, {1, 1}, 1, 1), std::invalid_argument);

    const DegreeProfile q({3, 4});
    for (const auto& i : enumerate_indices(q))
        for (int r1 = 1; r1 <= 2; ++r1)
            for (int r2 = 1; r2 <= 2; ++r2) {
                if (r1 == r2) continue;
                if (i[r1 - 1] < 1 || i[r2 - 1] > q.degrees[r2 - 1] - 1) continue;
                CHECK(standard_shift(q, standard_shift(q, i, r1, r2), r2, r1) == i);
            }
}

TEST_CASE("epsilon signs against the worked 3,3 table") {
    const SubsetJ j2 = subset_of({2});
    CHECK(epsilon_sign(j2, {1, 0}, {0, 1}) == -1);
    CHECK(epsilon_sign(j2, {2, 2}, {1, 3}) == -1);
    CHECK(epsilon_sign(j2, {2, 2}, {2, 2}) == 1);
    CHECK(epsilon_sign(SubsetJ{}, {2, 2}, {1, 3}) == 1);
    const MultiIndex t10{1, 0}, i11{1, 1};
    CHECK_THROWS_AS(epsilon_sign(j2, t10, i11), std::invalid_argument);

    // full T^{{2}} sign row for d=(3,3): anchors (s,0) except (2,2) at s=4
    const DegreeProfile p({3, 3});
    const AnchorChoice anchors = default_anchors(p);
    std::vector<int> signs;
    for (const auto& i : enumerate_indices(p))
        signs.push_back(epsilon_sign(j2, anchors.at(index_degree(i)), i));
    CHECK(signs == std::vector<int>{1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1});
}

TEST_CASE("epsilon multiplicative over singletons") {
    for (const DegreeProfile& p :
         {DegreeProfile({3, 3, 3}), DegreeProfile({3, 4, 3}), DegreeProfile({3, 3, 3, 3})}) {
        const int k = p.k();
        for (int s = 0; s <= p.total(); ++s) {
            const auto slice = enumerate_indices(p, s);
            const MultiIndex anchor = slice.front();
            for (const auto& i : slice)
                for (SubsetJ J : all_subsets(k)) {
                    int prod = 1;
                    for (int r = 2; r <= k; ++r)
                        if (J.contains(r)) prod *= epsilon_sign(SubsetJ{1u << (r - 2)}, anchor, i);
                    CHECK(epsilon_sign(J, anchor, i) == prod);
                }
        }
    }
}

TEST_CASE("subset order") {
    const auto js3 = all_subsets(3);
    REQUIRE(js3.size() == 4);
    CHECK(js3[0].members(3).empty());
    CHECK(js3[1].members(3) == std::vector<int>{2});
    CHECK(js3[2].members(3) == std::vector<int>{3});
    CHECK(js3[3].members(3) == std::vector<int>{2, 3});

    const auto js4 = all_subsets(4);
    REQUIRE(js4.size() == 8);
    CHECK(js4[4].members(4) == std::vector<int>{2, 3});
    CHECK(js4[5].members(4) == std::vector<int>{2, 4});
    CHECK(js4[6].members(4) == std::vector<int>{3, 4});
    CHECK(js4[7].members(4) == std::vector<int>{2, 3, 4});
}

TEST_CASE("sign pattern sets") {
    const DegreeProfile p3({3, 3, 3});
    const auto b1 = sign_pattern_set(p3, 1, enumerate_indices(p3, 1).front());
    CHECK(b1.size() == 3);
    CHECK(b1 == std::set<std::vector<int>>{{1, 1}, {-1, 1}, {1, -1}});
    CHECK(sign_pattern_set(p3, 2, enumerate_indices(p3, 2).front()).size() == 4);

    const DegreeProfile p2({3, 3});
    CHECK(sign_pattern_set(p2, 0, {0, 0}) == std::set<std::vector<int>>{{1}});

    // cardinality is anchor independent
    for (int s = 0; s <= p3.total(); ++s) {
        const auto slice = enumerate_indices(p3, s);
        const auto ref = sign_pattern_set(p3, s, slice.front()).size();
        for (const auto& t : slice) CHECK(sign_pattern_set(p3, s, t).size() == ref);
    }
}

TEST_CASE("minimal degree with the full pattern set") {
    CHECK(min_full_pattern_degree(DegreeProfile({3, 3})) == 1);
    CHECK(min_full_pattern_degree(DegreeProfile({3, 3, 3})) == 2);
    CHECK(min_full_pattern_degree(DegreeProfile({3, 4, 3, 5})) == 3);
}

TEST_CASE("subset parity counts") {
    const auto c1 = subset_parity_counts(subset_of({2}), 3);
    CHECK(c1.even_inter == 2);
    CHECK(c1.odd_inter == 2);
    CHECK(c1.even_sum == 2);
    CHECK(c1.odd_sum == 2);

    const auto c2 = subset_parity_counts(SubsetJ{}, 4);
    CHECK(c2.even_inter == 8);
    CHECK(c2.odd_inter == 0);
    CHECK(c2.even_sum == 4);
    CHECK(c2.odd_sum == 4);

    const auto c3 = subset_parity_counts(subset_of({2, 3}), 4);
    CHECK(c3.even_inter == 4);
    CHECK(c3.odd_inter == 4);
    CHECK(c3.even_sum == 4);
    CHECK(c3.odd_sum == 4);

    for (int k = 2; k <= 6; ++k)
        for (std::uint32_t n = 1; n + 1 < (1u << (k - 1)); ++n) {
            const auto c = subset_parity_counts(SubsetJ{n}, k);
            const long long want = 1ll << (k - 2);
            CHECK(c.even_inter == want);
            CHECK(c.odd_inter == want);
            CHECK(c.even_sum == want);
            CHECK(c.odd_sum == want);
        }
}

TEST_CASE("default anchors") {
    for (const DegreeProfile& p :
         {DegreeProfile({3, 3}), DegreeProfile({3, 4}), DegreeProfile({3, 4, 5}),
          DegreeProfile({3, 3, 3, 3})}) {
        const AnchorChoice a = default_anchors(p);
        CHECK(valid_anchors(p, a));
        const int k = p.k();
        MultiIndex w(p.k());
        for (int j = 0; j < p.k(); ++j) w[j] = p.degrees[j] - 1;
        CHECK(a.at(p.total() - p.k()) == w);
        // free-degree anchors keep every tail entry even (bottom) or congruent
        // to d_j (top), the validity condition for the closed-form solution
        for (int s = 0; s <= k - 2; ++s)
            for (int j = 1; j < k; ++j) CHECK(a.at(s)[j] % 2 == 0);
        for (int s = p.total() - k + 2; s <= p.total(); ++s)
            for (int j = 1; j < k; ++j) CHECK((p.degrees[j] - a.at(s)[j]) % 2 == 0);
    }
}
