#include "doctest.h"

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/matchings.hpp"

using namespace haarcomm;

namespace {

const Matching kSigma = Matching::from_blocks(
    {{1, 4}, {2, 9}, {3, 7}, {5, 6}, {8, 10}, {11, 17}, {12, 16}, {13, 15}, {14, 18}});
const Matching kTau = Matching::from_blocks(
    {{1, 4}, {2, 5}, {3, 16}, {6, 17}, {7, 8}, {9, 12}, {10, 11}, {13, 14}, {15, 18}});

}  // namespace

TEST_CASE("matching counts are double factorials") {
    CHECK(all_matchings(1).size() == 1);
    CHECK(all_matchings(2).size() == 3);
    CHECK(all_matchings(3).size() == 15);
    for (int n = 1; n <= 6; ++n) CHECK(BigInt(static_cast<long>(all_matchings(n).size())) == double_factorial(2 * n - 1));
}

TEST_CASE("canonical storage and validation") {
    const auto m = Matching::from_blocks({{4, 3}, {2, 1}});
    CHECK(m.blocks() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(m == Matching::trivial(2));
    CHECK_THROWS_AS(Matching::from_blocks({{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Matching::from_blocks({{1, 2}, {3, 5}}), std::invalid_argument);
}

TEST_CASE("coset types of the worked examples") {
    CHECK(coset_type(kSigma) == Partition{4, 4, 1});
    CHECK(coset_type(kTau) == Partition{5, 2, 1, 1});
    CHECK(coset_type(Matching::trivial(4)) == Partition::ones(4));
}

TEST_CASE("permutational matchings") {
    CHECK(is_permutational(kTau));
    CHECK_FALSE(is_permutational(kSigma));
    CHECK_THROWS_AS(perm_from_matching(kSigma), std::invalid_argument);
    const Permutation p = perm_from_matching(kTau);
    CHECK(p == Permutation::from_cycles(9, {{1, 2, 8, 9, 3}, {5, 6}}));
    CHECK(perm_from_matching(Matching::trivial(3)) == Permutation::identity(3));
    for (int n = 1; n <= 4; ++n) {
        for (const auto& pi : all_permutations(n)) {
            const Matching m = matching_from_perm(pi);
            CHECK(perm_from_matching(m) == pi);
            CHECK(coset_type(m) == cycle_type(pi));
        }
    }
}

TEST_CASE("Brauer product of permutational matchings follows permutation product") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& a : all_permutations(n)) {
            for (const auto& b : all_permutations(n)) {
                const auto r = brauer_product(matching_from_perm(a), matching_from_perm(b));
                CHECK(r.loops == 0);
                CHECK(perm_from_matching(r.product) == b * a);
            }
            const auto sq = brauer_product(matching_from_perm(a), matching_from_perm(a));
            CHECK(perm_from_matching(sq.product) == a * a);
        }
    }
}

TEST_CASE("trivial matching: identity under the product, n loops against itself") {
    for (int n = 1; n <= 3; ++n) {
        const Matching t = Matching::trivial(n);
        const auto r = brauer_product(t, t);
        CHECK(r.product == t);
        CHECK(r.loops == 0);
        CHECK(pair_loops(t, t) == n);
    }
}

TEST_CASE("Brauer product is associative with additive loop counts") {
    const auto ms = all_matchings(3);
    for (std::size_t x = 0; x < ms.size(); x += 2) {
        for (std::size_t y = 0; y < ms.size(); y += 3) {
            for (std::size_t z = 0; z < ms.size(); z += 4) {
                const auto ab = brauer_product(ms[x], ms[y]);
                const auto left = brauer_product(ab.product, ms[z]);
                const auto bc = brauer_product(ms[y], ms[z]);
                const auto right = brauer_product(ms[x], bc.product);
                CHECK(left.product == right.product);
                CHECK(ab.loops + left.loops == bc.loops + right.loops);
            }
        }
    }
}

TEST_CASE("a matching against a cap-cup closes loops") {
    // {1,3},{2,4} joined with itself top to bottom leaves one closed loop
    const auto cap = Matching::from_blocks({{1, 3}, {2, 4}});
    const auto r = brauer_product(cap, cap);
    CHECK(r.loops == 1);
    CHECK(r.product == cap);
}

TEST_CASE("delta functions") {
    const std::vector<int> paired{1, 1, 2, 2, 3, 3};
    CHECK(delta_eval(Matching::trivial(3), paired));
    CHECK_FALSE(delta_eval(Matching::trivial(1), std::vector<int>{1, 2}));
    for (const auto& m : all_matchings(3)) CHECK(delta_eval(m, std::vector<int>(6, 5)));
    // summing Delta over all index lists counts N^n
    for (int n = 1; n <= 3; ++n) {
        for (int N = 1; N <= 4; ++N) {
            for (const auto& m : all_matchings(n)) {
                std::vector<int> idx(2 * n, 1);
                long total = 0;
                while (true) {
                    total += delta_eval(m, idx);
                    int pos = 0;
                    while (pos < 2 * n && idx[pos] == N) idx[pos++] = 1;
                    if (pos == 2 * n) break;
                    ++idx[pos];
                }
                long expected = 1;
                for (int k = 0; k < n; ++k) expected *= N;
                CHECK(total == expected);
            }
        }
    }
}

TEST_CASE("pair types of two matchings") {
    for (const auto& m : all_matchings(3)) {
        CHECK(pair_type(m, m) == Partition::ones(3));
        CHECK(pair_type(m, Matching::trivial(3)) == coset_type(m));
        CHECK(pair_loops(m, Matching::trivial(3)) == coset_type(m).length());
    }
}

TEST_CASE("coset representatives realize the matching") {
    const auto rep = coset_representative(kSigma);
    REQUIRE(rep.size() == 18);
    for (int i = 0; i < 9; ++i) {
        CHECK(rep[2 * i] < rep[2 * i + 1]);
        CHECK(kSigma.partner(rep[2 * i] - 1) == rep[2 * i + 1] - 1);
        if (i > 0) CHECK(rep[2 * i - 2] < rep[2 * i]);
    }
}
