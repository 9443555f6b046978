#include "doctest.h"

#include "haarcomm/characters.hpp"

using namespace haarcomm;

TEST_CASE("hook characters on a full cycle") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < n; ++k) {
            std::vector<int> parts{n - k};
            parts.insert(parts.end(), k, 1);
            CHECK(character(Partition(parts), Partition{n}) == (k % 2 ? -1 : 1));
            CHECK(hook_character(n, k) == (k % 2 ? -1 : 1));
            CHECK(hook_dimension(n, k) == binomial(n - 1, k));
        }
    }
    CHECK(character({2, 1}, {3}) == -1);
    CHECK(hook_character(5, 0) == 1);
    CHECK(hook_character(5, 4) == 1);
    CHECK(hook_character(5, 1) == -1);
}

TEST_CASE("non-hook shapes vanish on a full cycle") {
    CHECK(character({2, 2}, {4}) == 0);
    CHECK(character({3, 2}, {5}) == 0);
}

TEST_CASE("dimensions") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(dimension({n}) == 1);
        if (n >= 2) CHECK(dimension({n - 1, 1}) == n - 1);
        for (const auto& lambda : partitions_of(n)) {
            CHECK(character(lambda, Partition::ones(n)) == dimension(lambda));
            CHECK(BigInt(static_cast<long>(dimension(lambda))) == hook_length_dimension(lambda));
        }
    }
    CHECK(dimension({2, 2}) == 2);
    CHECK(dimension({3, 2, 1}) == 16);
}

TEST_CASE("known character table of S_4") {
    // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns (1^4),(2,1,1),(2,2),(3,1),(4)
    const std::vector<Partition> classes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const std::vector<std::pair<Partition, std::vector<int>>> table{{{4}, {1, 1, 1, 1, 1}},
                                                                    {{3, 1}, {3, 1, -1, 0, -1}},
                                                                    {{2, 2}, {2, 0, 2, -1, 0}},
                                                                    {{2, 1, 1}, {3, -1, -1, 0, 1}},
                                                                    {{1, 1, 1, 1}, {1, -1, 1, 1, -1}}};
    for (const auto& [lambda, row] : table) {
        for (std::size_t c = 0; c < classes.size(); ++c) CHECK(character(lambda, classes[c]) == row[c]);
    }
}

TEST_CASE("characters on a full cycle are odd under conjugation up to sign") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const int sign = (n - 1) % 2 ? -1 : 1;
            CHECK(character(conjugate(lambda), {n}) == sign * character(lambda, {n}));
        }
    }
}

TEST_CASE("weight mismatch is rejected") {
    CHECK_THROWS_AS(character({2, 1}, {2}), std::invalid_argument);
}

TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                BigInt sum = 0;
                for (const auto& mu : parts) sum += BigInt(static_cast<long>(character(mu, a) * character(mu, b)));
                CHECK(sum == (a == b ? centralizer_size(a) : BigInt(0)));
            }
        }
    }
}
