#include "doctest.h"

#include "haarcomm/brauer.hpp"
#include "haarcomm/characters.hpp"
#include "haarcomm/exact_formulas.hpp"

using namespace haarcomm;

TEST_CASE("LR coefficients: trivial, Pieri and a small tableau") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& nu : partitions_of(n)) {
            for (const auto& lambda : partitions_of(n)) CHECK(lr_coefficient(nu, lambda, {}) == (nu == lambda ? 1 : 0));
        }
    }
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    // Pieri: c^nu_{lambda,(k)} = 1 iff nu/lambda is a horizontal strip
    CHECK(lr_coefficient({3, 1}, {1, 1}, {2}) == 1);
    CHECK(lr_coefficient({2, 1, 1}, {1, 1}, {2}) == 1);
    CHECK(lr_coefficient({2, 2}, {1, 1}, {2}) == 0);
}

TEST_CASE("LR coefficients are symmetric in the inner shapes") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& nu : partitions_of(n)) {
            for (int k = 1; k < n; ++k) {
                for (const auto& lambda : partitions_of(k)) {
                    for (const auto& rho : partitions_of(n - k)) {
                        CHECK(lr_coefficient(nu, lambda, rho) == lr_coefficient(nu, rho, lambda));
                    }
                }
            }
        }
    }
}

TEST_CASE("top Brauer characters are symmetric group characters") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) CHECK(brauer_character(lambda, mu) == character(lambda, mu));
        }
    }
    CHECK(brauer_character({1}, {1, 1, 1}) == 3);
}

TEST_CASE("Brauer dimensions") {
    CHECK(brauer_dimension({}, 2) == 1);
    CHECK(brauer_dimension({1}, 3) == 3);
    for (const auto& lambda : partitions_of(4)) CHECK(brauer_dimension(lambda, 4) == dimension(lambda));
    for (int n = 1; n <= 6; ++n) {
        for (int h = 0; 2 * h <= n; ++h) {
            for (const auto& lambda : partitions_of(n - 2 * h)) {
                CHECK(BigInt(static_cast<long>(brauer_character(lambda, Partition::ones(n)))) ==
                      brauer_dimension(lambda, n));
            }
        }
    }
}

TEST_CASE("full cycles: only the empty shape survives below the top") {
    for (int n = 2; n <= 8; ++n) {
        for (int h = 1; 2 * h <= n; ++h) {
            for (const auto& lambda : partitions_of(n - 2 * h)) {
                CHECK(brauer_character(lambda, {n}) == (lambda.empty() ? 1 : 0));
            }
        }
    }
    for (int m = 1; m <= 4; ++m) CHECK(brauer_character({}, {2 * m}) == 1);
}

TEST_CASE("power sums in orthogonal characters") {
    const auto p3 = p_to_o_expansion({3});
    CHECK(p3.at({0, Partition{3}}) == 1);
    CHECK(p3.at({0, Partition{2, 1}}) == -1);
    CHECK(p3.at({0, Partition{1, 1, 1}}) == 1);
    CHECK(p3.at({1, Partition{1}}) == 0);
    const auto p1 = p_to_o_expansion({1});
    CHECK(p1.size() == 1);
    CHECK(p1.at({0, Partition{1}}) == 1);
    const auto p2 = p_to_o_expansion({2});
    CHECK(p2.at({0, Partition{2}}) == 1);
    CHECK(p2.at({0, Partition{1, 1}}) == -1);
    CHECK(p2.at({1, Partition{}}) == 1);
}

TEST_CASE("orthogonal characters in power sums invert the expansion") {
    // o_(2) = (p_1^2 + p_2)/2 - 1 and o_(1,1) = (p_1^2 - p_2)/2
    const auto o2 = o_in_power_sums({2});
    CHECK(o2.at({1, 1}) == rational(1, 2));
    CHECK(o2.at({2}) == rational(1, 2));
    CHECK(o2.at({}) == -1);
    const auto o11 = o_in_power_sums({1, 1});
    CHECK(o11.at({1, 1}) == rational(1, 2));
    CHECK(o11.at({2}) == rational(-1, 2));
    const auto s21 = s_in_power_sums({2, 1});
    CHECK(s21.at({1, 1, 1}) == rational(1, 3));
    CHECK(s21.at({3}) == rational(-1, 3));
}
