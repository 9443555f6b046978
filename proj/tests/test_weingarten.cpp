#include "doctest.h"

#include "haarcomm/characters.hpp"
#include "haarcomm/exact_formulas.hpp"
#include "haarcomm/matchings.hpp"
#include "haarcomm/weingarten.hpp"

using namespace haarcomm;

TEST_CASE("unitary Weingarten closed forms, n <= 2") {
    for (int N = 2; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(wg_u_char({1}, N) == rational(1, N));
        CHECK(wg_u_char({1, 1}, N) == ExactScalar(1 / (M * M - 1)));
        CHECK(wg_u_char({2}, N) == ExactScalar(-1 / (M * (M * M - 1))));
        CHECK(wg_u_gram({1}, N) == rational(1, N));
        CHECK(wg_u_gram({1, 1}, N) == ExactScalar(1 / (M * M - 1)));
        CHECK(wg_u_gram({2}, N) == ExactScalar(-1 / (M * (M * M - 1))));
    }
}

TEST_CASE("character and Gram routes agree, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (int N = n; N <= 8; ++N) {
            for (const auto& mu : partitions_of(n)) CHECK(wg_u_char(mu, N) == wg_u_gram(mu, N));
        }
    }
}

TEST_CASE("Gram route refuses N < n, character route does not") {
    CHECK_THROWS_AS(wg_u_gram({1, 1, 1}, 2), SingularGramError);
    CHECK_THROWS_AS(wg_o_gram({1, 1, 1}, 2), SingularGramError);
    // U(1): only lambda = (2) survives, (1/2) * 1 / (1 * 2)
    CHECK(wg_u_char({1, 1}, 1) == rational(1, 4));
    CHECK(wg_u_char({2}, 1) == rational(1, 4));
}

TEST_CASE("unitary f-identity") {
    for (int n = 1; n <= 4; ++n) {
        for (int N = 1; N <= 7; ++N) {
            for (const auto& lambda : partitions_of(n)) {
                if (lambda.length() > N) continue;
                ExactScalar sum = 0;
                for (const auto& mu : partitions_of(n)) {
                    sum += ExactScalar(class_size(mu)) * character(lambda, mu) * wg_u_char(mu, N);
                }
                const ExactScalar want = ExactScalar(dimension(lambda)) / dim_poly_u(lambda, N);
                CHECK(sum == want);
            }
        }
    }
}

TEST_CASE("orthogonal Weingarten, n <= 2") {
    for (int N = 2; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(wg_o_gram({1}, N) == rational(1, N));
        CHECK(wg_o_gram({1, 1}, N) == ExactScalar((M + 1) / (M * (M - 1) * (M + 2))));
        CHECK(wg_o_gram({2}, N) == ExactScalar(-1 / (M * (M - 1) * (M + 2))));
    }
}

TEST_CASE("Weingarten tables are indexed by type") {
    const auto& t = wg_table_u(3, 5);
    CHECK(t.types == partitions_of(3));
    for (const auto& mu : partitions_of(3)) CHECK(t.at(mu) == wg_u_char(mu, 5));
    const auto& o = wg_table_o(3, 5);
    for (const auto& mu : partitions_of(3)) CHECK(o.at(mu) == wg_o_gram(mu, 5));
    CHECK_THROWS(wg_table_o(3, 2));
}

TEST_CASE("unitary Haar moments") {
    const int N = 5;
    const ExactScalar M(N);
    const std::vector<int> one{1}, two{2};
    CHECK(haar_moment_u(one, one, one, one, N) == rational(1, N));
    CHECK(haar_moment_u(one, one, one, two, N) == 0);
    const std::vector<int> i{1, 2};
    // |u_11 u_22|^2 = Wg(id) = 1/(N^2 - 1)
    CHECK(haar_moment_u(i, i, i, i, N) == ExactScalar(1 / (M * M - 1)));
    const std::vector<int> swapped{2, 1};
    CHECK(haar_moment_u(i, i, i, swapped, N) == ExactScalar(-1 / (M * (M * M - 1))));
    // |u_11|^4 = 2/(N(N+1))
    const std::vector<int> ones{1, 1};
    CHECK(haar_moment_u(ones, ones, ones, ones, N) == ExactScalar(2 / (M * (M + 1))));
}

TEST_CASE("rows of a unitary are orthonormal") {
    const int N = 4;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            ExactScalar sum = 0;
            for (int k = 1; k <= N; ++k) {
                const std::vector<int> i{a}, j{k}, q{b}, p{k};
                sum += haar_moment_u(i, j, q, p, N);
            }
            CHECK(sum == (a == b ? 1 : 0));
        }
    }
}

TEST_CASE("orthogonal Haar moments") {
    for (int N = 3; N <= 7; ++N) {
        const ExactScalar M(N);
        CHECK(haar_moment_o(std::vector<int>{1, 1}, std::vector<int>{2, 2}, N) == rational(1, N));
        CHECK(haar_moment_o(std::vector<int>{1, 2}, std::vector<int>{1, 1}, N) == 0);
        // u_11^2 u_22^2 = (N+1)/(N(N-1)(N+2))
        CHECK(haar_moment_o(std::vector<int>{1, 1, 2, 2}, std::vector<int>{1, 1, 2, 2}, N) ==
              ExactScalar((M + 1) / (M * (M - 1) * (M + 2))));
        // u_11^4 = 3/(N(N+2))
        CHECK(haar_moment_o(std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 1, 1, 1}, N) ==
              ExactScalar(3 / (M * (M + 2))));
    }
}

TEST_CASE("orthogonal Weingarten depends only on the coset type") {
    const int N = 6;
    for (const auto& m : all_matchings(3)) {
        CHECK(wg_table_o(3, N).at(coset_type(m)) == wg_o_gram(coset_type(m), N));
    }
}

TEST_CASE("exact integer solver") {
    const auto x = solve_integer_system({{2, 1}, {1, 3}}, {3, 5});
    CHECK(x[0] == rational(4, 5));
    CHECK(x[1] == rational(7, 5));
    CHECK_THROWS_AS(solve_integer_system({{1, 2}, {2, 4}}, {1, 2}), SingularGramError);
}
