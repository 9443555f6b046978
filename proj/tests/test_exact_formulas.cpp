#include "doctest.h"

#include <cmath>
#include <numbers>

#include "haarcomm/characters.hpp"
#include "haarcomm/exact_formulas.hpp"

using namespace haarcomm;

namespace {

constexpr double kPi = std::numbers::pi;

ExactScalar q(const auto& expr) {
    ExactScalar out(expr);
    out.canonicalize();
    return out;
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int k = 1; k < panels; ++k) sum += f(a + k * h) * (k % 2 ? 4 : 2);
    return sum * h / 3;
}

}  // namespace

TEST_CASE("dimension polynomials") {
    for (int N = 1; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(dim_poly_u({1}, N) == M);
        CHECK(dim_poly_u({2}, N) == M * (M + 1));
        CHECK(dim_poly_u({1, 1}, N) == M * (M - 1));
        CHECK(dim_poly_o({1}, N) == M);
        CHECK(dim_poly_o({2}, N) == (M - 1) * (M + 2));
        CHECK(dim_poly_o({1, 1}, N) == M * (M - 1));
        CHECK(orthogonal_dimension({2}, N) == q((M + 2) * (M - 1) / 2));
        CHECK(orthogonal_dimension({1, 1}, N) == q(M * (M - 1) / 2));
        CHECK(schur_dimension({2}, N) == q(M * (M + 1) / 2));
    }
    // so(5) on (2,1): dimension 35 from the Weyl formula
    CHECK(orthogonal_dimension({2, 1}, 5) == 35);
    CHECK(schur_dimension({2, 1}, 3) == 8);
}

TEST_CASE("irrep character averages") {
    for (int N = 2; N <= 8; ++N) {
        CHECK(avg_irrep_char(GroupKind::unitary, {1}, N) == rational(1, N));
        CHECK(avg_irrep_char(GroupKind::orthogonal, {1}, N) == rational(1, N));
    }
    CHECK(avg_irrep_char(GroupKind::unitary, {2}, 2) == rational(1, 3));
    CHECK(avg_irrep_char(GroupKind::unitary, {1, 1, 1}, 2) == 0);
    CHECK_THROWS_AS(avg_irrep_char(GroupKind::orthogonal, {1, 1, 1}, 2), OutOfRangeError);
}

TEST_CASE("power-sum averages, unitary") {
    for (int N = 3; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(power_sum_avg(GroupKind::unitary, {1, 1}, N) == q(4 / (M * M - 1)));
        CHECK(power_sum_avg(GroupKind::unitary, {2}, N) == q(-4 / (M * (M * M - 1))));
    }
}

TEST_CASE("power-sum averages, orthogonal") {
    for (int N = 4; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(power_sum_avg(GroupKind::orthogonal, {2}, N) == q((M * M * M + M * M - 2 * M - 4) / (M * (M - 1) * (M + 2))));
        CHECK(power_sum_avg(GroupKind::orthogonal, {1, 1}, N) ==
              q((M * M * M + M * M + 2 * M + 4) / ((M - 1) * M * (M + 2))));
        CHECK(power_sum_avg(GroupKind::orthogonal, {3}, N) ==
              q((9 * M * M + 27 * M + 36) / (M * (M - 2) * (M - 1) * (M + 2) * (M + 4))));
    }
    CHECK_THROWS_AS(power_sum_avg(GroupKind::orthogonal, {2}, 2), OutOfRangeError);
}

TEST_CASE("power sums expand into irrep averages") {
    for (int n = 1; n <= 5; ++n) {
        for (int N = 1; N <= 8; ++N) {
            for (const auto& mu : partitions_of(n)) {
                ExactScalar sum = 0;
                for (const auto& lambda : partitions_of(n)) {
                    sum += character(lambda, mu) * avg_irrep_char(GroupKind::unitary, lambda, N);
                }
                CHECK(sum == power_sum_avg(GroupKind::unitary, mu, N));
            }
        }
    }
}

TEST_CASE("trace moments") {
    for (int N = 3; N <= 9; ++N) {
        const ExactScalar M(N);
        CHECK(trace_moment(GroupKind::unitary, 1, N) == rational(1, N));
        CHECK(trace_moment(GroupKind::unitary, 3, N) == q(18 * M / ((M * M - 1) * (M * M - 4))));
        if (N > 3) {
            CHECK(trace_moment(GroupKind::orthogonal, 3, N) ==
                  q((3 * M * M * M * M + 9 * M * M * M - 6 * M * M + 18 * M + 48) / ((M - 1) * M * (M * M - 4) * (M + 4))));
        }
    }
    for (int n = 1; n <= 5; ++n) {
        for (int N = n + 1; N <= 8; ++N) {
            CHECK(trace_moment(GroupKind::unitary, n, N) == power_sum_avg(GroupKind::unitary, Partition::ones(n), N));
            CHECK(trace_moment(GroupKind::orthogonal, n, N) ==
                  power_sum_avg(GroupKind::orthogonal, Partition::ones(n), N));
        }
    }
    CHECK(trace_moment(GroupKind::unitary, 0, 5) == 1);
    CHECK_THROWS_AS(trace_moment(GroupKind::orthogonal, 3, 3), OutOfRangeError);
}

TEST_CASE("leading large-N terms of trace moments") {
    const auto cu2 = trace_moment_asymptotic(GroupKind::unitary, 2);
    CHECK(cu2.coefficient == 4);
    CHECK(cu2.power == -2);
    const auto co4 = trace_moment_asymptotic(GroupKind::orthogonal, 4);
    CHECK(co4.coefficient == 3);
    CHECK(co4.power == 0);
    const auto co1 = trace_moment_asymptotic(GroupKind::orthogonal, 1);
    CHECK(co1.coefficient == 1);
    CHECK(co1.power == -1);
    // the exact values approach the leading terms
    const int N = 2000;
    for (int n = 1; n <= 5; ++n) {
        for (GroupKind g : {GroupKind::unitary, GroupKind::orthogonal}) {
            const auto lead = trace_moment_asymptotic(g, n);
            const double predicted = to_double(ExactScalar(lead.coefficient) * power(ExactScalar(N), lead.power));
            CHECK(to_double(trace_moment(g, n, N)) / predicted == doctest::Approx(1.0).epsilon(0.01));
        }
    }
}

TEST_CASE("trace powers and hook sums") {
    for (int n = 1; n <= 6; ++n) {
        for (int N = 1; N <= 8; ++N) CHECK(trace_power(GroupKind::unitary, n, N) == trace_power_cu_hooks(n, N));
    }
    CHECK(trace_power(GroupKind::unitary, 3, 5) == rational(29, 280));
}

TEST_CASE("Fourier coefficients") {
    for (int N = 3; N <= 8; ++N) {
        const ExactScalar M(N);
        CHECK(fourier_coeff(GroupKind::unitary, 2, N).times_pi_inverse == q(-4 / (M * M * (M * M - 1))));
        CHECK(fourier_coeff(GroupKind::unitary, 1, N).times_pi_inverse == q(1 / (M * M)));
        CHECK(fourier_coeff(GroupKind::unitary, 1, N).value() == doctest::Approx(1.0 / (N * N * kPi)));
    }
    // odd N, CO: <Tr C^n> = 1 leaves c = 0
    CHECK(fourier_coeff(GroupKind::orthogonal, 1, 5).times_pi_inverse == q(ExactScalar(1, 5) - 1) / 5);
}

TEST_CASE("two-term eigenphase densities") {
    for (int N = 2; N <= 12; N += 2) {
        CHECK(density_asymptotic(GroupKind::unitary, N, 0.0) == doctest::Approx(1 / (2 * kPi) - 1 / (N * kPi)));
    }
    for (int N = 3; N <= 11; N += 2) {
        CHECK(density_asymptotic(GroupKind::orthogonal, N, 0.0) ==
              doctest::Approx(1 / (2 * kPi) - (N - 1) / (2.0 * N * kPi)));
        CHECK(density_asymptotic(GroupKind::orthogonal, N, 1e-9) ==
              doctest::Approx(density_asymptotic(GroupKind::orthogonal, N, 0.0)));
        CHECK(density_asymptotic(GroupKind::orthogonal, N, kPi - 1e-9) ==
              doctest::Approx(density_asymptotic(GroupKind::orthogonal, N, kPi)));
    }
    for (GroupKind g : {GroupKind::unitary, GroupKind::orthogonal}) {
        for (int N = 3; N <= 12; ++N) {
            const auto rho = [&](double t) { return density_asymptotic(g, N, t); };
            CHECK(std::abs(simpson(rho, -kPi, kPi, 20000) - 1.0) < 1e-10);
        }
    }
    const DensityExpansion e{GroupKind::unitary, 7};
    CHECK(e.constant() == doctest::Approx(1 / (2 * kPi)));
    CHECK(e(0.3) == doctest::Approx(density_asymptotic(GroupKind::unitary, 7, 0.3)));
    CHECK(DensityExpansion::error_order == -2);
}

TEST_CASE("tail moments") {
    CHECK(tail_moment_cu(2, 0) == rational(-2, 3));
    CHECK(tail_moment_cu(3, 0) == rational(39, 40));
    CHECK(tail_moment_cu(3, 0) == trace_power(GroupKind::unitary, 3, 3));
    for (int N = 2; N <= 6; ++N) {
        for (int m = 0; m <= 3; ++m) CHECK(tail_moment_cu(N, m) == trace_power(GroupKind::unitary, N + m, N));
    }
    CHECK(tail_moment_asymptotic(2, 0) == -1);
    CHECK(tail_moment_asymptotic(5, 2) == rational(2, 25));
    const ExactScalar ratio = tail_moment_cu(60, 3) / tail_moment_asymptotic(60, 3);
    CHECK(to_double(ratio) == doctest::Approx(1.0).epsilon(0.3));
}

TEST_CASE("large-N expansion of trace powers") {
    const auto e3 = trace_power_expansion_cu(3, 3);
    REQUIRE(e3.size() == 3);
    CHECK(e3[0].first == 3);
    CHECK(e3[0].second == 9);
    const auto e2 = trace_power_expansion_cu(2, 3);
    CHECK(e2[0].first == 2);
    CHECK(e2[0].second == 0);
    CHECK(e2[1].first == 3);
    CHECK(e2[1].second == -4);
    const auto e1 = trace_power_expansion_cu(1, 4);
    CHECK(e1[0].second == 1);
    for (std::size_t k = 1; k < e1.size(); ++k) CHECK(e1[k].second == 0);
    CHECK(trace_power_leading_cu(3) == std::pair<int, ExactScalar>{3, 9});
    CHECK(trace_power_leading_cu(2) == std::pair<int, ExactScalar>{3, -4});
    // even powers: the N^{-2n} coefficient vanishes
    for (int n = 1; n <= 3; ++n) {
        const auto e = trace_power_expansion_cu(2 * n, 2);
        CHECK(e[0].first == 2 * n);
        CHECK(e[0].second == 0);
    }
}

TEST_CASE("expansion coefficients reproduce exact values at large N") {
    for (int n = 1; n <= 5; ++n) {
        auto terms = trace_power_expansion_cu(n, 8);
        const ExactScalar after = terms.back().second;
        terms.pop_back();
        const ExactScalar next = terms.back().second;
        terms.pop_back();
        const int N = 100000;
        ExactScalar partial = 0;
        for (const auto& [p, c] : terms) partial += c / power(ExactScalar(N), p);
        const ExactScalar exact = trace_power(GroupKind::unitary, n, N);
        const ExactScalar residual = (exact - partial) * power(ExactScalar(N), n + 6);
        const double predicted = to_double(next + after / ExactScalar(N));
        CHECK(to_double(residual) == doctest::Approx(predicted).epsilon(1e-2).scale(1.0));
    }
}

TEST_CASE("leading coefficients of odd and even trace powers") {
    for (int n = 1; n <= 6; ++n) {
        const auto [p, c] = trace_power_leading_cu(n);
        const auto terms = trace_power_expansion_cu(n, 3);
        for (const auto& [tp, tc] : terms) {
            if (tc != 0) {
                CHECK(tp == p);
                CHECK(tc == c);
                break;
            }
        }
    }
}

TEST_CASE("unitary element correlators") {
    for (int N = 2; N <= 8; ++N) {
        const ExactScalar M(N);
        CHECK(f_u({1}, N) == q(1 / (M * M)));
        const std::vector<int> ii{1, 1}, ij{1, 2}, ji{2, 1};
        CHECK(element_corr_cu(ii, ii, N) == q(4 / (M * M * (M + 1) * (M + 1))));
        CHECK(element_corr_cu(ij, ij, N) == f_u({1, 1}, N));
        CHECK(element_corr_cu(ij, ji, N) == f_u({2}, N));
        CHECK(element_corr_cu(ii, ii, N) == f_u({1, 1}, N) + f_u({2}, N));
        const std::vector<int> one{1}, two{2};
        CHECK(element_corr_cu(one, two, N) == 0);
    }
    CHECK_THROWS_AS(element_corr_cu(std::vector<int>{0}, std::vector<int>{1}, 3), std::invalid_argument);
}

TEST_CASE("orthogonal element correlators") {
    for (int N = 2; N <= 8; ++N) {
        const ExactScalar M(N);
        const ExactScalar den = (M - 1) * (M - 1) * M * M * (M + 2) * (M + 2);
        CHECK(f_o({1, 1}, N) == q(4 * (M * M + 2 * M + 2) / den));
        CHECK(f_o({2}, N) == q(-8 * (M + 1) / den));
        CHECK(f_lambda_o({1}, N) == rational(1, N));
    }
    for (int n = 1; n <= 3; ++n) {
        for (int N = n; N <= 7; ++N) {
            for (const auto& lambda : partitions_of(n)) {
                CHECK(f_lambda_o(lambda, N) == q(ExactScalar(dimension(lambda)) / dim_poly_o(lambda, N)));
                CHECK(f_lambda_u(lambda, N) == q(ExactScalar(dimension(lambda)) / dim_poly_u(lambda, N)));
            }
            for (const auto& mu : partitions_of(n)) {
                CHECK(f_o(mu, N, CorrelatorMode::proved) == f_o(mu, N, CorrelatorMode::conjectured));
            }
        }
    }
    const std::vector<int> i{1, 2, 3}, j{2, 3, 1};
    CHECK(element_corr_co(i, j, 5) == f_o({3}, 5));
    CHECK(element_corr_co(i, std::vector<int>{1, 2, 4}, 5) == 0);
    CHECK_THROWS_AS(element_corr_co(std::vector<int>{1, 1}, std::vector<int>{1, 1}, 5), std::invalid_argument);
}

TEST_CASE("single-element reference densities") {
    for (int N = 2; N <= 10; ++N) {
        const auto rho = [N](double z) { return element_distribution_reference(GroupKind::unitary, N, z); };
        CHECK(simpson([&](double z) { return z * rho(z); }, 0, 1, 2000) == doctest::Approx(1.0 / N));
        CHECK(simpson(rho, 0, 1, 2000) == doctest::Approx(1.0));
    }
    CHECK(element_distribution_reference(GroupKind::unitary, 2, 0.3) == doctest::Approx(1.0));
    for (int N = 3; N <= 10; ++N) {
        const auto rho = [N](double z) { return element_distribution_reference(GroupKind::orthogonal, N, z); };
        CHECK(simpson(rho, -1, 1, 4000) == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("CO trace powers: unit part and decay") {
    // <Tr C^2> = 1 - 4/N^3 + O(N^-4), <Tr C^3> = 9/N^3 + O(N^-4)
    const ExactScalar M(100000);
    const ExactScalar t2 = power_sum_avg(GroupKind::orthogonal, {2}, 100000);
    const ExactScalar t3 = power_sum_avg(GroupKind::orthogonal, {3}, 100000);
    CHECK(to_double((t2 - 1) * M * M * M) == doctest::Approx(-4.0).epsilon(1e-4));
    CHECK(to_double(t3 * M * M * M) == doctest::Approx(9.0).epsilon(1e-4));
    // unit part: 1 for even n, 0 for odd n (N > n)
    for (int n = 1; n <= 6; ++n) {
        const double v = to_double(trace_power(GroupKind::orthogonal, n, 1000));
        CHECK(std::abs(v - (n % 2 ? 0.0 : 1.0)) < 2e-3);
    }
    // even powers: 1 + O(N^{-2n-1}); odd powers O(N^{-2n+1})
    for (int n = 1; n <= 3; ++n) {
        const ExactScalar even = trace_power(GroupKind::orthogonal, 2 * n, 1000);
        CHECK(std::abs(to_double((even - 1) * power(ExactScalar(1000), 2 * n + 1))) < 1e5);
        const ExactScalar odd = trace_power(GroupKind::orthogonal, 2 * n - 1, 1000);
        CHECK(std::abs(to_double(odd * power(ExactScalar(1000), 2 * n - 1))) < 1e3);
    }
}
