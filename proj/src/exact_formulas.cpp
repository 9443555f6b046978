#include "haarcomm/exact_formulas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "haarcomm/brauer.hpp"
#include "haarcomm/characters.hpp"
#include "haarcomm/weingarten.hpp"

namespace haarcomm {

namespace {

ExactScalar from_int(std::int64_t v) { return ExactScalar(BigInt(static_cast<long>(v))); }

void require_positive_dim(int N) {
    if (N < 1) throw std::invalid_argument("dimension N must be positive");
}

}  // namespace

ExactScalar dim_poly_u(const Partition& lambda, int N) {
    BigInt product = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda[i - 1]; ++j) product *= N + j - i;
    }
    return ExactScalar(product);
}

ExactScalar dim_poly_o(const Partition& lambda, int N) {
    const Partition conj = conjugate(lambda);
    auto part = [&](int i) { return lambda[i - 1]; };  // 1-based, zero past the end
    auto conj_part = [&](int i) { return conj[i - 1]; };
    BigInt product = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= std::min(i, part(i)); ++j) product *= N + part(i) + part(j) - i - j;
    }
    const int r = durfee(lambda);
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= part(i); ++j) product *= N - conj_part(i) - conj_part(j) + i + j - 2;
    }
    return ExactScalar(product);
}

ExactScalar schur_dimension(const Partition& lambda, int N) {
    ExactScalar out = from_int(dimension(lambda)) * dim_poly_u(lambda, N) / ExactScalar(factorial(lambda.weight()));
    out.canonicalize();
    return out;
}

ExactScalar orthogonal_dimension(const Partition& lambda, int N) {
    ExactScalar out = from_int(dimension(lambda)) * dim_poly_o(lambda, N) / ExactScalar(factorial(lambda.weight()));
    out.canonicalize();
    return out;
}

ExactScalar avg_irrep_char(GroupKind kind, const Partition& lambda, int N) {
    require_positive_dim(N);
    if (kind == GroupKind::unitary) {
        if (lambda.length() > N) return 0;
        return ExactScalar(1) / schur_dimension(lambda, N);
    }
    const Partition conj = conjugate(lambda);
    if (conj[0] + conj[1] > N) {
        throw OutOfRangeError("no O(" + std::to_string(N) + ") irrep labelled " + lambda.to_string());
    }
    return ExactScalar(1) / orthogonal_dimension(lambda, N);
}

ExactScalar power_sum_avg(GroupKind kind, const Partition& mu, int N) {
    require_positive_dim(N);
    const int n = mu.weight();
    ExactScalar sum = 0;
    if (kind == GroupKind::unitary) {
        for (const auto& lambda : partitions_of(n, N)) {
            sum += from_int(character(lambda, mu)) / (from_int(dimension(lambda)) * dim_poly_u(lambda, N));
        }
        sum *= ExactScalar(factorial(n));
        return sum;
    }
    if (N <= n) {
        throw OutOfRangeError("CO power-sum average needs N > n (N=" + std::to_string(N) + ", n=" +
                              std::to_string(n) + "): the finite-N Brauer coefficients b_{N,lambda} "
                              "are not available");
    }
    for (int h = 0; 2 * h <= n; ++h) {
        ExactScalar level = 0;
        for (const auto& lambda : partitions_of(n - 2 * h)) {
            const std::int64_t b = brauer_character(lambda, mu);
            if (b) level += from_int(b) / (from_int(dimension(lambda)) * dim_poly_o(lambda, N));
        }
        sum += ExactScalar(factorial(n - 2 * h)) * level;
    }
    return sum;
}

ExactScalar trace_moment(GroupKind kind, int n, int N) {
    require_positive_dim(N);
    if (n < 0) throw std::invalid_argument("trace_moment: n must be non-negative");
    ExactScalar sum = 0;
    if (kind == GroupKind::unitary) {
        for (const auto& lambda : partitions_of(n, N)) sum += ExactScalar(1) / dim_poly_u(lambda, N);
        return sum * ExactScalar(factorial(n));
    }
    if (N <= n) {
        throw OutOfRangeError("CO trace moment needs N > n (N=" + std::to_string(N) + ", n=" +
                              std::to_string(n) + ")");
    }
    for (int h = 0; 2 * h <= n; ++h) {
        ExactScalar level = 0;
        for (const auto& lambda : partitions_of(n - 2 * h)) level += ExactScalar(1) / dim_poly_o(lambda, N);
        BigInt weight = factorial(h);
        weight <<= h;
        sum += level / ExactScalar(weight);
    }
    return sum * ExactScalar(factorial(n));
}

ExactScalar trace_power(GroupKind kind, int n, int N) {
    if (n < 1) throw std::invalid_argument("trace_power: n must be positive");
    return power_sum_avg(kind, Partition{n}, N);
}

ExactScalar trace_power_cu_hooks(int n, int N) {
    require_positive_dim(N);
    if (n < 1) throw std::invalid_argument("trace_power_cu_hooks: n must be positive");
    ExactScalar sum = 0;
    for (int k = 0; k <= std::min(n, N) - 1; ++k) {
        ExactScalar term(factorial(k) * factorial(n - k - 1) * factorial(N - k - 1),
                         factorial(N + n - k - 1));
        term.canonicalize();
        if (k % 2) sum -= term; else sum += term;
    }
    return sum * n;
}

LeadingTerm trace_moment_asymptotic(GroupKind kind, int n) {
    if (n < 1) throw std::invalid_argument("trace_moment_asymptotic: n must be positive");
    if (kind == GroupKind::unitary) {
        return {factorial(n) * BigInt(static_cast<long>(partition_count(n))), -n};
    }
    if (n % 2 == 0) return {double_factorial(n - 1), 0};
    return {double_factorial(n), -1};
}

double FourierCoefficient::value() const { return to_double(times_pi_inverse) / std::numbers::pi; }

FourierCoefficient fourier_coeff(GroupKind kind, int n, int N) {
    ExactScalar trace = trace_power(kind, n, N);
    if (kind == GroupKind::orthogonal && N % 2 == 1) trace -= 1;
    ExactScalar c = trace / N;
    c.canonicalize();
    return {c};
}

double DensityExpansion::constant() const { return 1.0 / (2.0 * std::numbers::pi); }

double DensityExpansion::correction(double theta) const {
    const double pi = std::numbers::pi;
    const double sign = N % 2 == 0 ? 1.0 : -1.0;  // (-1)^N
    if (kind == GroupKind::unitary) return -sign / (N * pi) * std::cos(N * theta);
    // sin((N-1) t)/sin t, with limits N-1 at t = 0 and (N-1)(-1)^N at t = pi
    const double s = std::sin(theta);
    double ratio;
    if (std::abs(s) < 1e-12) {
        const double wrapped = std::remainder(theta, 2.0 * pi);
        ratio = std::abs(wrapped) < pi / 2 ? N - 1 : (N - 1) * sign;
    } else {
        ratio = std::sin((N - 1) * theta) / s;
    }
    return -(1.0 + sign) / (4.0 * pi * N) + sign / (2.0 * N * pi) * ratio;
}

double density_asymptotic(GroupKind kind, int N, double theta) {
    require_positive_dim(N);
    return DensityExpansion{kind, N}(theta);
}

ExactScalar tail_moment_cu(int N, int m) {
    require_positive_dim(N);
    if (m < 0) throw std::invalid_argument("tail_moment_cu: m must be non-negative");
    ExactScalar sum = 0;
    for (int k = 0; k <= N - 1; ++k) {
        ExactScalar term(factorial(k) * factorial(N + m - k - 1) * factorial(N - k - 1),
                         factorial(2 * N + m - k - 1));
        term.canonicalize();
        if (k % 2) sum -= term; else sum += term;
    }
    return sum * (N + m);
}

ExactScalar tail_moment_asymptotic(int N, int m) {
    ExactScalar out(factorial(m), BigInt(1));
    out /= power(ExactScalar(N), m);
    return N % 2 == 1 ? out : ExactScalar(-out);
}

std::vector<std::pair<int, ExactScalar>> trace_power_expansion_cu(int n, int depth) {
    if (n < 1 || depth < 0) throw std::invalid_argument("trace_power_expansion_cu: bad arguments");
    std::vector<std::pair<int, ExactScalar>> out;
    for (int p = 0; p < depth; ++p) {
        BigInt c = 0;
        for (int d = 0; d <= p; ++d) {
            BigInt term = stirling2(d + n - 1, n - 1) * binomial(p + n - 1, p - d) * a_coeff(n, p - d);
            if (d % 2) c -= term; else c += term;
        }
        out.emplace_back(n + p, ExactScalar(c * n));
    }
    return out;
}

std::pair<int, ExactScalar> trace_power_leading_cu(int n) {
    if (n % 2) {
        ExactScalar c(2 * n * factorial(n), BigInt(n + 1));
        c.canonicalize();
        return {n, c};
    }
    ExactScalar c(-BigInt(n) * n * n * factorial(n), BigInt(n + 2));
    c.canonicalize();
    return {n + 1, c};
}

ExactScalar f_u(const Partition& cycle_type, int N) {
    require_positive_dim(N);
    const int n = cycle_type.weight();
    ExactScalar sum = 0;
    for (const auto& lambda : partitions_of(n, N)) {
        const ExactScalar dp = dim_poly_u(lambda, N);
        sum += from_int(character(lambda, cycle_type)) / (from_int(dimension(lambda)) * dp * dp);
    }
    return sum * ExactScalar(factorial(n));
}

namespace {

void check_indices(std::span<const int> idx, int N) {
    for (int x : idx) {
        if (x < 1 || x > N) {
            throw std::invalid_argument("index " + std::to_string(x) + " outside 1.." + std::to_string(N));
        }
    }
}

}  // namespace

ExactScalar element_corr_cu(std::span<const int> i, std::span<const int> j, int N) {
    if (i.size() != j.size()) throw std::invalid_argument("element_corr_cu: list lengths differ");
    check_indices(i, N);
    check_indices(j, N);
    const int n = static_cast<int>(i.size());
    ExactScalar sum = 0;
    for (const auto& pi : all_permutations(n)) {
        bool match = true;
        for (int k = 0; k < n && match; ++k) match = i[k] == j[pi(k)];
        if (match) sum += f_u(cycle_type(pi), N);
    }
    return sum;
}

ExactScalar f_lambda_o(const Partition& lambda, int N) {
    const auto& table = wg_table_o(lambda.weight(), N);
    ExactScalar sum = 0;
    for (std::size_t t = 0; t < table.types.size(); ++t) {
        sum += ExactScalar(class_size(table.types[t]) * static_cast<long>(character(lambda, table.types[t]))) *
               table.values[t];
    }
    return sum;
}

ExactScalar f_lambda_u(const Partition& lambda, int N) {
    const auto& table = wg_table_u(lambda.weight(), N);
    ExactScalar sum = 0;
    for (std::size_t t = 0; t < table.types.size(); ++t) {
        sum += ExactScalar(class_size(table.types[t]) * static_cast<long>(character(lambda, table.types[t]))) *
               table.values[t];
    }
    return sum;
}

ExactScalar f_o(const Partition& cycle_type, int N, CorrelatorMode mode) {
    require_positive_dim(N);
    const int n = cycle_type.weight();
    ExactScalar sum = 0;
    for (const auto& lambda : partitions_of(n)) {
        const ExactScalar d = from_int(dimension(lambda));
        const ExactScalar chi = from_int(character(lambda, cycle_type));
        if (mode == CorrelatorMode::proved) {
            const ExactScalar f = f_lambda_o(lambda, N);
            sum += chi * f * f / (d * d * d);
        } else {
            const ExactScalar dp = dim_poly_o(lambda, N);
            if (dp == 0) throw OutOfRangeError("{N}_lambda vanishes for " + lambda.to_string());
            sum += chi / (d * dp * dp);
        }
    }
    return sum * ExactScalar(factorial(n));
}

ExactScalar element_corr_co(std::span<const int> i, std::span<const int> j, int N, CorrelatorMode mode) {
    if (i.size() != j.size()) throw std::invalid_argument("element_corr_co: list lengths differ");
    check_indices(i, N);
    check_indices(j, N);
    const int n = static_cast<int>(i.size());
    std::vector<int> images(n, -1);
    for (int k = 0; k < n; ++k) {
        for (int t = 0; t < n; ++t) {
            if (t != k && i[t] == i[k]) {
                throw std::invalid_argument("element_corr_co: closed form needs distinct row indices");
            }
            if (i[t] == j[k]) images[k] = t;
        }
        if (images[k] < 0) return 0;  // some column index never meets a row index
    }
    // j_k = i_{pi(k)}; pi must be a bijection for a non-zero average
    try {
        return f_o(cycle_type(Permutation(images)), N, mode);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("element_corr_co: closed form needs distinct column indices");
    }
}

double element_distribution_reference(GroupKind kind, int N, double z) {
    if (N < 2) throw std::invalid_argument("element_distribution_reference: N must be at least 2");
    if (kind == GroupKind::unitary) {
        if (z < 0.0 || z > 1.0) return 0.0;
        return (N - 1) * std::pow(1.0 - z, N - 2);
    }
    if (z <= -1.0 || z >= 1.0) return 0.0;
    const double norm = std::beta(0.5, 0.5 * (N - 1));
    return std::pow(1.0 - z * z, 0.5 * (N - 3)) / norm;
}

}  // namespace haarcomm
