#include "haarcomm/weingarten.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "haarcomm/characters.hpp"
#include "haarcomm/exact_formulas.hpp"
#include "haarcomm/matchings.hpp"

namespace haarcomm {

std::vector<ExactScalar> solve_integer_system(std::vector<std::vector<BigInt>> A,
                                              std::vector<BigInt> b) {
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("solve_integer_system: matrix not square");
        A[i].push_back(b.at(i));
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && A[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularGramError("singular Gram system");
        std::swap(A[k], A[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                BigInt v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                A[i][j] = std::move(v);
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    std::vector<ExactScalar> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        ExactScalar acc(A[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= ExactScalar(A[ii][j]) * x[j];
        x[ii] = acc / ExactScalar(A[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

namespace {

BigInt int_power(int base, int exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return out;
}

int type_index(const std::vector<Partition>& types, const Partition& t) {
    // canonical order is descending
    auto it = std::lower_bound(types.begin(), types.end(), t, std::greater<>());
    if (it == types.end() || *it != t) throw std::invalid_argument("unknown type " + t.to_string());
    return static_cast<int>(it - types.begin());
}

std::vector<ExactScalar> solve_reduced(const std::vector<std::vector<BigInt>>& A, int identity_row) {
    std::vector<BigInt> rhs(A.size(), 0);
    rhs[identity_row] = 1;
    return solve_integer_system(A, rhs);
}

WeingartenTable gram_table_u(int n, int N) {
    WeingartenTable table{n, N, partitions_of(n), {}};
    const auto& types = table.types;
    const auto perms = all_permutations(n);
    const std::size_t k = types.size();
    std::vector<std::vector<BigInt>> A(k, std::vector<BigInt>(k, 0));
    for (std::size_t row = 0; row < k; ++row) {
        const Permutation rho = representative(types[row]);
        for (const auto& tau : perms) {
            A[row][type_index(types, cycle_type(tau.inverse() * rho))] += int_power(N, cycle_count(tau));
        }
    }
    table.values = solve_reduced(A, type_index(types, Partition::ones(n)));
    return table;
}

WeingartenTable gram_table_o(int n, int N) {
    WeingartenTable table{n, N, partitions_of(n), {}};
    const auto& types = table.types;
    const auto matchings = all_matchings(n);
    const Matching trivial = Matching::trivial(n);
    const std::size_t k = types.size();
    std::vector<std::vector<BigInt>> A(k, std::vector<BigInt>(k, 0));
    for (std::size_t row = 0; row < k; ++row) {
        const Matching rho = matching_from_perm(representative(types[row]));
        for (const auto& tau : matchings) {
            A[row][type_index(types, pair_type(tau, rho))] += int_power(N, pair_loops(trivial, tau));
        }
    }
    table.values = solve_reduced(A, type_index(types, Partition::ones(n)));
    return table;
}

struct TableCache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<WeingartenTable>> u, o;
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

}  // namespace

int WeingartenTable::index_of(const Partition& type) const { return type_index(types, type); }

const ExactScalar& WeingartenTable::at(const Partition& type) const {
    return values[index_of(type)];
}

ExactScalar wg_u_char(const Partition& mu, int N) {
    if (N < 1) throw std::invalid_argument("wg_u_char: N must be positive");
    const int n = mu.weight();
    ExactScalar sum = 0;
    for (const auto& lambda : partitions_of(n, N)) {
        sum += ExactScalar(dimension(lambda) * character(lambda, mu)) / dim_poly_u(lambda, N);
    }
    ExactScalar out = sum / ExactScalar(factorial(n));
    out.canonicalize();
    return out;
}

ExactScalar wg_u_gram(const Partition& mu, int N) {
    if (N < 1) throw std::invalid_argument("wg_u_gram: N must be positive");
    return gram_table_u(mu.weight(), N).at(mu);
}

ExactScalar wg_o_gram(const Partition& coset, int N) {
    if (N < coset.weight()) {
        throw SingularGramError("orthogonal Gram matrix is singular for N < n (N=" +
                                std::to_string(N) + ", n=" + std::to_string(coset.weight()) + ")");
    }
    return gram_table_o(coset.weight(), N).at(coset);
}

WeingartenTable wg_table_u_gram(int n, int N) { return gram_table_u(n, N); }

const WeingartenTable& wg_table_u(int n, int N) {
    auto& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.u[{n, N}];
    if (!slot) {
        auto table = std::make_unique<WeingartenTable>();
        table->n = n;
        table->N = N;
        table->types = partitions_of(n);
        for (const auto& t : table->types) table->values.push_back(wg_u_char(t, N));
        slot = std::move(table);
    }
    return *slot;
}

const WeingartenTable& wg_table_o(int n, int N) {
    if (N < n) {
        throw SingularGramError("orthogonal Weingarten table needs N >= n (N=" + std::to_string(N) +
                                ", n=" + std::to_string(n) + ")");
    }
    auto& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.o[{n, N}];
    if (!slot) slot = std::make_unique<WeingartenTable>(gram_table_o(n, N));
    return *slot;
}

ExactScalar haar_moment_u(std::span<const int> i, std::span<const int> j, std::span<const int> q,
                          std::span<const int> p, int N) {
    const std::size_t n = i.size();
    if (j.size() != n || q.size() != n || p.size() != n) {
        throw std::invalid_argument("haar_moment_u: index lists must have equal length");
    }
    auto delta = [n](const Permutation& s, std::span<const int> a, std::span<const int> b) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[k] != b[s(static_cast<int>(k))]) return false;
        }
        return true;
    };
    const auto perms = all_permutations(static_cast<int>(n));
    std::vector<const Permutation*> taus, sigmas;
    for (const auto& s : perms) {
        if (delta(s, q, i)) taus.push_back(&s);
        if (delta(s, p, j)) sigmas.push_back(&s);
    }
    if (taus.empty() || sigmas.empty()) return 0;
    const auto& table = wg_table_u(static_cast<int>(n), N);
    ExactScalar sum = 0;
    for (const auto* s : sigmas) {
        for (const auto* t : taus) sum += table.at(cycle_type(s->inverse() * *t));
    }
    return sum;
}

ExactScalar haar_moment_o(std::span<const int> i, std::span<const int> j, int N) {
    if (i.size() != j.size() || i.size() % 2) {
        throw std::invalid_argument("haar_moment_o: index lists must both have length 2n");
    }
    const int n = static_cast<int>(i.size()) / 2;
    std::vector<Matching> row_ok, col_ok;
    for (const auto& m : all_matchings(n)) {
        if (delta_eval(m, i)) row_ok.push_back(m);
        if (delta_eval(m, j)) col_ok.push_back(m);
    }
    if (row_ok.empty() || col_ok.empty()) return 0;
    const auto& table = wg_table_o(n, N);
    ExactScalar sum = 0;
    for (const auto& s : col_ok) {
        for (const auto& t : row_ok) sum += table.at(pair_type(s, t));
    }
    return sum;
}

}  // namespace haarcomm
