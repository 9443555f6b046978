#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/exact.hpp"

namespace haarcomm {

/// Raised when a Gram system has no unique solution (N < n).
class SingularGramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wg^U_N(mu) = (1/n!) sum_{lambda |- n, l(lambda) <= N} d_lambda chi_lambda(mu) / [N]_lambda.
/// Valid for every N >= 1.
ExactScalar wg_u_char(const Partition& cycle_type, int N);

/// Wg^U_N(mu) from the Gram matrix G(s,t) = N^{#cycles(s t^-1)} over S_n.
/// Throws SingularGramError when the system is singular (exactly when N < n).
ExactScalar wg_u_gram(const Partition& cycle_type, int N);

/// Wg^O_N(mu) from the Gram matrix G(s,t) = N^{loops(s,t)} over M_n.
/// Throws SingularGramError for N < n.
ExactScalar wg_o_gram(const Partition& coset_type, int N);

/// Weingarten values of one (n, N), indexed by partitions of n.
struct WeingartenTable {
    int n = 0;
    int N = 0;
    std::vector<Partition> types;   // partitions_of(n), canonical order
    std::vector<ExactScalar> values;

    const ExactScalar& at(const Partition& type) const;
    int index_of(const Partition& type) const;
};

/// Cached, immutable tables. The unitary table uses the character formula.
const WeingartenTable& wg_table_u(int n, int N);
/// The orthogonal table uses the Gram route; requires N >= n.
const WeingartenTable& wg_table_o(int n, int N);

/// Full unitary table from the Gram route (uncached).
WeingartenTable wg_table_u_gram(int n, int N);

/// < prod_t u_{i_t j_t} conj(u_{q_t p_t}) > over U(N), indices 1-based.
ExactScalar haar_moment_u(std::span<const int> i, std::span<const int> j, std::span<const int> q,
                          std::span<const int> p, int N);

/// < prod_{t=1}^{2n} u_{i_t j_t} > over O(N), indices 1-based; requires N >= n
/// for the table unless the moment vanishes identically.
ExactScalar haar_moment_o(std::span<const int> i, std::span<const int> j, int N);

/// Solves A x = b exactly. A is square with integer entries; fraction-free
/// (Bareiss) elimination. Throws SingularGramError if A is singular.
std::vector<ExactScalar> solve_integer_system(std::vector<std::vector<BigInt>> A,
                                              std::vector<BigInt> b);

}  // namespace haarcomm
