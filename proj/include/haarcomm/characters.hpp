#pragma once

#include <cstdint>

#include "haarcomm/combinatorics.hpp"

namespace haarcomm {

/// Irreducible character chi_lambda(mu) of S_n by the Murnaghan-Nakayama
/// rule. Results are memoized in a process-wide, lock-protected table.
/// Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

inline std::int64_t character(const Partition& lambda, const Permutation& p) {
    return character(lambda, cycle_type(p));
}

/// d_lambda by the hook-length formula.
BigInt hook_length_dimension(const Partition& lambda);

/// d_lambda; asserts agreement of the hook-length value and chi_lambda(1^n).
std::int64_t dimension(const Partition& lambda);

/// chi_{(n-k,1^k)}((n)) = (-1)^k.
int hook_character(int n, int k);

/// d_{(n-k,1^k)} = binomial(n-1, k).
BigInt hook_dimension(int n, int k);

/// Number of (lambda, mu) pairs currently memoized.
std::size_t character_cache_size();

}  // namespace haarcomm
