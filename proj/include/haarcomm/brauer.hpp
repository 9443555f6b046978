#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/exact.hpp"

namespace haarcomm {

/// Littlewood-Richardson coefficient c^nu_{lambda,rho}: the number of LR
/// skew tableaux of shape nu/lambda and content rho.
std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& rho);

/// 2 beta: every part doubled.
Partition doubled(const Partition& beta);

/// Saturated (large-N) Brauer character
///   b_lambda(mu) = sum_{nu |- n} chi_nu(mu) sum_{beta |- h} c^nu_{lambda, 2 beta},
/// lambda |- n - 2h, mu |- n. Valid as the expansion coefficient only for N > n.
std::int64_t brauer_character(const Partition& lambda, const Partition& mu);

/// b_lambda(1^n) = n! / ((n-2h)! 2^h h!) d_lambda
BigInt brauer_dimension(const Partition& lambda, int n);

/// Coefficients b_lambda(mu) of p_mu = sum_{h, lambda |- n-2h} b_lambda(mu) o_lambda,
/// keyed by (h, lambda). Zero coefficients are kept.
std::map<std::pair<int, Partition>, std::int64_t> p_to_o_expansion(const Partition& mu);

/// The inverse expansion: o_lambda as a rational combination of power sums
/// p_mu with |mu| in {|lambda|, |lambda|-2, ...} (p_() = 1). Large-N only.
std::map<Partition, ExactScalar> o_in_power_sums(const Partition& lambda);

/// s_lambda = sum_mu chi_lambda(mu) / z_mu p_mu.
std::map<Partition, ExactScalar> s_in_power_sums(const Partition& lambda);

}  // namespace haarcomm
