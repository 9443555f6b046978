#pragma once

#include <vector>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/exact.hpp"
#include "haarcomm/group_kind.hpp"

namespace haarcomm {

/// One entry C_{row,col} (1-based), or its complex conjugate.
struct Factor {
    int row = 1;
    int col = 1;
    bool conjugate = false;
};

struct MomentRequest {
    GroupKind group = GroupKind::unitary;
    std::vector<Factor> factors;
    int N = 2;
};

/// Largest number of commutator factors the word engine accepts.
inline constexpr int kMaxWordDegree = 4;

/// Exact < prod C_{i j} (or conj) > by expanding every factor into Haar
/// entries and integrating u and v with Weingarten calculus. Repeated indices
/// are allowed. CO needs N >= number of factors (the Gram matrix is singular
/// below that) and rejects conjugation flags.
ExactScalar commutator_moment(const MomentRequest& request);

enum class TraceRoute {
    patterns,   ///< sum over index equality patterns, each weighted by a falling factorial
    contraction ///< traced indices enter the contraction as free summation slots
};

/// < (Tr C)^a conj(Tr C)^b >. CO requires b = 0.
ExactScalar trace_mixed_moment(GroupKind group, int a, int b, int N, TraceRoute route = TraceRoute::contraction);

/// < p_mu(C) > = < prod Tr(C^{mu_i}) > by contracting each trace as a ring of
/// free indices; an oracle for the character-sum formulas. |mu| <= 4.
ExactScalar power_sum_moment(GroupKind group, const Partition& mu, int N);

}  // namespace haarcomm
