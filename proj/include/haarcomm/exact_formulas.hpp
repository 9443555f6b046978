#pragma once

#include <span>
#include <utility>
#include <vector>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/exact.hpp"
#include "haarcomm/group_kind.hpp"

namespace haarcomm {

/// Raised when a closed form is requested outside the range where it holds
/// (for instance CO power sums with N <= n, where the saturated Brauer
/// coefficients no longer apply).
class OutOfRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dimension polynomials ------------------------------------------------------

/// [N]_lambda = prod over cells (i,j) of (N + j - i).
ExactScalar dim_poly_u(const Partition& lambda, int N);

/// {N}_lambda, the orthogonal analogue built from the conjugate partition and
/// the Durfee square.
ExactScalar dim_poly_o(const Partition& lambda, int N);

/// s_lambda(1_N) = d_lambda [N]_lambda / n!
ExactScalar schur_dimension(const Partition& lambda, int N);
/// o_lambda(1_N) = d_lambda {N}_lambda / n!
ExactScalar orthogonal_dimension(const Partition& lambda, int N);

// Invariant averages -----------------------------------------------------------

/// <s_lambda(C)> = 1/s_lambda(1_N) (zero when l(lambda) > N), or
/// <o_lambda(C)> = 1/o_lambda(1_N).
ExactScalar avg_irrep_char(GroupKind kind, const Partition& lambda, int N);

/// <p_mu(C)>. The CO branch needs N > |mu| and throws OutOfRangeError otherwise.
ExactScalar power_sum_avg(GroupKind kind, const Partition& mu, int N);

/// <(Tr C)^n>, evaluated from the dedicated (Tr C)^n sums.
ExactScalar trace_moment(GroupKind kind, int n, int N);

/// <Tr(C^n)> = <p_(n)(C)>.
ExactScalar trace_power(GroupKind kind, int n, int N);

/// <Tr(C^n)> for CU from the hook-partition sum (only hooks survive on a full cycle).
ExactScalar trace_power_cu_hooks(int n, int N);

/// Leading large-N term coefficient * N^power.
struct LeadingTerm {
    BigInt coefficient;
    int power = 0;
};

/// CU: n! p(n) N^-n. CO: (2m-1)!! N^0 for n = 2m, (2m-1)!! N^-1 for n = 2m-1.
LeadingTerm trace_moment_asymptotic(GroupKind kind, int n);

/// c_{N,n} = times_pi_inverse / pi.
struct FourierCoefficient {
    ExactScalar times_pi_inverse;
    double value() const;
};

/// CU: <Tr C^n> = N pi c. CO: the same for even N, and <Tr C^n> = 1 + N pi c
/// for odd N (the unit eigenvalue is removed).
FourierCoefficient fourier_coeff(GroupKind kind, int n, int N);

/// Two-term large-N eigenphase density; the removable singularities of
/// sin((N-1) theta)/sin(theta) at 0 and pi are replaced by their limits.
double density_asymptotic(GroupKind kind, int N, double theta);

/// The asymptotic density as an object: constant 1/(2 pi) plus the 1/N correction.
struct DensityExpansion {
    GroupKind kind;
    int N;
    double constant() const;
    double correction(double theta) const;
    double operator()(double theta) const { return constant() + correction(theta); }
    static constexpr int error_order = -2;
};

/// <Tr C^{N+m}> for CU as the finite alternating sum over hooks.
ExactScalar tail_moment_cu(int N, int m);
/// (-1)^{N-1} m! / N^m
ExactScalar tail_moment_asymptotic(int N, int m);

/// Coefficients of the large-N expansion of <Tr C^n> (CU), valid for N > n:
/// entries (power, c) meaning c N^{-power}, for power = n, n+1, ..., n+depth-1.
std::vector<std::pair<int, ExactScalar>> trace_power_expansion_cu(int n, int depth);

/// Leading coefficient: (2n) n!/(n+1) at N^-n (n odd),
/// -n^3 n!/(n+2) at N^-(n+1) (n even).
std::pair<int, ExactScalar> trace_power_leading_cu(int n);

// Element correlators ----------------------------------------------------------

/// F^U_N(pi) = n! sum_lambda chi_lambda(pi) / (d_lambda [N]_lambda^2), lambda with l <= N.
ExactScalar f_u(const Partition& cycle_type, int N);

/// < prod_k C_{i_k j_k} > over CU(N) = sum_{pi} delta_pi(i, j) F^U_N(pi).
ExactScalar element_corr_cu(std::span<const int> i, std::span<const int> j, int N);

/// f_lambda(N) = sum_mu |C_mu| chi_lambda(mu) Wg^O_N(mu). Needs N >= n.
ExactScalar f_lambda_o(const Partition& lambda, int N);

/// The same sum with Wg^U; equals d_lambda/[N]_lambda.
ExactScalar f_lambda_u(const Partition& lambda, int N);

enum class CorrelatorMode { proved, conjectured };

/// F^O_N(pi). `proved` uses f_lambda(N) from Gram-derived Wg^O; `conjectured`
/// substitutes f_lambda(N) = d_lambda/{N}_lambda.
ExactScalar f_o(const Partition& cycle_type, int N, CorrelatorMode mode = CorrelatorMode::proved);

/// < prod_k C_{i_k j_k} > over CO(N) for lists without repeated indices
/// (j must be a rearrangement of i). Throws std::invalid_argument otherwise.
ExactScalar element_corr_co(std::span<const int> i, std::span<const int> j, int N,
                            CorrelatorMode mode = CorrelatorMode::proved);

/// Reference densities for a single element: CU, z = |C_ij|^2 on [0,1]:
/// (N-1)(1-z)^{N-2}; CO, z = C_ij on [-1,1]: (1-z^2)^{(N-3)/2} / B(1/2,(N-1)/2).
double element_distribution_reference(GroupKind kind, int N, double z);

}  // namespace haarcomm
