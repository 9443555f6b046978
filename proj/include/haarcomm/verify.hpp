#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarcomm/exact.hpp"
#include "haarcomm/group_kind.hpp"
#include "haarcomm/sampler.hpp"

namespace haarcomm {

/// Where a number came from.
enum class Provenance { closed_form, oracle, conjectured, monte_carlo };
std::string to_string(Provenance p);

struct Check {
    std::string label;
    bool passed = false;
    std::string detail;
    Provenance provenance = Provenance::closed_form;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    /// Observations that do not decide pass/fail (e.g. conjecture counterexamples).
    std::vector<std::string> findings;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
    void add(std::string label, bool ok, std::string detail, Provenance provenance);
};

struct SuiteOptions {
    int max_n = 0;       // 0 selects the suite default
    int dim_lo = 0;      // 0 selects the suite default
    int dim_hi = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 20240917;
    int workers = 1;
    int bins = 0;
};

/// Exact closed forms for trace statistics, N in [dim_lo, dim_hi].
SuiteReport verify_formulas(const SuiteOptions& options = {});
/// Character and Gram routes to Wg^U agree; unitary f-identity.
SuiteReport verify_wg_cross(const SuiteOptions& options = {});
/// Word engine against F^U and the |Tr C|^2, |Tr C|^4 results.
SuiteReport verify_oracle_u(const SuiteOptions& options = {});
/// Word engine against F^O (proved mode) and the displayed n = 2 values.
SuiteReport verify_oracle_o(const SuiteOptions& options = {});
/// f_lambda(N) against d_lambda/{N}_lambda. Disagreements are findings.
SuiteReport verify_conjecture(const SuiteOptions& options = {});
/// Orthogonality relations and the convolution identity.
SuiteReport verify_characters(const SuiteOptions& options = {});
/// Hook cancellation, Brauer dimensions, and CO power sums through Brauer characters.
SuiteReport verify_brauer(const SuiteOptions& options = {});
/// Monte Carlo against exact values for four statistics in both groups.
SuiteReport verify_mc(const SuiteOptions& options = {});
/// Fourier coefficient c_{N,N} (CU) and the CO eigenphase density.
SuiteReport verify_density(const SuiteOptions& options = {});
/// Gaussian limit of Tr C for CO.
SuiteReport verify_gaussian(const SuiteOptions& options = {});
/// N^n <(Tr C)^n> / n! approaches p(n) for CU.
SuiteReport verify_nongaussian(const SuiteOptions& options = {});
/// Unitarity, unit eigenvalue and conjugate pairing on every sample.
SuiteReport verify_structure(const SuiteOptions& options = {});

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

struct ExactReference {
    ExactScalar value;  // real part; every exact reference here is real
    Provenance provenance;
};

/// Exact value of a scalar statistic when one is available.
std::optional<ExactReference> exact_reference(GroupKind group, const Statistic& statistic, int N);

/// (estimate - exact) / stderr on the real part; the imaginary part is
/// compared with zero. Returns the larger |z|.
double max_abs_z(const RunningEstimate& estimate, double exact);

}  // namespace haarcomm
