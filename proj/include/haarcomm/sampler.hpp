#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/exact.hpp"
#include "haarcomm/group_kind.hpp"
#include "haarcomm/word_engine.hpp"

namespace haarcomm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Exact sum of doubles: every double is an integer multiple of 2^-1074, so
/// scaling by 2^scale_bits keeps the running sum an integer and addition
/// associative. Products of two doubles use twice the scale.
class ExactSum {
public:
    static constexpr int kValueScale = 1126;
    static constexpr int kProductScale = 2 * kValueScale;

    explicit ExactSum(int scale_bits = kValueScale) : scale_(scale_bits) {}
    void add(double x);
    void add_product(double a, double b);
    void merge(const ExactSum& other);
    /// The sum rounded once to double.
    double value() const;
    const BigInt& raw() const { return acc_; }

    friend bool operator==(const ExactSum&, const ExactSum&) = default;

private:
    int scale_;
    BigInt acc_ = 0;
};

/// Mean and standard error of a complex statistic over samples.
class RunningEstimate {
public:
    void add(Complex x);
    void merge(const RunningEstimate& other);

    std::int64_t count() const { return count_; }
    Complex mean() const;
    /// Unbiased sample variances of the real and imaginary parts, and their covariance.
    double variance_re() const;
    double variance_im() const;
    double covariance() const;
    double stderr_re() const;
    double stderr_im() const;

    friend bool operator==(const RunningEstimate&, const RunningEstimate&) = default;

private:
    std::int64_t count_ = 0;
    ExactSum re_, im_;
    ExactSum re2_{ExactSum::kProductScale}, im2_{ExactSum::kProductScale}, reim_{ExactSum::kProductScale};
};

/// Per-sample histogram with a per-bin error bar. Each sample drops a fixed
/// number of points into bins on [lo, hi); the density estimate of a bin is the
/// sample mean of count / (points * width).
class HistogramEstimate {
public:
    HistogramEstimate() = default;
    HistogramEstimate(double lo, double hi, int bins);

    /// Records one sample. Points outside [lo, hi] are dropped; hi itself goes to the last bin.
    void add_sample(const std::vector<double>& points);
    void merge(const HistogramEstimate& other);

    int bins() const { return static_cast<int>(sum_.size()); }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return (hi_ - lo_) / bins(); }
    double left(int b) const { return lo_ + b * width(); }
    double right(int b) const { return lo_ + (b + 1) * width(); }
    std::int64_t samples() const { return samples_; }
    double density(int b) const;
    double density_stderr(int b) const;

    friend bool operator==(const HistogramEstimate&, const HistogramEstimate&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 1.0;
    std::int64_t samples_ = 0;
    std::int64_t points_ = 0;  // points per sample, fixed by the first sample
    std::vector<std::int64_t> sum_, sumsq_;
};

struct HaarSampleConfig {
    GroupKind group = GroupKind::unitary;
    int N = 2;
    std::int64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Random source for one sample: a Mersenne Twister seeded from (seed, index),
/// so sample t is reproducible without generating samples 0..t-1.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index);
    double normal() { return normal_(engine_); }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

ComplexMatrix haar_unitary(int N, SampleStream& stream);
RealMatrix haar_orthogonal(int N, SampleStream& stream);

ComplexMatrix commutator(const ComplexMatrix& u, const ComplexMatrix& v);
RealMatrix commutator(const RealMatrix& u, const RealMatrix& v);

/// Draws u, v from the same stream and returns their commutator.
ComplexMatrix sample_commutator(GroupKind group, int N, SampleStream& stream);

/// Eigenvalues of a unitary (or real orthogonal) matrix.
std::vector<Complex> eigenvalues(const ComplexMatrix& c);
std::vector<Complex> eigenvalues(const RealMatrix& c);

/// Angles in (-pi, pi], sorted ascending.
std::vector<double> eigenphases(const std::vector<Complex>& eigenvalues);
template <class Matrix>
std::vector<double> eigenphases(const Matrix& c) {
    return eigenphases(eigenvalues(c));
}

enum class StatisticKind {
    trace,         // (Tr C)^n
    abs_trace,     // |Tr C|^{2m} (Tr C)^k
    trace_power,   // Tr(C^n)
    power_sum,     // p_mu(C)
    element,       // product of entries by index pattern
    character,     // s_lambda(C) for CU, o_lambda(C) for CO
    element_hist,  // |C_ij|^2 (CU) or C_ij (CO)
    phase_hist,    // eigenphases; for odd-N CO the forced zero phase is dropped
    spacing_hist   // nearest-neighbour spacings scaled to unit mean
};

struct Statistic {
    StatisticKind kind = StatisticKind::trace;
    std::string text;
    int n = 1;
    int m = 0;
    int k = 0;
    Partition mu;
    std::vector<Factor> pattern;
    int row = 1;
    int col = 1;
    int bins = 40;

    bool is_histogram() const;
};

/// Grammar: trace:n, abstrace:m:k, tracepow:n, power-sum:(3,1), element:11,22*,
/// char:(2,1), element-hist:i,j[:bins], phase-hist[:bins], spacing-hist[:bins].
Statistic parse_statistic(const std::string& text);

/// Parses "11,22*" (single-digit indices) or "1:10,2:2*" into factors.
std::vector<Factor> parse_pattern(const std::string& text);

struct StatisticResult {
    Statistic statistic;
    RunningEstimate scalar;
    std::optional<HistogramEstimate> histogram;
};

/// One pass over the samples evaluating every statistic. Samples are split
/// into fixed chunks handed to `workers` threads; the merged result does not
/// depend on the worker count.
std::vector<StatisticResult> estimate_many(const HaarSampleConfig& config, const std::vector<Statistic>& statistics);
StatisticResult estimate(const HaarSampleConfig& config, const Statistic& statistic);

/// Histogram range for a statistic under the given group.
std::pair<double, double> histogram_range(const Statistic& statistic, GroupKind group);

struct GoodnessOfFit {
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 1.0;
    double max_abs_z = 0.0;
    /// (chi2 - dof) / sqrt(2 dof): how many sigma chi2 sits from its expectation.
    double chi2_sigma() const;
};

/// Compares each bin with the bin average of `reference` (Simpson quadrature)
/// using the per-bin standard errors. Bins with zero error are skipped.
GoodnessOfFit compare_histogram(const HistogramEstimate& histogram, const std::function<double(double)>& reference);

struct StructureReport {
    std::int64_t samples = 0;
    double max_unitarity_error = 0.0;   // max entry of C^dag C - I
    double max_modulus_error = 0.0;     // max | |lambda| - 1 |
    double max_det_error = 0.0;         // |det C - 1|
    double max_zero_phase_distance = 0.0;  // odd-N CO only
    double max_pairing_error = 0.0;     // CO only: phases closed under negation
    bool passed(double unitarity_tol = 1e-10, double phase_tol = 1e-8) const;
};

/// Runs the structural sample checks on `samples` draws.
StructureReport check_structure(const HaarSampleConfig& config);

/// Worker count from HAARCOMM_THREADS, or hardware concurrency, or 1.
int default_workers();

}  // namespace haarcomm
