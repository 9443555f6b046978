#include "haarcomm/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "haarcomm/brauer.hpp"

namespace haarcomm {

// ExactSum ---------------------------------------------------------------------

namespace {

// x = mantissa * 2^exponent with |mantissa| < 2^53
void split_double(double x, std::int64_t& mantissa, int& exponent) {
    int e = 0;
    const double f = std::frexp(x, &e);
    mantissa = static_cast<std::int64_t>(std::ldexp(f, 53));
    exponent = e - 53;
}

void shift_into(BigInt& acc, BigInt term, int shift) {
    if (shift < 0) throw std::logic_error("ExactSum: value below the representable scale");
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    acc += term;
}

double scaled_to_double(const BigInt& value, int scale) {
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::ldexp(d, static_cast<int>(exp) - scale);
}

}  // namespace

void ExactSum::add(double x) {
    if (!std::isfinite(x)) throw std::domain_error("ExactSum: non-finite value");
    if (x == 0.0) return;
    std::int64_t m = 0;
    int e = 0;
    split_double(x, m, e);
    shift_into(acc_, BigInt(static_cast<long>(m)), e + scale_);
}

void ExactSum::add_product(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::domain_error("ExactSum: non-finite value");
    if (a == 0.0 || b == 0.0) return;
    std::int64_t ma = 0, mb = 0;
    int ea = 0, eb = 0;
    split_double(a, ma, ea);
    split_double(b, mb, eb);
    shift_into(acc_, BigInt(static_cast<long>(ma)) * BigInt(static_cast<long>(mb)), ea + eb + scale_);
}

void ExactSum::merge(const ExactSum& other) {
    if (other.scale_ != scale_) throw std::logic_error("ExactSum: scale mismatch");
    acc_ += other.acc_;
}

double ExactSum::value() const { return scaled_to_double(acc_, scale_); }

// RunningEstimate ----------------------------------------------------------------

void RunningEstimate::add(Complex x) {
    ++count_;
    re_.add(x.real());
    im_.add(x.imag());
    re2_.add_product(x.real(), x.real());
    im2_.add_product(x.imag(), x.imag());
    reim_.add_product(x.real(), x.imag());
}

void RunningEstimate::merge(const RunningEstimate& other) {
    count_ += other.count_;
    re_.merge(other.re_);
    im_.merge(other.im_);
    re2_.merge(other.re2_);
    im2_.merge(other.im2_);
    reim_.merge(other.reim_);
}

Complex RunningEstimate::mean() const {
    if (count_ == 0) return {0.0, 0.0};
    return {re_.value() / count_, im_.value() / count_};
}

namespace {

// (n S_xy - S_x S_y) / (n (n-1)), all sums exact at matching scales
double exact_covariance(std::int64_t n, const ExactSum& sx, const ExactSum& sy, const ExactSum& sxy) {
    if (n < 2) return 0.0;
    const BigInt count(static_cast<long>(n));
    const BigInt numerator = count * sxy.raw() - sx.raw() * sy.raw();
    const BigInt denominator = count * (count - 1);
    ExactScalar q(numerator, denominator);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), ExactSum::kProductScale);
    q.canonicalize();
    return to_double(q);
}

}  // namespace

double RunningEstimate::variance_re() const { return exact_covariance(count_, re_, re_, re2_); }
double RunningEstimate::variance_im() const { return exact_covariance(count_, im_, im_, im2_); }
double RunningEstimate::covariance() const { return exact_covariance(count_, re_, im_, reim_); }
double RunningEstimate::stderr_re() const { return count_ ? std::sqrt(std::max(variance_re(), 0.0) / count_) : 0.0; }
double RunningEstimate::stderr_im() const { return count_ ? std::sqrt(std::max(variance_im(), 0.0) / count_) : 0.0; }

// HistogramEstimate ------------------------------------------------------------

HistogramEstimate::HistogramEstimate(double lo, double hi, int bins)
    : lo_(lo), hi_(hi), sum_(bins, 0), sumsq_(bins, 0) {
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram needs bins >= 1 and hi > lo");
}

void HistogramEstimate::add_sample(const std::vector<double>& points) {
    const std::int64_t p = static_cast<std::int64_t>(points.size());
    if (samples_ == 0) points_ = p;
    else if (p != points_) throw std::logic_error("histogram: points per sample changed");
    std::vector<std::int64_t> counts(sum_.size(), 0);
    const double w = width();
    for (double x : points) {
        if (x < lo_ || x > hi_) continue;
        const int b = std::min(static_cast<int>((x - lo_) / w), bins() - 1);
        ++counts[b];
    }
    for (std::size_t b = 0; b < counts.size(); ++b) {
        sum_[b] += counts[b];
        sumsq_[b] += counts[b] * counts[b];
    }
    ++samples_;
}

void HistogramEstimate::merge(const HistogramEstimate& other) {
    if (other.samples_ == 0) return;
    if (samples_ == 0) {
        *this = other;
        return;
    }
    if (other.sum_.size() != sum_.size() || other.lo_ != lo_ || other.hi_ != hi_ || other.points_ != points_) {
        throw std::logic_error("histogram: merging incompatible histograms");
    }
    samples_ += other.samples_;
    for (std::size_t b = 0; b < sum_.size(); ++b) {
        sum_[b] += other.sum_[b];
        sumsq_[b] += other.sumsq_[b];
    }
}

double HistogramEstimate::density(int b) const {
    if (samples_ == 0 || points_ == 0) return 0.0;
    return static_cast<double>(sum_[b]) / (static_cast<double>(samples_) * points_ * width());
}

double HistogramEstimate::density_stderr(int b) const {
    if (samples_ < 2 || points_ == 0) return 0.0;
    const long double s = samples_;
    const long double var = (s * sumsq_[b] - static_cast<long double>(sum_[b]) * sum_[b]) / (s * (s - 1));
    return std::sqrt(static_cast<double>(std::max(var, 0.0L)) / samples_) / (points_ * width());
}

// Sampling -----------------------------------------------------------------------

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
}

ComplexMatrix haar_unitary(int N, SampleStream& stream) {
    if (N < 1) throw std::invalid_argument("haar_unitary: N must be positive");
    const double scale = 1.0 / std::numbers::sqrt2;
    for (;;) {
        ComplexMatrix z(N, N);
        for (int j = 0; j < N; ++j) {
            for (int i = 0; i < N; ++i) {
                const double re = stream.normal();
                z(i, j) = Complex(re, stream.normal()) * scale;
            }
        }
        Eigen::HouseholderQR<ComplexMatrix> qr(z);
        ComplexMatrix q = qr.householderQ();
        bool degenerate = false;
        for (int k = 0; k < N; ++k) {
            const Complex r = qr.matrixQR()(k, k);
            const double a = std::abs(r);
            if (a == 0.0) {
                degenerate = true;
                break;
            }
            q.col(k) *= r / a;
        }
        if (!degenerate) return q;
    }
}

RealMatrix haar_orthogonal(int N, SampleStream& stream) {
    if (N < 1) throw std::invalid_argument("haar_orthogonal: N must be positive");
    for (;;) {
        RealMatrix z(N, N);
        for (int j = 0; j < N; ++j) {
            for (int i = 0; i < N; ++i) z(i, j) = stream.normal();
        }
        Eigen::HouseholderQR<RealMatrix> qr(z);
        RealMatrix q = qr.householderQ();
        bool degenerate = false;
        for (int k = 0; k < N; ++k) {
            const double r = qr.matrixQR()(k, k);
            if (r == 0.0) {
                degenerate = true;
                break;
            }
            if (r < 0) q.col(k) = -q.col(k);
        }
        if (!degenerate) return q;
    }
}

ComplexMatrix commutator(const ComplexMatrix& u, const ComplexMatrix& v) {
    return u * v * u.adjoint() * v.adjoint();
}

RealMatrix commutator(const RealMatrix& u, const RealMatrix& v) { return u * v * u.transpose() * v.transpose(); }

ComplexMatrix sample_commutator(GroupKind group, int N, SampleStream& stream) {
    if (group == GroupKind::unitary) {
        const ComplexMatrix u = haar_unitary(N, stream);
        const ComplexMatrix v = haar_unitary(N, stream);
        return commutator(u, v);
    }
    const RealMatrix u = haar_orthogonal(N, stream);
    const RealMatrix v = haar_orthogonal(N, stream);
    return commutator(u, v).cast<Complex>();
}

std::vector<Complex> eigenvalues(const ComplexMatrix& c) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(c, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("complex eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigenvalues(const RealMatrix& c) {
    Eigen::EigenSolver<RealMatrix> solver(c, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("real eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> eigenphases(const std::vector<Complex>& eigenvalues) {
    std::vector<double> out;
    out.reserve(eigenvalues.size());
    for (const auto& z : eigenvalues) {
        double t = std::arg(z);
        if (t <= -std::numbers::pi) t = std::numbers::pi;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Statistics ---------------------------------------------------------------------

bool Statistic::is_histogram() const {
    return kind == StatisticKind::element_hist || kind == StatisticKind::phase_hist ||
           kind == StatisticKind::spacing_hist;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

}  // namespace

std::vector<Factor> parse_pattern(const std::string& text) {
    std::vector<Factor> out;
    if (text.empty()) throw std::invalid_argument("empty index pattern");
    for (std::string item : split(text, ',')) {
        Factor f;
        if (!item.empty() && item.back() == '*') {
            f.conjugate = true;
            item.pop_back();
        }
        if (const auto colon = item.find(':'); colon != std::string::npos) {
            f.row = parse_int(item.substr(0, colon), "row index");
            f.col = parse_int(item.substr(colon + 1), "column index");
        } else if (item.size() == 2 && std::isdigit(static_cast<unsigned char>(item[0])) &&
                   std::isdigit(static_cast<unsigned char>(item[1]))) {
            f.row = item[0] - '0';
            f.col = item[1] - '0';
        } else {
            throw std::invalid_argument("bad pattern factor '" + item + "' (use 'ij' or 'i:j')");
        }
        if (f.row < 1 || f.col < 1) throw std::invalid_argument("pattern indices are 1-based");
        out.push_back(f);
    }
    return out;
}

Statistic parse_statistic(const std::string& text) {
    Statistic s;
    s.text = text;
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need_rest = [&] {
        if (rest.empty()) throw std::invalid_argument("statistic '" + name + "' needs an argument");
    };
    if (name == "trace") {
        s.kind = StatisticKind::trace;
        s.n = rest.empty() ? 1 : parse_int(rest, "power");
        if (s.n < 0) throw std::invalid_argument("trace power must be non-negative");
    } else if (name == "abstrace") {
        need_rest();
        const auto parts = split(rest, ':');
        s.kind = StatisticKind::abs_trace;
        s.m = parse_int(parts[0], "m");
        s.k = parts.size() > 1 ? parse_int(parts[1], "k") : 0;
        if (parts.size() > 2 || s.m < 0 || s.k < 0) throw std::invalid_argument("abstrace:m[:k] with m, k >= 0");
    } else if (name == "tracepow") {
        need_rest();
        s.kind = StatisticKind::trace_power;
        s.n = parse_int(rest, "power");
        if (s.n < 1) throw std::invalid_argument("tracepow needs n >= 1");
    } else if (name == "power-sum") {
        need_rest();
        s.kind = StatisticKind::power_sum;
        s.mu = parse_partition(rest);
    } else if (name == "element") {
        need_rest();
        s.kind = StatisticKind::element;
        s.pattern = parse_pattern(rest);
    } else if (name == "char") {
        need_rest();
        s.kind = StatisticKind::character;
        s.mu = parse_partition(rest);
    } else if (name == "element-hist") {
        need_rest();
        const auto parts = split(rest, ':');
        const auto ij = split(parts[0], ',');
        if (ij.size() != 2 || parts.size() > 2) throw std::invalid_argument("element-hist:i,j[:bins]");
        s.kind = StatisticKind::element_hist;
        s.row = parse_int(ij[0], "row index");
        s.col = parse_int(ij[1], "column index");
        if (parts.size() == 2) s.bins = parse_int(parts[1], "bins");
    } else if (name == "phase-hist" || name == "spacing-hist") {
        s.kind = name == "phase-hist" ? StatisticKind::phase_hist : StatisticKind::spacing_hist;
        if (!rest.empty()) s.bins = parse_int(rest, "bins");
    } else {
        throw std::invalid_argument("unknown statistic '" + text + "'");
    }
    if (s.bins < 1) throw std::invalid_argument("bins must be positive");
    return s;
}

std::pair<double, double> histogram_range(const Statistic& statistic, GroupKind group) {
    switch (statistic.kind) {
        case StatisticKind::element_hist:
            return group == GroupKind::unitary ? std::pair{0.0, 1.0} : std::pair{-1.0, 1.0};
        case StatisticKind::phase_hist:
            return {-std::numbers::pi, std::numbers::pi};
        case StatisticKind::spacing_hist:
            return {0.0, 4.0};
        default:
            throw std::invalid_argument("statistic '" + statistic.text + "' is not a histogram");
    }
}

namespace {

// A statistic with its power-sum expansion resolved once.
struct Prepared {
    const Statistic* stat;
    std::vector<std::pair<std::vector<int>, double>> expansion;  // p_mu coefficients
};

Prepared prepare(const Statistic& s, const HaarSampleConfig& config) {
    Prepared p{&s, {}};
    auto check_index = [&](int i) {
        if (i < 1 || i > config.N) {
            throw std::invalid_argument("index " + std::to_string(i) + " needs N >= " + std::to_string(i) +
                                        " (N=" + std::to_string(config.N) + ")");
        }
    };
    if (s.kind == StatisticKind::element) {
        for (const auto& f : s.pattern) {
            check_index(f.row);
            check_index(f.col);
        }
    }
    if (s.kind == StatisticKind::element_hist) {
        check_index(s.row);
        check_index(s.col);
    }
    if (s.kind == StatisticKind::character) {
        const auto coeffs = config.group == GroupKind::unitary ? s_in_power_sums(s.mu) : o_in_power_sums(s.mu);
        for (const auto& [mu, c] : coeffs) p.expansion.emplace_back(mu.parts(), to_double(c));
    }
    if (s.kind == StatisticKind::power_sum) p.expansion.emplace_back(s.mu.parts(), 1.0);
    return p;
}

bool needs_spectrum(StatisticKind kind) {
    return kind == StatisticKind::trace_power || kind == StatisticKind::power_sum ||
           kind == StatisticKind::character || kind == StatisticKind::phase_hist ||
           kind == StatisticKind::spacing_hist;
}

Complex ipow(Complex z, int n) {
    Complex out = 1.0;
    for (; n > 0; --n) out *= z;
    return out;
}

struct SampleView {
    const ComplexMatrix& c;
    const std::vector<Complex>& eig;
    std::vector<Complex>& power_sums;  // lazily filled, index k holds p_k
};

Complex power_sum(SampleView& view, int k) {
    auto& ps = view.power_sums;
    if (ps.size() <= static_cast<std::size_t>(k)) {
        const std::size_t old = ps.size();
        ps.resize(k + 1);
        for (std::size_t j = std::max<std::size_t>(old, 1); j <= static_cast<std::size_t>(k); ++j) {
            Complex s = 0.0;
            for (const auto& z : view.eig) s += ipow(z, static_cast<int>(j));
            ps[j] = s;
        }
        if (old == 0) ps[0] = static_cast<double>(view.eig.size());
    }
    return ps[k];
}

Complex scalar_value(const Prepared& p, SampleView& view) {
    const Statistic& s = *p.stat;
    switch (s.kind) {
        case StatisticKind::trace:
            return ipow(view.c.trace(), s.n);
        case StatisticKind::abs_trace: {
            const Complex t = view.c.trace();
            return std::pow(std::norm(t), s.m) * ipow(t, s.k);
        }
        case StatisticKind::trace_power:
            return power_sum(view, s.n);
        case StatisticKind::element: {
            Complex out = 1.0;
            for (const auto& f : s.pattern) {
                const Complex x = view.c(f.row - 1, f.col - 1);
                out *= f.conjugate ? std::conj(x) : x;
            }
            return out;
        }
        case StatisticKind::power_sum:
        case StatisticKind::character: {
            Complex out = 0.0;
            for (const auto& [mu, coeff] : p.expansion) {
                Complex term = coeff;
                for (int part : mu) term *= power_sum(view, part);
                out += term;
            }
            return out;
        }
        default:
            return 0.0;
    }
}

std::vector<double> histogram_points(const Statistic& s, GroupKind group, SampleView& view) {
    switch (s.kind) {
        case StatisticKind::element_hist: {
            const Complex x = view.c(s.row - 1, s.col - 1);
            return {group == GroupKind::unitary ? std::norm(x) : x.real()};
        }
        case StatisticKind::phase_hist:
        case StatisticKind::spacing_hist: {
            std::vector<double> phases = eigenphases(view.eig);
            const int N = static_cast<int>(phases.size());
            if (s.kind == StatisticKind::phase_hist) {
                if (group == GroupKind::orthogonal && N % 2 == 1) {
                    auto it = std::min_element(phases.begin(), phases.end(),
                                               [](double a, double b) { return std::abs(a) < std::abs(b); });
                    phases.erase(it);
                }
                return phases;
            }
            std::vector<double> gaps;
            const double scale = N / (2.0 * std::numbers::pi);
            for (int i = 0; i + 1 < N; ++i) gaps.push_back((phases[i + 1] - phases[i]) * scale);
            if (N > 0) gaps.push_back((phases[0] + 2.0 * std::numbers::pi - phases[N - 1]) * scale);
            return gaps;
        }
        default:
            return {};
    }
}

std::vector<StatisticResult> empty_results(const std::vector<Statistic>& stats, GroupKind group) {
    std::vector<StatisticResult> out;
    for (const auto& s : stats) {
        StatisticResult r{s, {}, std::nullopt};
        if (s.is_histogram()) {
            const auto [lo, hi] = histogram_range(s, group);
            r.histogram = HistogramEstimate(lo, hi, s.bins);
        }
        out.push_back(std::move(r));
    }
    return out;
}

constexpr std::int64_t kChunk = 256;

}  // namespace

int default_workers() {
    if (const char* env = std::getenv("HAARCOMM_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<StatisticResult> estimate_many(const HaarSampleConfig& config, const std::vector<Statistic>& statistics) {
    if (config.N < 1) throw std::invalid_argument("N must be positive");
    if (config.samples < 0) throw std::invalid_argument("sample count must be non-negative");
    std::vector<Prepared> prepared;
    bool spectrum = false;
    for (const auto& s : statistics) {
        prepared.push_back(prepare(s, config));
        spectrum = spectrum || needs_spectrum(s.kind);
    }
    const std::int64_t chunks = (config.samples + kChunk - 1) / kChunk;
    const int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(std::max<std::int64_t>(chunks, 1))));
    std::atomic<std::int64_t> next{0};
    std::vector<std::vector<StatisticResult>> partial(workers, empty_results(statistics, config.group));
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](int w) {
        try {
            auto& acc = partial[w];
            std::vector<Complex> eig, sums;
            for (std::int64_t chunk; (chunk = next.fetch_add(1)) < chunks;) {
                const std::int64_t end = std::min(config.samples, (chunk + 1) * kChunk);
                for (std::int64_t t = chunk * kChunk; t < end; ++t) {
                    SampleStream stream(config.seed, static_cast<std::uint64_t>(t));
                    ComplexMatrix c;
                    eig.clear();
                    if (config.group == GroupKind::unitary) {
                        c = sample_commutator(config.group, config.N, stream);
                        if (spectrum) eig = eigenvalues(c);
                    } else {
                        const RealMatrix u = haar_orthogonal(config.N, stream);
                        const RealMatrix v = haar_orthogonal(config.N, stream);
                        const RealMatrix cr = commutator(u, v);
                        if (spectrum) eig = eigenvalues(cr);
                        c = cr.cast<Complex>();
                    }
                    sums.clear();
                    SampleView view{c, eig, sums};
                    for (std::size_t i = 0; i < prepared.size(); ++i) {
                        const Statistic& s = *prepared[i].stat;
                        if (s.is_histogram()) {
                            acc[i].histogram->add_sample(histogram_points(s, config.group, view));
                        } else {
                            acc[i].scalar.add(scalar_value(prepared[i], view));
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<StatisticResult> out = empty_results(statistics, config.group);
    for (const auto& part : partial) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i].scalar.merge(part[i].scalar);
            if (out[i].histogram) out[i].histogram->merge(*part[i].histogram);
        }
    }
    return out;
}

StatisticResult estimate(const HaarSampleConfig& config, const Statistic& statistic) {
    return estimate_many(config, {statistic}).front();
}

// Goodness of fit --------------------------------------------------------------------

double GoodnessOfFit::chi2_sigma() const { return dof > 0 ? (chi2 - dof) / std::sqrt(2.0 * dof) : 0.0; }

GoodnessOfFit compare_histogram(const HistogramEstimate& histogram, const std::function<double(double)>& reference) {
    GoodnessOfFit fit;
    constexpr int kPanels = 64;  // even, for Simpson's rule
    for (int b = 0; b < histogram.bins(); ++b) {
        const double se = histogram.density_stderr(b);
        if (se <= 0.0) continue;
        const double a = histogram.left(b), h = histogram.width() / kPanels;
        // open-ended sampling keeps endpoint singularities out of the quadrature
        double integral = 0.0;
        for (int i = 0; i <= kPanels; ++i) {
            double x = a + i * h;
            if (i == 0) x += 1e-12 * histogram.width();
            if (i == kPanels) x -= 1e-12 * histogram.width();
            const double weight = (i == 0 || i == kPanels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            integral += weight * reference(x);
        }
        const double expected = integral * h / 3.0 / histogram.width();
        const double z = (histogram.density(b) - expected) / se;
        fit.chi2 += z * z;
        fit.max_abs_z = std::max(fit.max_abs_z, std::abs(z));
        ++fit.dof;
    }
    if (fit.dof > 0) {
        boost::math::chi_squared dist(fit.dof);
        fit.p_value = boost::math::cdf(boost::math::complement(dist, fit.chi2));
    }
    return fit;
}

// Structural checks ----------------------------------------------------------------

bool StructureReport::passed(double unitarity_tol, double phase_tol) const {
    return max_unitarity_error < unitarity_tol && max_modulus_error < phase_tol && max_det_error < phase_tol &&
           max_zero_phase_distance < phase_tol && max_pairing_error < phase_tol;
}

StructureReport check_structure(const HaarSampleConfig& config) {
    StructureReport report;
    const int N = config.N;
    const ComplexMatrix identity = ComplexMatrix::Identity(N, N);
    for (std::int64_t t = 0; t < config.samples; ++t) {
        SampleStream stream(config.seed, static_cast<std::uint64_t>(t));
        ComplexMatrix c;
        std::vector<Complex> eig;
        if (config.group == GroupKind::unitary) {
            c = sample_commutator(config.group, N, stream);
            eig = eigenvalues(c);
        } else {
            const RealMatrix u = haar_orthogonal(N, stream);
            const RealMatrix v = haar_orthogonal(N, stream);
            const RealMatrix cr = commutator(u, v);
            eig = eigenvalues(cr);
            c = cr.cast<Complex>();
        }
        report.max_unitarity_error =
            std::max(report.max_unitarity_error, (c.adjoint() * c - identity).cwiseAbs().maxCoeff());
        Complex det = 1.0;
        for (const auto& z : eig) {
            report.max_modulus_error = std::max(report.max_modulus_error, std::abs(std::abs(z) - 1.0));
            det *= z;
        }
        report.max_det_error = std::max(report.max_det_error, std::abs(det - 1.0));
        if (config.group == GroupKind::orthogonal) {
            if (N % 2 == 1) {
                double nearest = std::numeric_limits<double>::infinity();
                for (double th : eigenphases(eig)) nearest = std::min(nearest, std::abs(th));
                report.max_zero_phase_distance = std::max(report.max_zero_phase_distance, nearest);
            }
            for (const auto& z : eig) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& w : eig) best = std::min(best, std::abs(std::conj(z) - w));
                report.max_pairing_error = std::max(report.max_pairing_error, best);
            }
        }
        ++report.samples;
    }
    return report;
}

}  // namespace haarcomm
