#include "haarcomm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "haarcomm/characters.hpp"
#include "haarcomm/exact_formulas.hpp"
#include "haarcomm/sampler.hpp"
#include "haarcomm/verify.hpp"
#include "haarcomm/weingarten.hpp"
#include "haarcomm/word_engine.hpp"

namespace haarcomm {

using nlohmann::json;

std::vector<int> parse_dimensions(const std::string& text) {
    auto to_int = [&](const std::string& token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != token.size() || value < 1) {
            throw std::invalid_argument("bad dimension '" + token + "' in '" + text + "'");
        }
        return value;
    };
    std::vector<int> dims;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty dimension range '" + text + "'");
        for (int N = lo; N <= hi; ++N) dims.push_back(N);
        return dims;
    }
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) dims.push_back(to_int(token));
    if (dims.empty()) throw std::invalid_argument("no dimensions given");
    return dims;
}

namespace {

struct Common {
    std::string group = "cu";
    std::string dims = "4";
    std::string format = "text";
    std::string report;
    std::uint64_t seed = 20240917;
    std::int64_t samples = 10000;
    int workers = 0;  // 0: environment variable or hardware concurrency
};

struct ExactArgs {
    std::string quantity;
    int n = 1, a = 1, b = 0, m = 1;
    std::string mu, lambda, pattern, mode = "proved", route = "contraction";
};

struct McArgs {
    std::vector<std::string> statistics;
    std::string csv;
};

struct VerifyArgs {
    std::vector<std::string> suites;
    int max_n = 0;
    std::string dims;
    int bins = 0;
    bool quiet = false;
};

struct DensityArgs {
    int bins = 40;
    std::string output;
};

struct ExpandArgs {
    std::string quantity;
    int n = 3, depth = 4, m = 1, max_n = 0;
};

std::string decimal(const ExactScalar& q) { return to_decimal(q, 17); }

json exact_record(const std::string& quantity, GroupKind g, int N, json params, const ExactScalar& value,
                  Provenance p) {
    return {{"quantity", quantity},     {"group", std::string(to_string(g))}, {"N", N},
            {"params", std::move(params)}, {"value", to_string(value)},       {"decimal", decimal(value)},
            {"provenance", to_string(p)}};
}

std::string params_text(const json& params) {
    std::string out;
    for (const auto& [key, value] : params.items()) {
        out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
}

void emit_report(const Common& common, const json& report, std::ostream& out, const std::string& text) {
    if (!common.report.empty()) {
        std::ofstream file(common.report);
        if (!file) throw std::runtime_error("cannot write report '" + common.report + "'");
        file << report.dump(2) << '\n';
    }
    if (common.format == "json") out << report.dump(2) << '\n';
    else out << text;
}

int effective_workers(const Common& common) { return common.workers > 0 ? common.workers : default_workers(); }

// CO character sums stop at N = n; the word engine covers N = n itself.
std::pair<ExactScalar, Provenance> power_sum_value(GroupKind g, const Partition& mu, int N) {
    if (g == GroupKind::unitary || N > mu.weight()) return {power_sum_avg(g, mu, N), Provenance::closed_form};
    if (mu.weight() <= kMaxWordDegree && N >= mu.weight()) {
        return {power_sum_moment(g, mu, N), Provenance::oracle};
    }
    throw OutOfRangeError("CO power sums with N <= n are only available from the word engine (n <= " +
                          std::to_string(kMaxWordDegree) + ", N >= n)");
}

std::pair<ExactScalar, Provenance> exact_value(const ExactArgs& args, GroupKind g, int N, json& params) {
    const std::string& q = args.quantity;
    const auto mode = args.mode == "conjectured" ? CorrelatorMode::conjectured : CorrelatorMode::proved;
    if (args.mode != "proved" && args.mode != "conjectured") throw std::invalid_argument("--mode is proved or conjectured");
    const Provenance mode_prov = mode == CorrelatorMode::conjectured ? Provenance::conjectured : Provenance::closed_form;
    if (q == "trace-moment") {
        params["n"] = args.n;
        if (g == GroupKind::unitary || N > args.n) return {trace_moment(g, args.n, N), Provenance::closed_form};
        return power_sum_value(g, Partition::ones(args.n), N);
    }
    if (q == "trace-power") {
        params["n"] = args.n;
        return power_sum_value(g, Partition{args.n}, N);
    }
    if (q == "power-sum") {
        const Partition mu = parse_partition(args.mu);
        params["mu"] = mu.to_string();
        return power_sum_value(g, mu, N);
    }
    if (q == "mixed") {
        params["a"] = args.a;
        params["b"] = args.b;
        params["route"] = args.route;
        if (args.route != "contraction" && args.route != "patterns") {
            throw std::invalid_argument("--route is contraction or patterns");
        }
        const auto route = args.route == "patterns" ? TraceRoute::patterns : TraceRoute::contraction;
        return {trace_mixed_moment(g, args.a, args.b, N, route), Provenance::oracle};
    }
    if (q == "element") {
        params["pattern"] = args.pattern;
        return {commutator_moment({g, parse_pattern(args.pattern), N}), Provenance::oracle};
    }
    if (q == "character") {
        const Partition lambda = parse_partition(args.lambda);
        params["lambda"] = lambda.to_string();
        return {avg_irrep_char(g, lambda, N), Provenance::closed_form};
    }
    if (q == "dimension") {
        const Partition lambda = parse_partition(args.lambda);
        params["lambda"] = lambda.to_string();
        return {g == GroupKind::unitary ? schur_dimension(lambda, N) : orthogonal_dimension(lambda, N),
                Provenance::closed_form};
    }
    if (q == "wg") {
        const Partition mu = parse_partition(args.mu);
        params["type"] = mu.to_string();
        if (g == GroupKind::unitary) return {wg_u_char(mu, N), Provenance::closed_form};
        return {wg_o_gram(mu, N), Provenance::oracle};
    }
    if (q == "f-lambda") {
        const Partition lambda = parse_partition(args.lambda);
        params["lambda"] = lambda.to_string();
        params["mode"] = args.mode;
        if (g == GroupKind::unitary) return {f_lambda_u(lambda, N), Provenance::closed_form};
        if (mode == CorrelatorMode::conjectured) {
            ExactScalar guess = ExactScalar(dimension(lambda)) / dim_poly_o(lambda, N);
            guess.canonicalize();
            return {guess, Provenance::conjectured};
        }
        return {f_lambda_o(lambda, N), Provenance::closed_form};
    }
    if (q == "correlator") {
        const Partition mu = parse_partition(args.mu);
        params["cycle-type"] = mu.to_string();
        if (g == GroupKind::unitary) return {f_u(mu, N), Provenance::closed_form};
        params["mode"] = args.mode;
        return {f_o(mu, N, mode), mode_prov};
    }
    if (q == "tail") {
        params["m"] = args.m;
        if (g != GroupKind::unitary) throw std::invalid_argument("tail moments are defined for cu only");
        return {tail_moment_cu(N, args.m), Provenance::closed_form};
    }
    throw std::invalid_argument("unknown exact quantity '" + q + "'");
}

int run_exact(const Common& common, const ExactArgs& args, std::ostream& out) {
    const GroupKind g = parse_group(common.group);
    json results = json::array();
    std::string text;
    for (int N : parse_dimensions(common.dims)) {
        json params = json::object();
        const auto [value, provenance] = exact_value(args, g, N, params);
        results.push_back(exact_record(args.quantity, g, N, params, value, provenance));
        text += std::string(to_string(g)) + " " + args.quantity + params_text(params) + " N=" + std::to_string(N) +
                ": " + to_string(value) + " = " + decimal(value) + " [" + to_string(provenance) + "]\n";
    }
    emit_report(common, {{"command", "exact"}, {"results", results}}, out, text);
    return kExitOk;
}

json histogram_json(const HistogramEstimate& h) {
    json bins = json::array();
    for (int b = 0; b < h.bins(); ++b) {
        bins.push_back({{"left", h.left(b)}, {"right", h.right(b)}, {"density", h.density(b)},
                        {"stderr", h.density_stderr(b)}});
    }
    return {{"lo", h.lo()}, {"hi", h.hi()}, {"samples", h.samples()}, {"bins", bins}};
}

// RFC 4180: comma separated, CRLF line ends.
void write_histogram_csv(const HistogramEstimate& h, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file.precision(17);
    file << "bin_left,bin_right,density,stderr\r\n";
    for (int b = 0; b < h.bins(); ++b) {
        file << h.left(b) << ',' << h.right(b) << ',' << h.density(b) << ',' << h.density_stderr(b) << "\r\n";
    }
}

std::string fixed(double x, int precision = 6) {
    std::ostringstream s;
    s.precision(precision);
    s << x;
    return s.str();
}

int run_mc(const Common& common, const McArgs& args, std::ostream& out) {
    const GroupKind g = parse_group(common.group);
    std::vector<Statistic> stats;
    for (const auto& s : args.statistics) stats.push_back(parse_statistic(s));
    const auto dims = parse_dimensions(common.dims);
    if (!args.csv.empty()) {
        const auto histograms = std::count_if(stats.begin(), stats.end(), [](const Statistic& s) {
            return s.kind == StatisticKind::element_hist || s.kind == StatisticKind::phase_hist ||
                   s.kind == StatisticKind::spacing_hist;
        });
        if (histograms != 1 || dims.size() != 1) {
            throw std::invalid_argument("--csv needs exactly one histogram statistic and one dimension");
        }
    }
    json results = json::array();
    std::string text;
    for (int N : dims) {
        const HaarSampleConfig config{g, N, common.samples, common.seed, effective_workers(common)};
        for (const auto& r : estimate_many(config, stats)) {
            json record{{"statistic", r.statistic.text}, {"group", std::string(to_string(g))}, {"N", N},
                        {"samples", r.scalar.count()}, {"seed", common.seed}, {"provenance", "monte-carlo"}};
            const std::string head = std::string(to_string(g)) + " " + r.statistic.text + " N=" + std::to_string(N);
            if (r.histogram) {
                record["histogram"] = histogram_json(*r.histogram);
                if (!args.csv.empty()) write_histogram_csv(*r.histogram, args.csv);
                text += head + ": histogram of " + std::to_string(r.histogram->bins()) + " bins over " +
                        std::to_string(r.histogram->samples()) + " samples [monte-carlo]\n";
                for (int b = 0; b < r.histogram->bins(); ++b) {
                    text += "  [" + fixed(r.histogram->left(b)) + ", " + fixed(r.histogram->right(b)) +
                            "): " + fixed(r.histogram->density(b)) + " +/- " +
                            fixed(r.histogram->density_stderr(b), 3) + "\n";
                }
                results.push_back(record);
                continue;
            }
            const Complex mean = r.scalar.mean();
            record["mean_re"] = mean.real();
            record["mean_im"] = mean.imag();
            record["stderr_re"] = r.scalar.stderr_re();
            record["stderr_im"] = r.scalar.stderr_im();
            text += head + ": " + fixed(mean.real()) + " +/- " + fixed(r.scalar.stderr_re(), 3);
            if (mean.imag() != 0.0 || r.scalar.stderr_im() != 0.0) {
                text += ", imag " + fixed(mean.imag()) + " +/- " + fixed(r.scalar.stderr_im(), 3);
            }
            text += " [monte-carlo]";
            std::optional<ExactReference> ref;
            try {
                ref = exact_reference(g, r.statistic, N);
            } catch (const std::exception&) {
                ref.reset();
            }
            if (ref) {
                const double z = max_abs_z(r.scalar, to_double(ref->value));
                record["exact"] = {{"value", to_string(ref->value)},
                                   {"decimal", decimal(ref->value)},
                                   {"provenance", to_string(ref->provenance)}};
                record["z"] = z;
                text += "; exact " + to_string(ref->value) + " [" + to_string(ref->provenance) + "], |z| " +
                        fixed(z, 3);
            }
            text += "\n";
            results.push_back(record);
        }
    }
    emit_report(common, {{"command", "mc"}, {"results", results}}, out, text);
    return kExitOk;
}

int run_verify(const Common& common, const VerifyArgs& args, std::ostream& out) {
    std::vector<std::string> names = args.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
    SuiteOptions options;
    options.max_n = args.max_n;
    if (!args.dims.empty()) {
        const auto dims = parse_dimensions(args.dims);
        options.dim_lo = dims.front();
        options.dim_hi = dims.back();
    }
    options.samples = common.samples;
    options.seed = common.seed;
    options.workers = effective_workers(common);
    options.bins = args.bins;

    bool all_passed = true;
    json suites = json::array();
    std::string text;
    for (const auto& name : names) {
        const SuiteReport report = run_suite(name, options);
        all_passed = all_passed && report.passed();
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"label", c.label},
                              {"passed", c.passed},
                              {"detail", c.detail},
                              {"provenance", to_string(c.provenance)}});
            if (!args.quiet || !c.passed) {
                text += std::string(c.passed ? "PASS " : "FAIL ") + name + ": " + c.label +
                        (c.detail.empty() ? "" : " (" + c.detail + ")") + " [" + to_string(c.provenance) + "]\n";
            }
        }
        for (const auto& f : report.findings) text += "NOTE " + name + ": " + f + "\n";
        text += std::string(report.passed() ? "SUITE PASS " : "SUITE FAIL ") + name + " (" +
                std::to_string(report.checks.size() - report.failures()) + "/" +
                std::to_string(report.checks.size()) + " checks, " + fixed(report.seconds, 3) + " s)\n";
        suites.push_back({{"name", name},
                          {"passed", report.passed()},
                          {"seconds", report.seconds},
                          {"checks", checks},
                          {"findings", report.findings}});
    }
    emit_report(common, {{"command", "verify"}, {"passed", all_passed}, {"suites", suites}}, out, text);
    return all_passed ? kExitOk : kExitVerificationFailed;
}

int run_density(const Common& common, const DensityArgs& args, std::ostream& out) {
    const GroupKind g = parse_group(common.group);
    json results = json::array();
    std::ostringstream csv;
    csv << "group,N,theta_lo,theta_hi,theta_mid,mc_density,stderr,asymptotic,provenance\r\n";
    for (int N : parse_dimensions(common.dims)) {
        const HaarSampleConfig config{g, N, common.samples, common.seed, effective_workers(common)};
        const auto r = estimate(config, parse_statistic("phase-hist:" + std::to_string(args.bins)));
        const auto& h = *r.histogram;
        const auto reference = [g, N](double t) { return density_asymptotic(g, N, t); };
        for (int b = 0; b < h.bins(); ++b) {
            const double mid = 0.5 * (h.left(b) + h.right(b));
            csv << to_string(g) << ',' << N << ',' << fixed(h.left(b), 10) << ',' << fixed(h.right(b), 10) << ','
                << fixed(mid, 10) << ',' << fixed(h.density(b), 10) << ',' << fixed(h.density_stderr(b), 10) << ','
                << fixed(reference(mid), 10) << ",monte-carlo\r\n";
        }
        const GoodnessOfFit fit = compare_histogram(h, reference);
        results.push_back({{"group", std::string(to_string(g))},
                           {"N", N},
                           {"samples", h.samples()},
                           {"seed", common.seed},
                           {"mean_density", 1.0 / (2.0 * std::numbers::pi)},
                           {"chi2", fit.chi2},
                           {"dof", fit.dof},
                           {"p_value", fit.p_value},
                           {"chi2_sigma", fit.chi2_sigma()},
                           {"max_abs_z", fit.max_abs_z},
                           {"histogram", histogram_json(h)},
                           {"provenance", "monte-carlo"}});
    }
    if (!args.output.empty()) {
        std::ofstream file(args.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write '" + args.output + "'");
        file << csv.str();
    }
    std::string text;
    for (const auto& r : results) {
        text += r["group"].get<std::string>() + " N=" + std::to_string(r["N"].get<int>()) + ": chi2 " +
                fixed(r["chi2"].get<double>()) + " on " + std::to_string(r["dof"].get<int>()) + " bins, p " +
                fixed(r["p_value"].get<double>(), 3) + " against the two-term density [monte-carlo]\n";
    }
    if (common.format == "csv") {
        out << csv.str();
        if (!common.report.empty()) emit_report({.format = "none", .report = common.report},
                                                {{"command", "density"}, {"results", results}}, out, "");
        return kExitOk;
    }
    emit_report(common, {{"command", "density"}, {"results", results}}, out, text);
    return kExitOk;
}

int run_expand(const Common& common, const ExpandArgs& args, std::ostream& out) {
    const GroupKind g = parse_group(common.group);
    json results = json::array();
    std::string text;
    auto row = [&](const std::string& what, const std::string& power, const ExactScalar& c) {
        results.push_back({{"term", what}, {"power", power}, {"coefficient", to_string(c)},
                           {"decimal", decimal(c)}, {"provenance", "closed-form"}});
        text += what + " " + power + ": " + to_string(c) + " [closed-form]\n";
    };
    if (args.quantity == "trace-power") {
        if (g != GroupKind::unitary) throw std::invalid_argument("trace-power expansion is implemented for cu");
        for (const auto& [p, c] : trace_power_expansion_cu(args.n, args.depth)) {
            row("<Tr C^" + std::to_string(args.n) + ">", "N^-" + std::to_string(p), c);
        }
    } else if (args.quantity == "trace-moment") {
        for (int n = 1; n <= std::max(args.n, 1); ++n) {
            const LeadingTerm t = trace_moment_asymptotic(g, n);
            row("<(Tr C)^" + std::to_string(n) + ">", "N^" + std::to_string(t.power), ExactScalar(t.coefficient));
        }
    } else if (args.quantity == "tail") {
        if (g != GroupKind::unitary) throw std::invalid_argument("tail moments are defined for cu only");
        for (int N : parse_dimensions(common.dims)) {
            for (int m = 1; m <= args.m; ++m) {
                const ExactScalar exact = tail_moment_cu(N, m);
                const ExactScalar approx = tail_moment_asymptotic(N, m);
                results.push_back({{"N", N},
                                   {"m", m},
                                   {"exact", to_string(exact)},
                                   {"asymptotic", to_string(approx)},
                                   {"ratio", to_double(exact / approx)},
                                   {"provenance", "closed-form"}});
                text += "<Tr C^(N+" + std::to_string(m) + ")> N=" + std::to_string(N) + ": " + to_string(exact) +
                        " vs (-1)^(N-1) m!/N^m = " + to_string(approx) + " [closed-form]\n";
            }
        }
    } else if (args.quantity == "fourier") {
        for (int N : parse_dimensions(common.dims)) {
            const int top = args.max_n > 0 ? args.max_n : N + 2;
            for (int n = 1; n <= top; ++n) {
                FourierCoefficient c;
                try {
                    c = fourier_coeff(g, n, N);
                } catch (const OutOfRangeError&) {
                    continue;
                }
                results.push_back({{"N", N},
                                   {"n", n},
                                   {"pi_times_c", to_string(c.times_pi_inverse)},
                                   {"c", c.value()},
                                   {"provenance", "closed-form"}});
                text += "c_{" + std::to_string(N) + "," + std::to_string(n) + "} = (" +
                        to_string(c.times_pi_inverse) + ")/pi = " + fixed(c.value(), 10) + " [closed-form]\n";
            }
        }
    } else {
        throw std::invalid_argument("unknown expansion '" + args.quantity + "'");
    }
    emit_report(common, {{"command", "expand"}, {"quantity", args.quantity}, {"results", results}}, out, text);
    return kExitOk;
}

void add_common(CLI::App* sub, Common& common, bool sampling) {
    sub->add_option("-g,--group", common.group, "cu or co")->capture_default_str();
    sub->add_option("-N,--dim", common.dims, "dimension: 7, 5..8 or 4,6,9")->capture_default_str();
    sub->add_option("--format", common.format, "text, json (density also csv)")->capture_default_str();
    sub->add_option("--report", common.report, "also write the JSON report to this path");
    if (sampling) {
        sub->add_option("--samples", common.samples, "number of Haar samples")->capture_default_str();
        sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
        sub->add_option("--workers", common.workers, "worker threads (overrides HAARCOMM_THREADS)");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and sampled statistics of Haar commutators in U(N) and O(N)", "haarcomm"};
    app.require_subcommand(1);

    Common common;
    ExactArgs exact_args;
    McArgs mc_args;
    VerifyArgs verify_args;
    DensityArgs density_args;
    ExpandArgs expand_args;

    auto* exact = app.add_subcommand("exact", "exact rational evaluation");
    add_common(exact, common, false);
    exact->add_option("quantity", exact_args.quantity,
                      "trace-moment, trace-power, power-sum, mixed, element, character, dimension, wg, f-lambda, "
                      "correlator, tail")
        ->required();
    exact->add_option("-n,--n", exact_args.n, "moment order")->capture_default_str();
    exact->add_option("--a", exact_args.a, "power of Tr C (mixed)")->capture_default_str();
    exact->add_option("--b", exact_args.b, "power of conj Tr C (mixed)")->capture_default_str();
    exact->add_option("--m", exact_args.m, "tail offset")->capture_default_str();
    exact->add_option("--mu", exact_args.mu, "partition, e.g. (2,1)");
    exact->add_option("--lambda", exact_args.lambda, "partition, e.g. (2,1)");
    exact->add_option("--pattern", exact_args.pattern, "entry pattern, e.g. 11,22*");
    exact->add_option("--mode", exact_args.mode, "proved or conjectured")->capture_default_str();
    exact->add_option("--route", exact_args.route, "contraction or patterns")->capture_default_str();

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimates with exact comparison");
    add_common(mc, common, true);
    mc->add_option("statistics", mc_args.statistics, "trace:n, abstrace:m:k, tracepow:n, power-sum:(3,1), "
                                                     "element:11,22*, char:(2,1), element-hist:i,j, phase-hist, "
                                                     "spacing-hist")
        ->required();
    mc->add_option("--csv", mc_args.csv, "write the histogram statistic as CSV");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", verify_args.suites, "suite names or all");
    verify->add_option("--max-n", verify_args.max_n, "largest order (suite default if omitted)");
    verify->add_option("--dims", verify_args.dims, "dimension range lo..hi (suite default if omitted)");
    verify->add_option("--bins", verify_args.bins, "histogram bins");
    verify->add_flag("--quiet", verify_args.quiet, "print failures and summaries only");
    verify->add_option("--format", common.format, "text or json")->capture_default_str();
    verify->add_option("--report", common.report, "also write the JSON report to this path");
    verify->add_option("--seed", common.seed, "random seed")->capture_default_str();
    verify->add_option("--workers", common.workers, "worker threads (overrides HAARCOMM_THREADS)");
    common.samples = 0;
    verify->add_option("--samples", common.samples, "samples (suite default if omitted)");

    auto* density = app.add_subcommand("density", "eigenphase density against the two-term formula");
    add_common(density, common, true);
    density->add_option("--bins", density_args.bins, "histogram bins")->capture_default_str();
    density->add_option("-o,--output", density_args.output, "CSV output path");

    auto* expand = app.add_subcommand("expand", "large-N series coefficients");
    add_common(expand, common, false);
    expand->add_option("quantity", expand_args.quantity, "trace-power, trace-moment, tail, fourier")->required();
    expand->add_option("-n,--n", expand_args.n, "order")->capture_default_str();
    expand->add_option("--depth", expand_args.depth, "number of terms")->capture_default_str();
    expand->add_option("--m", expand_args.m, "largest tail offset")->capture_default_str();
    expand->add_option("--max-n", expand_args.max_n, "largest Fourier index (default N+2)");

    std::vector<std::string> argv_storage{"haarcomm"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    // mc and density default to 10000 samples; verify keeps 0 for suite defaults
    if (!verify->parsed() && common.samples == 0) common.samples = 10000;

    try {
        if (common.format != "text" && common.format != "json" && !(density->parsed() && common.format == "csv")) {
            throw std::invalid_argument("unknown format '" + common.format + "'");
        }
        if (exact->parsed()) return run_exact(common, exact_args, out);
        if (mc->parsed()) return run_mc(common, mc_args, out);
        if (verify->parsed()) return run_verify(common, verify_args, out);
        if (density->parsed()) return run_density(common, density_args, out);
        if (expand->parsed()) return run_expand(common, expand_args, out);
    } catch (const OutOfRangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const SingularGramError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace haarcomm
