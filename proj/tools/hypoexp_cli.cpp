// Command-line front end: tail probabilities for sums of exponential
// variables, power-spectrum significance, exact identity verification, and
// oracle comparison.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypoexp/confluent.hpp"
#include "hypoexp/constants.hpp"
#include "hypoexp/distribution.hpp"
#include "hypoexp/errors.hpp"
#include "hypoexp/identities.hpp"
#include "hypoexp/oracles.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitFailure = 1;     // verification / comparison failure
constexpr int kExitValidation = 2;  // bad input

struct CommonOpts {
    std::vector<double> scales;
    std::string scales_file;
    std::string output = "human";
    double p_tot = 0.0;
    double rel_tol = hypoexp::defaults::kRelTol;
    double abs_tol = hypoexp::defaults::kQuadAbsTol;
    std::uint64_t seed = hypoexp::defaults::kSeed;
    std::size_t count = hypoexp::defaults::kSampleCount;
};

std::vector<double> resolve_scales(const CommonOpts& opts) {
    if (!opts.scales_file.empty()) {
        std::ifstream in(opts.scales_file);
        if (!in) {
            throw std::invalid_argument("scales-file: cannot open " + opts.scales_file);
        }
        json parsed = json::parse(in);
        if (!parsed.is_array()) {
            throw std::invalid_argument("scales-file: expected a JSON array of numbers");
        }
        return parsed.get<std::vector<double>>();
    }
    if (opts.scales.empty()) {
        throw std::invalid_argument("scales: provide --scales or --scales-file");
    }
    return opts.scales;
}

const char* path_name(hypoexp::DispatchPath path) {
    switch (path) {
        case hypoexp::DispatchPath::distinct: return "distinct";
        case hypoexp::DispatchPath::erlang: return "erlang";
        case hypoexp::DispatchPath::confluent: return "confluent";
    }
    return "?";
}

json clusters_to_json(const hypoexp::ClusterPartition& partition) {
    json out = json::array();
    for (const auto& c : partition.clusters) {
        out.push_back({{"scale", c.representative_scale},
                       {"indices", c.member_indices}});
    }
    return out;
}

void emit(const json& report, const std::string& output) {
    if (output == "json") {
        std::cout << report.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "schema_version") continue;
        if (value.is_number_float()) {
            std::cout << key << " = " << std::setprecision(17) << value.get<double>() << "\n";
        } else {
            std::cout << key << " = " << value.dump() << "\n";
        }
    }
}

int run_tail(const CommonOpts& opts, bool show_raw) {
    hypoexp::ScaleSet scales(resolve_scales(opts));
    auto partition = hypoexp::cluster_scales(scales, opts.rel_tol);
    auto result = hypoexp::survival(scales, opts.p_tot, opts.rel_tol);

    json report = {{"schema_version", kSchemaVersion},
                   {"value", result.value},
                   {"path", path_name(hypoexp::dispatch_path(partition))},
                   {"clusters", clusters_to_json(partition)},
                   {"inputs", {{"scales", scales.scales()},
                               {"p_tot", opts.p_tot},
                               {"rel_tol", opts.rel_tol}}}};
    if (show_raw) report["raw_value"] = result.raw;
    emit(report, opts.output);
    return 0;
}

int run_erlang(const CommonOpts& opts, double scale, std::size_t n) {
    auto result = hypoexp::survival_erlang(scale, n, opts.p_tot);
    json report = {{"schema_version", kSchemaVersion},
                   {"value", result.value},
                   {"path", "erlang"},
                   {"clusters", json::array({{{"scale", scale},
                                              {"indices", json::array()}}})},
                   {"inputs", {{"scale", scale}, {"n", n}, {"p_tot", opts.p_tot}}}};
    emit(report, opts.output);
    return 0;
}

int run_significance(const CommonOpts& opts, std::size_t n_bins, double total_power) {
    // Leahy-normalized Poisson noise: each bin is exponential with mean 2.
    auto result = hypoexp::survival_erlang(2.0, n_bins, total_power);
    json report = {{"schema_version", kSchemaVersion},
                   {"value", result.value},
                   {"path", "erlang"},
                   {"inputs", {{"bins", n_bins}, {"power", total_power}}}};
    emit(report, opts.output);
    return 0;
}

hypoexp::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> numer(1, 1'000'000);
    std::uniform_int_distribution<long> denom(1, 1'000'000);
    std::bernoulli_distribution sign(0.5);
    long p = numer(rng);
    if (sign(rng)) p = -p;
    return hypoexp::Rational(p, denom(rng));
}

std::vector<hypoexp::Rational> random_distinct(std::mt19937_64& rng, std::size_t count,
                                               bool nonzero) {
    std::vector<hypoexp::Rational> values;
    while (values.size() < count) {
        hypoexp::Rational r = random_rational(rng);
        if (nonzero && r == 0) continue;
        bool fresh = true;
        for (const auto& v : values) {
            if (v == r) fresh = false;
        }
        if (fresh) values.push_back(r);
    }
    return values;
}

int run_verify(const CommonOpts& opts, int max_n, int seeds) {
    if (max_n < 2 || max_n > hypoexp::defaults::kVerifyMaxN) {
        throw std::invalid_argument("max-n: must be in [2, " +
                                    std::to_string(hypoexp::defaults::kVerifyMaxN) + "]");
    }
    if (seeds < 1) {
        throw std::invalid_argument("seeds: must be at least 1");
    }

    json results = json::array();
    bool all_pass = true;
    auto record = [&](int n, const std::string& identity, bool pass) {
        results.push_back({{"n", n}, {"identity", identity}, {"pass", pass}});
        all_pass = all_pass && pass;
        if (opts.output != "json") {
            std::cout << (pass ? "PASS" : "FAIL") << "  n=" << n << "  " << identity << "\n";
        }
    };

    // Fixed vectors first: pair, triple, quadruple with tiny integers.
    {
        using hypoexp::DistinctTuple, hypoexp::Rational;
        bool fixed_ok =
            hypoexp::lemma_sum(DistinctTuple({Rational(2), Rational(3)})) == 1 &&
            hypoexp::lemma_sum(DistinctTuple({Rational(1), Rational(2), Rational(3)})) == 1 &&
            hypoexp::lemma_sum(DistinctTuple(
                {Rational(1), Rational(2), Rational(3), Rational(4)})) == 1;
        record(0, "fixed small-integer lemma vectors", fixed_ok);
    }

    // Randomized sweeps; n is the tuple length (n-1 the polynomial degree).
    for (int n = 2; n <= max_n; ++n) {
        bool lemma_ok = true, schur_ok = true, eps_ok = true;
        for (int s = 0; s < seeds; ++s) {
            std::mt19937_64 rng(opts.seed + 1000003ULL * n + s);
            hypoexp::DistinctTuple xs(random_distinct(rng, n, false));
            lemma_ok = lemma_ok && hypoexp::lemma_sum(xs) == 1;
            schur_ok = schur_ok &&
                       hypoexp::alternating_poly(xs) == hypoexp::vandermonde(xs.values());
            if (n >= 3) {
                hypoexp::DistinctTuple eps(random_distinct(rng, n - 1, true));
                for (std::size_t l = 0; l + 1 < static_cast<std::size_t>(n); ++l) {
                    eps_ok = eps_ok && hypoexp::epsilon_coefficient_sum(eps, l) == 0;
                }
                eps_ok = eps_ok && hypoexp::epsilon_coefficient_sum(eps, n - 1) == 1;
            }
        }
        record(n, "lemma_sum == 1", lemma_ok);
        record(n, "alternating_poly == vandermonde", schur_ok);
        if (n >= 3) record(n, "epsilon coefficient sums", eps_ok);
    }

    if (opts.output == "json") {
        json report = {{"schema_version", kSchemaVersion},
                       {"pass", all_pass},
                       {"results", results},
                       {"inputs", {{"max_n", max_n}, {"seeds", seeds}}}};
        std::cout << report.dump() << "\n";
    }
    return all_pass ? 0 : kExitFailure;
}

int run_compare(const CommonOpts& opts) {
    hypoexp::ScaleSet scales(resolve_scales(opts));
    const std::size_t n = scales.size();

    auto stable = hypoexp::survival(scales, opts.p_tot, opts.rel_tol);
    auto mc = hypoexp::monte_carlo_tail(scales, opts.p_tot, opts.seed, opts.count);

    json report = {{"schema_version", kSchemaVersion},
                   {"closed_form", stable.value},
                   {"monte_carlo", mc.estimate},
                   {"monte_carlo_std_error", mc.std_error},
                   {"inputs", {{"scales", scales.scales()},
                               {"p_tot", opts.p_tot},
                               {"seed", opts.seed},
                               {"count", opts.count}}}};

    bool ok = std::abs(stable.value - mc.estimate) <= 4.0 * mc.std_error + 1e-12;
    report["monte_carlo_within_4_sigma"] = ok;

    if (n <= hypoexp::defaults::kQuadMaxDim) {
        auto quad = hypoexp::quadrature_survival(scales, opts.p_tot, opts.abs_tol);
        bool quad_ok = std::abs(stable.value - quad.value) <= 1e-8;
        report["quadrature"] = quad.value;
        report["quadrature_within_1e-8"] = quad_ok;
        ok = ok && quad_ok;

        // Show the naive distinct formula when the stable path avoided it,
        // to make the precision loss visible.
        auto partition = hypoexp::cluster_scales(scales, opts.rel_tol);
        if (hypoexp::dispatch_path(partition) != hypoexp::DispatchPath::distinct) {
            try {
                auto naive = hypoexp::survival_distinct(scales, opts.p_tot);
                report["naive_distinct_raw"] = naive.raw;
                report["naive_distinct_error"] = std::abs(naive.raw - quad.value);
            } catch (const hypoexp::DuplicateScales&) {
                // exactly equal scales: the naive formula does not apply
            }
        }
    } else {
        report["quadrature"] = nullptr;
    }

    emit(report, opts.output);
    return ok ? 0 : kExitFailure;
}

int run_sample(const CommonOpts& opts) {
    hypoexp::ScaleSet scales(resolve_scales(opts));
    if (opts.count == 0) {
        throw std::invalid_argument("count: must be at least 1");
    }
    auto draws = hypoexp::sample_sum(scales, opts.seed, opts.count);
    if (opts.output == "json") {
        std::cout << json(draws).dump() << "\n";
    } else {
        std::cout << std::setprecision(17);
        for (double d : draws) std::cout << d << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tail probability of a sum of exponentially distributed variables"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool show_raw = false;
    double erlang_scale = 1.0;
    std::size_t erlang_n = 1;
    std::size_t bins = 1;
    double power = 0.0;
    int max_n = hypoexp::defaults::kVerifyMaxN;
    int seeds = hypoexp::defaults::kVerifySeeds;

    auto add_common = [&](CLI::App* cmd, bool with_scales) {
        cmd->add_option("--output", opts.output, "Output format: human|json")
            ->check(CLI::IsMember({"human", "json"}));
        if (with_scales) {
            cmd->add_option("--scales", opts.scales,
                            "Comma-separated expected values")->delimiter(',');
            cmd->add_option("--scales-file", opts.scales_file,
                            "JSON file holding an array of expected values");
        }
    };

    auto* tail = app.add_subcommand("tail", "Survival probability of the sum");
    add_common(tail, true);
    tail->add_option("--ptot", opts.p_tot, "Threshold")->required();
    tail->add_option("--rel-tol", opts.rel_tol,
                     "Relative clustering tolerance (default 1e-8)");
    tail->add_flag("--raw", show_raw, "Also report the unclamped value");

    auto* erlang = app.add_subcommand("erlang", "Erlang (all scales equal) tail");
    add_common(erlang, false);
    erlang->add_option("--scale", erlang_scale, "Common expected value")->required();
    erlang->add_option("-n,--n", erlang_n, "Number of variables")->required();
    erlang->add_option("--ptot", opts.p_tot, "Threshold")->required();

    auto* significance =
        app.add_subcommand("significance",
                           "Probability that Leahy-normalized Poisson noise reaches "
                           "the given total power over n independent bins");
    add_common(significance, false);
    significance->add_option("--bins", bins, "Number of summed bins")->required();
    significance->add_option("--power", power, "Total observed power")->required();

    auto* verify = app.add_subcommand(
        "verify", "Exact-arithmetic verification of the polynomial identities");
    add_common(verify, false);
    verify->add_option("--max-n", max_n, "Largest n to verify (2..12, default 12)");
    verify->add_option("--seeds", seeds, "Random tuples per n (default 100)");
    verify->add_option("--seed", opts.seed, "Base RNG seed");

    auto* compare = app.add_subcommand(
        "compare", "Closed form vs quadrature vs Monte Carlo side by side");
    add_common(compare, true);
    compare->add_option("--ptot", opts.p_tot, "Threshold")->required();
    compare->add_option("--rel-tol", opts.rel_tol, "Clustering tolerance");
    compare->add_option("--abs-tol", opts.abs_tol, "Quadrature tolerance (default 1e-10)");
    compare->add_option("--seed", opts.seed, "Monte Carlo seed (default 1)");
    compare->add_option("--count", opts.count, "Monte Carlo samples (default 1e6)");

    auto* sample = app.add_subcommand("sample", "Draw sums of exponential variables");
    add_common(sample, true);
    sample->add_option("--seed", opts.seed, "RNG seed (default 1)");
    sample->add_option("--count", opts.count, "Number of draws")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (tail->parsed()) return run_tail(opts, show_raw);
        if (erlang->parsed()) return run_erlang(opts, erlang_scale, erlang_n);
        if (significance->parsed()) return run_significance(opts, bins, power);
        if (verify->parsed()) return run_verify(opts, max_n, seeds);
        if (compare->parsed()) return run_compare(opts);
        if (sample->parsed()) return run_sample(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitValidation;
}
