#include "paircorr/cli.hpp"

#include "paircorr/equidist.hpp"
#include "paircorr/generators.hpp"
#include "paircorr/harness.hpp"
#include "paircorr/io.hpp"
#include "paircorr/pair_correlation.hpp"
#include "paircorr/report.hpp"
#include "paircorr/spectral.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paircorr::cli {

namespace {

// Everything a single invocation can ask for. Fields unused by the chosen
// subcommand keep their defaults.
struct RunConfig {
    // generate
    std::string kind;
    std::string alpha = "golden";
    std::size_t n = 0;
    std::uint64_t seed = 0;
    unsigned base = 2;
    std::vector<std::uint64_t> multipliers;
    std::vector<double> breakpoints;
    std::vector<double> heights;
    double atom = 0.3;
    double weight = 0.5;
    double a = 0.5;
    double b = 0.75;

    // analysis inputs
    std::string input;
    std::vector<double> s_values;
    std::vector<std::int64_t> weyl_h{1, 2, 3};
    std::vector<std::size_t> bins_list{10, 100, 1000};
    std::size_t grid = 10;
    std::size_t bins = 0;
    std::size_t order = 0;
    std::size_t cap_s = 0;
    std::string spectrum_kind = "dirichlet";
    std::vector<std::uint64_t> counts;

    // experiment
    std::string experiment;
    std::vector<std::size_t> n_list;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t experiment_n = 100000;
    std::string experiment_format = "json";

    std::string format = "csv";
    std::string output;
    unsigned threads = 1;
};

void validate(bool ok, const std::string& constraint)
{
    if (!ok) throw std::invalid_argument("constraint violated: " + constraint);
}

void validate_grid(const std::vector<double>& grid)
{
    validate(!grid.empty(), "at least one s value");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        validate(std::isfinite(grid[i]) && grid[i] >= 0.0, "s >= 0");
        if (i > 0) validate(grid[i] > grid[i - 1], "s values strictly ascending");
    }
}

std::string cmd_generate(const RunConfig& cfg)
{
    const auto needs_n = [&] { validate(cfg.n >= 1, "--n >= 1"); };
    PointSet ps({0.0});
    if (cfg.kind == "kronecker") {
        needs_n();
        ps = kronecker(parse_alpha(cfg.alpha), cfg.n);
    } else if (cfg.kind == "quadratic") {
        needs_n();
        ps = quadratic_weyl(parse_alpha(cfg.alpha), cfg.n);
    } else if (cfg.kind == "weyl") {
        validate(!cfg.multipliers.empty(), "--multipliers required for kind weyl");
        ps = general_weyl(cfg.multipliers, parse_alpha(cfg.alpha));
    } else if (cfg.kind == "vdc") {
        needs_n();
        validate(cfg.base >= 2, "--base >= 2");
        ps = van_der_corput(cfg.base, cfg.n);
    } else if (cfg.kind == "uniform") {
        needs_n();
        ps = iid_uniform(cfg.seed, cfg.n);
    } else if (cfg.kind == "density") {
        needs_n();
        validate(!cfg.heights.empty(), "--breakpoints and --heights required for kind density");
        ps = iid_density(DensitySpec(cfg.breakpoints, cfg.heights), cfg.seed, cfg.n);
    } else if (cfg.kind == "atom") {
        needs_n();
        ps = atom_mixture(cfg.atom, cfg.weight, cfg.seed, cfg.n);
    } else if (cfg.kind == "two-interval") {
        needs_n();
        ps = two_interval_sequence(cfg.a, cfg.b, cfg.n);
    } else {
        throw std::invalid_argument("unknown generator kind '" + cfg.kind + "'");
    }
    std::ostringstream os;
    write_points(os, ps);
    return os.str();
}

std::string cmd_paircorr(const RunConfig& cfg)
{
    validate_grid(cfg.s_values);
    const auto ps = load_points(cfg.input);
    const auto curve = pair_correlation_curve(ps, cfg.s_values, cfg.threads);
    return cfg.format == "json" ? dump(to_json(curve)) : to_csv(curve);
}

std::string cmd_analyze(const RunConfig& cfg)
{
    validate(cfg.grid >= 1, "--grid >= 1");
    for (auto h : cfg.weyl_h) validate(h != 0, "Weyl frequency h != 0");
    for (auto b : cfg.bins_list) validate(b >= 1, "--bins >= 1");
    const auto ps = load_points(cfg.input);

    Json j;
    j["n"] = ps.size();
    j["star_discrepancy"] = star_discrepancy(ps);
    Json weyl = Json::array();
    for (auto h : cfg.weyl_h) weyl.push_back({{"h", h}, {"value", weyl_sum(ps, h)}});
    j["weyl"] = std::move(weyl);

    Json l2 = Json::array();
    DistributionEstimate last;
    for (auto b : cfg.bins_list) {
        last = estimate_distribution(ps, cfg.grid, b);
        l2.push_back({{"bins", b}, {"value", last.l2_raw}, {"diverging", last.diverging()}});
    }
    j["l2_density"] = std::move(l2);

    if (cfg.bins_list.empty()) last = estimate_distribution(ps, cfg.grid, 1);
    Json cdf = Json::array();
    for (std::size_t i = 0; i < last.grid.size(); ++i) cdf.push_back({{"x", last.grid[i]}, {"g", last.g_values[i]}});
    j["ecdf"] = std::move(cdf);
    return dump(j);
}

std::string cmd_spectrum(const RunConfig& cfg)
{
    validate(cfg.bins >= 1, "--bins >= 1");
    if (cfg.spectrum_kind == "fejer") {
        validate(cfg.cap_s >= 1, "--cap-s >= 1");
        validate(2 * cfg.cap_s < cfg.bins, "2S < M");
        return to_csv(fejer_spectrum(cfg.bins, cfg.cap_s));
    }
    validate(cfg.order >= 1, "--s >= 1");
    validate(2 * cfg.order - 1 <= cfg.bins, "2s - 1 <= M");
    return to_csv(dirichlet_spectrum(cfg.bins, cfg.order));
}

std::string cmd_lemma1(const RunConfig& cfg)
{
    validate(cfg.cap_s >= 1, "--cap-s >= 1");
    validate(cfg.input.empty() != cfg.counts.empty(), "exactly one of --in or --counts");
    BinnedCounts bc;
    if (!cfg.counts.empty()) {
        validate(2 * cfg.cap_s < cfg.counts.size(), "2S < M");
        bc = BinnedCounts::from_counts(cfg.counts);
    } else {
        validate(cfg.bins >= 1, "--bins >= 1");
        validate(2 * cfg.cap_s < cfg.bins, "2S < M");
        bc = bin_counts(load_points(cfg.input), cfg.bins);
    }
    const double lhs = lemma1_average(bc, cfg.cap_s);
    const double bound = lemma1_bound(bc, cfg.cap_s);
    return "M,S,lhs,bound,slack\n" + std::to_string(bc.m) + ',' + std::to_string(cfg.cap_s) + ',' +
           format_real(lhs) + ',' + format_real(bound) + ',' + format_real(lhs - bound) + '\n';
}

std::string cmd_experiment(const RunConfig& cfg)
{
    const HarnessOptions options{cfg.threads};
    const bool custom_grid = !cfg.s_values.empty();
    if (custom_grid) validate_grid(cfg.s_values);
    for (auto n : cfg.n_list) validate(n >= 1, "every --n-list entry >= 1");

    ExperimentReport report;
    if (cfg.experiment == "poissonian") {
        const auto grid = custom_grid ? cfg.s_values : std::vector<double>{0.5, 1.0, 2.0, 5.0};
        if (!cfg.input.empty()) {
            report = run_poissonian_check(load_points(cfg.input), grid, 0.05, options);
        } else {
            validate(cfg.experiment_n >= 1, "--n >= 1");
            validate(!cfg.seeds.empty(), "at least one seed");
            report = run_poissonian_seeds(cfg.experiment_n, cfg.seeds, grid, 0.05, options);
        }
    } else if (cfg.experiment == "theorem1") {
        validate(cfg.a > 0.0 && cfg.a < 1.0, "0 < a < 1");
        validate(cfg.b > 0.0 && cfg.b < 1.0, "0 < b < 1");
        validate(cfg.a != cfg.b, "a != b");
        const auto n_list = cfg.n_list.empty() ? std::vector<std::size_t>{1000, 10000, 100000} : cfg.n_list;
        report = run_theorem1_contrapositive(cfg.a, cfg.b, n_list, custom_grid ? cfg.s_values : default_s_grid(),
                                             options);
    } else if (cfg.experiment == "theorem2") {
        validate(cfg.experiment_n >= 1, "--n >= 1");
        validate(!cfg.seeds.empty(), "at least one seed");
        const auto spec = cfg.heights.empty() ? DensitySpec({0.0, 0.5, 1.0}, {2.0, 0.0})
                                              : DensitySpec(cfg.breakpoints, cfg.heights);
        const auto grid = custom_grid ? cfg.s_values : std::vector<double>{1.0, 2.0, 3.0};
        report = run_theorem2_density(spec, cfg.experiment_n, cfg.seeds, grid, 0.1, options);
    } else if (cfg.experiment == "blowup") {
        validate(cfg.atom >= 0.0 && cfg.atom < 1.0, "0 <= atom < 1");
        validate(cfg.weight > 0.0 && cfg.weight < 1.0, "0 < weight < 1");
        const auto n_list = cfg.n_list.empty() ? std::vector<std::size_t>{1000, 10000, 100000} : cfg.n_list;
        report = run_theorem2_blowup(cfg.atom, cfg.weight, cfg.seed, n_list, 0.05, options);
    } else {
        throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
    }
    return cfg.experiment_format == "csv" ? to_csv(report) : dump(to_json(report));
}

} // namespace

double parse_alpha(std::string_view text)
{
    if (text == "golden") return constants::golden;
    if (text == "sqrt2") return constants::sqrt2;
    if (text == "e") return constants::e;
    if (text == "pi") return constants::pi;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw std::invalid_argument("alpha must be golden, sqrt2, e, pi or a decimal number, got '" +
                                    std::string(text) + "'");
    return v;
}

std::optional<unsigned> threads_from_env(const char* value)
{
    if (value == nullptr) return std::nullopt;
    const std::string_view text(value);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
        throw std::invalid_argument("PAIRCORR_THREADS must be a positive integer, got '" + std::string(text) + "'");
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Pair-correlation statistics and equidistribution diagnostics for sequences in [0,1)", "paircorr"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write a point set, one value per line");
    gen->add_option("--kind", cfg.kind, "kronecker|quadratic|weyl|vdc|uniform|density|atom|two-interval")
        ->required()
        ->check(CLI::IsMember({"kronecker", "quadratic", "weyl", "vdc", "uniform", "density", "atom", "two-interval"}));
    gen->add_option("--alpha", cfg.alpha, "golden, sqrt2, e, pi or a decimal");
    gen->add_option("--n", cfg.n, "Number of points");
    gen->add_option("--seed", cfg.seed, "Seed for random kinds");
    gen->add_option("--base", cfg.base, "van der Corput base");
    gen->add_option("--multipliers", cfg.multipliers, "Distinct positive integers for kind weyl")->delimiter(',');
    gen->add_option("--breakpoints", cfg.breakpoints, "Density breakpoints 0=t0<...<tK=1")->delimiter(',');
    gen->add_option("--heights", cfg.heights, "Density heights, one per piece")->delimiter(',');
    gen->add_option("--atom", cfg.atom, "Atom location for kind atom");
    gen->add_option("--weight", cfg.weight, "Atom weight for kind atom");
    gen->add_option("--a", cfg.a, "Interval split point for kind two-interval");
    gen->add_option("--b", cfg.b, "Mass on [0,a) for kind two-interval");
    gen->add_option("--out", cfg.output, "Output file (default stdout)");

    auto* pc = app.add_subcommand("paircorr", "Evaluate F_N(s) on a grid of s values");
    pc->add_option("--in", cfg.input, "Point file")->required();
    pc->add_option("--s", cfg.s_values, "Ascending s values")->required()->delimiter(',');
    pc->add_option("--format", cfg.format, "Output format, default csv")->check(CLI::IsMember({"csv", "json"}));
    pc->add_option("--out", cfg.output, "Output file (default stdout)");

    auto* an = app.add_subcommand("analyze", "Equidistribution diagnostics as JSON");
    an->add_option("--in", cfg.input, "Point file")->required();
    an->add_option("--weyl-h", cfg.weyl_h, "Weyl frequencies h != 0")->delimiter(',');
    an->add_option("--bins", cfg.bins_list, "Histogram bin counts for the l2 density estimate")->delimiter(',');
    an->add_option("--grid", cfg.grid, "ECDF grid size");
    an->add_option("--out", cfg.output, "Output file (default stdout)");

    auto* sp = app.add_subcommand("spectrum", "Eigenvalues of the band circulant or its Fejer average");
    sp->add_option("--bins", cfg.bins, "Matrix size M")->required();
    sp->add_option("--kind", cfg.spectrum_kind, "Kernel, default dirichlet")->check(CLI::IsMember({"dirichlet", "fejer"}));
    sp->add_option("--s", cfg.order, "Band order s (dirichlet)");
    sp->add_option("--cap-s", cfg.cap_s, "Averaging order S (fejer)");
    sp->add_option("--out", cfg.output, "Output file (default stdout)");

    auto* lm = app.add_subcommand("lemma1", "Averaged quadratic form against S N^2 / M");
    lm->add_option("--in", cfg.input, "Point file to bin");
    lm->add_option("--counts", cfg.counts, "Explicit bin counts instead of a point file")->delimiter(',');
    lm->add_option("--bins", cfg.bins, "Number of bins M (with --in)");
    lm->add_option("--cap-s", cfg.cap_s, "Averaging order S")->required();
    lm->add_option("--out", cfg.output, "Output file (default stdout)");

    auto* ex = app.add_subcommand("experiment", "Run a pair-correlation experiment");
    ex->add_option("--name", cfg.experiment, "poissonian|theorem1|theorem2|blowup")
        ->required()
        ->check(CLI::IsMember({"poissonian", "theorem1", "theorem2", "blowup"}));
    ex->add_option("--in", cfg.input, "Point file (poissonian only)");
    ex->add_option("--n", cfg.experiment_n, "Number of points");
    ex->add_option("--n-list", cfg.n_list, "Point counts")->delimiter(',');
    ex->add_option("--seeds", cfg.seeds, "Seeds")->delimiter(',');
    ex->add_option("--seed", cfg.seed, "Seed (blowup)");
    ex->add_option("--s-grid", cfg.s_values, "Ascending s values")->delimiter(',');
    ex->add_option("--a", cfg.a, "Interval split point (theorem1)");
    ex->add_option("--b", cfg.b, "Mass on [0,a) (theorem1)");
    ex->add_option("--breakpoints", cfg.breakpoints, "Density breakpoints (theorem2)")->delimiter(',');
    ex->add_option("--heights", cfg.heights, "Density heights (theorem2)")->delimiter(',');
    ex->add_option("--atom", cfg.atom, "Atom location (blowup)");
    ex->add_option("--weight", cfg.weight, "Atom weight (blowup)");
    ex->add_option("--format", cfg.experiment_format, "Output format, default json")->check(CLI::IsMember({"csv", "json"}));
    ex->add_option("--out", cfg.output, "Output file (default stdout)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("paircorr");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kExitUsage;
    }

    try {
        if (auto env = threads_from_env(std::getenv("PAIRCORR_THREADS"))) cfg.threads = *env;

        std::string result;
        if (*gen) result = cmd_generate(cfg);
        else if (*pc) result = cmd_paircorr(cfg);
        else if (*an) result = cmd_analyze(cfg);
        else if (*sp) result = cmd_spectrum(cfg);
        else if (*lm) result = cmd_lemma1(cfg);
        else result = cmd_experiment(cfg);

        if (cfg.output.empty()) out << result;
        else write_file_atomic(cfg.output, result);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "paircorr: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "paircorr: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace paircorr::cli
