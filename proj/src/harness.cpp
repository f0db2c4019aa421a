#include "paircorr/harness.hpp"

#include "paircorr/equidist.hpp"
#include "paircorr/io.hpp"
#include "paircorr/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <stdexcept>

namespace paircorr {

namespace {

// Evaluates fn(0..count-1), at most `threads` at a time, returning results in
// index order regardless of completion order.
template <class Fn>
auto map_ordered(std::size_t count, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out;
    out.reserve(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }
    for (std::size_t start = 0; start < count; start += threads) {
        const std::size_t stop = std::min<std::size_t>(count, start + threads);
        std::vector<std::future<R>> batch;
        for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, fn, i));
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

std::vector<double> positive_grid(std::span<const double> s_grid)
{
    std::vector<double> out;
    for (double s : s_grid)
        if (s > 0.0) out.push_back(s);
    if (out.empty()) throw std::invalid_argument("s grid must contain at least one positive value");
    return out;
}

std::vector<ResultRow> curve_rows(const PointSet& ps, std::span<const double> grid,
                                  std::optional<std::uint64_t> seed, unsigned threads)
{
    const auto curve = pair_correlation_curve(ps, grid, threads);
    std::vector<ResultRow> rows;
    rows.reserve(curve.samples.size());
    for (const auto& sample : curve.samples)
        rows.push_back({curve.n, seed, sample.s, sample.value, sample.value / (2.0 * sample.s)});
    return rows;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

// Per-s median of the ratio column across seeds, in ascending s.
std::vector<double> median_ratios(const std::vector<ResultRow>& rows)
{
    std::map<double, std::vector<double>> by_s;
    for (const auto& r : rows) by_s[r.s].push_back(r.ratio);
    std::vector<double> out;
    for (auto& [s, ratios] : by_s) out.push_back(median(std::move(ratios)));
    return out;
}

std::string join_grid(std::span<const double> grid)
{
    std::string out;
    for (double s : grid) {
        if (!out.empty()) out += ',';
        out += format_real(s);
    }
    return out;
}

template <class T>
std::string join_integers(std::span<const T> values)
{
    std::string out;
    for (auto v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

void require_seeds(std::span<const std::uint64_t> seeds)
{
    if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
}

void require_n_list(std::span<const std::size_t> n_list)
{
    if (n_list.empty()) throw std::invalid_argument("at least one N is required");
    for (auto n : n_list)
        if (n == 0) throw std::invalid_argument("every N must be >= 1");
}

} // namespace

double segregation_bound(double a, double b)
{
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("segregation_bound: a must lie in (0,1)");
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("segregation_bound: b must lie in [0,1]");
    return b * b / a + (1.0 - b) * (1.0 - b) / (1.0 - a);
}

double cluster_bound(double epsilon, std::size_t cap_s, std::size_t n)
{
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("cluster_bound: epsilon must lie in (0,1)");
    if (cap_s == 0) throw std::invalid_argument("cluster_bound: S must be >= 1");
    if (n == 0) throw std::invalid_argument("cluster_bound: n must be >= 1");
    const auto nd = static_cast<double>(n);
    const double cluster = epsilon * nd / (8.0 * static_cast<double>(cap_s));
    return cluster * cluster - nd;
}

std::vector<double> default_s_grid()
{
    return {0.5, 1.0, 2.0, 3.0, 5.0, 10.0};
}

double sup_ratio(const ExperimentReport& report, std::size_t n)
{
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : report.per_n_results)
        if (r.n == n) best = std::max(best, r.ratio);
    if (std::isinf(best)) throw std::invalid_argument("sup_ratio: no rows for the requested N");
    return best;
}

ExperimentReport run_poissonian_check(const PointSet& ps, std::span<const double> s_grid, double tolerance,
                                      const HarnessOptions& options)
{
    const auto grid = positive_grid(s_grid);
    ExperimentReport report;
    report.name = "poissonian_check";
    report.parameters = {{"n", std::to_string(ps.size())}, {"s_grid", join_grid(grid)},
                         {"tolerance", format_real(tolerance)}};
    report.per_n_results = curve_rows(ps, grid, std::nullopt, options.threads);

    auto& v = report.verdict;
    v.statistic = "F_N(s)/(2s)";
    v.reference_bound = 1.0;
    v.threshold = tolerance;
    v.max_ratio = -std::numeric_limits<double>::infinity();
    v.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& r : report.per_n_results) {
        v.max_ratio = std::max(v.max_ratio, r.ratio);
        v.min_ratio = std::min(v.min_ratio, r.ratio);
    }
    v.pass = std::max(v.max_ratio - 1.0, 1.0 - v.min_ratio) <= tolerance;
    return report;
}

ExperimentReport run_poissonian_seeds(std::size_t n, std::span<const std::uint64_t> seeds,
                                      std::span<const double> s_grid, double tolerance,
                                      const HarnessOptions& options)
{
    require_seeds(seeds);
    const auto grid = positive_grid(s_grid);
    const auto cells = map_ordered(seeds.size(), options.threads, [&](std::size_t i) {
        return curve_rows(iid_uniform(seeds[i], n), grid, seeds[i], 1);
    });

    ExperimentReport report;
    report.name = "poissonian_seeds";
    report.parameters = {{"generator", "iid_uniform"}, {"n", std::to_string(n)},
                         {"seeds", join_integers(seeds)}, {"s_grid", join_grid(grid)},
                         {"tolerance", format_real(tolerance)}};
    for (const auto& rows : cells)
        report.per_n_results.insert(report.per_n_results.end(), rows.begin(), rows.end());

    const auto medians = median_ratios(report.per_n_results);
    auto& v = report.verdict;
    v.statistic = "median over seeds of F_N(s)/(2s)";
    v.reference_bound = 1.0;
    v.threshold = tolerance;
    v.max_ratio = *std::max_element(medians.begin(), medians.end());
    v.min_ratio = *std::min_element(medians.begin(), medians.end());
    v.pass = std::max(v.max_ratio - 1.0, 1.0 - v.min_ratio) <= tolerance;
    return report;
}

ExperimentReport run_theorem1_contrapositive(double a, double b, std::span<const std::size_t> n_list,
                                             std::span<const double> s_grid, const HarnessOptions& options)
{
    if (a == b) throw std::invalid_argument("theorem1 experiment: a == b gives an equidistributed sequence");
    require_n_list(n_list);
    const double bound = segregation_bound(a, b);
    const auto grid = positive_grid(s_grid);
    const auto cells = map_ordered(n_list.size(), options.threads, [&](std::size_t i) {
        return curve_rows(two_interval_sequence(a, b, n_list[i]), grid, std::nullopt, 1);
    });

    ExperimentReport report;
    report.name = "theorem1_contrapositive";
    report.parameters = {{"generator", "two_interval_sequence"}, {"a", format_real(a)}, {"b", format_real(b)},
                         {"n_list", join_integers(n_list)}, {"s_grid", join_grid(grid)}};
    for (const auto& rows : cells)
        report.per_n_results.insert(report.per_n_results.end(), rows.begin(), rows.end());

    const std::size_t largest = *std::max_element(n_list.begin(), n_list.end());
    auto& v = report.verdict;
    v.statistic = "sup over s of F_N(s)/(2s) at the largest N";
    v.reference_bound = bound;
    v.threshold = 1.0 + 0.8 * (bound - 1.0);
    v.max_ratio = sup_ratio(report, largest);
    v.min_ratio = std::numeric_limits<double>::infinity();
    for (auto n : n_list) v.min_ratio = std::min(v.min_ratio, sup_ratio(report, n));
    v.pass = v.max_ratio >= v.threshold;
    return report;
}

ExperimentReport run_theorem2_density(const DensitySpec& spec, std::size_t n, std::span<const std::uint64_t> seeds,
                                      std::span<const double> s_grid, double relative_tolerance,
                                      const HarnessOptions& options)
{
    require_seeds(seeds);
    const auto grid = positive_grid(s_grid);
    const double l2 = density_l2_exact(spec);
    const auto cells = map_ordered(seeds.size(), options.threads, [&](std::size_t i) {
        return curve_rows(iid_density(spec, seeds[i], n), grid, seeds[i], 1);
    });

    ExperimentReport report;
    report.name = "theorem2_density";
    report.parameters = {{"generator", "iid_density"}, {"n", std::to_string(n)},
                         {"seeds", join_integers(seeds)}, {"s_grid", join_grid(grid)},
                         {"density_l2", format_real(l2)}, {"relative_tolerance", format_real(relative_tolerance)}};
    for (const auto& rows : cells)
        report.per_n_results.insert(report.per_n_results.end(), rows.begin(), rows.end());

    const auto medians = median_ratios(report.per_n_results);
    auto& v = report.verdict;
    v.statistic = "median over seeds of F_N(s)/(2s)";
    v.reference_bound = l2;
    v.threshold = relative_tolerance;
    v.max_ratio = *std::max_element(medians.begin(), medians.end());
    v.min_ratio = *std::min_element(medians.begin(), medians.end());
    v.pass = std::max(v.max_ratio - l2, l2 - v.min_ratio) <= relative_tolerance * l2;
    return report;
}

ExperimentReport run_theorem2_blowup(double atom, double weight, std::uint64_t seed,
                                     std::span<const std::size_t> n_list, double absolute_tolerance,
                                     const HarnessOptions& options)
{
    require_n_list(n_list);
    const std::vector<double> grid{1.0};
    const auto cells = map_ordered(n_list.size(), options.threads, [&](std::size_t i) {
        return curve_rows(atom_mixture(atom, weight, seed, n_list[i]), grid, seed, 1);
    });

    ExperimentReport report;
    report.name = "theorem2_blowup";
    report.parameters = {{"generator", "atom_mixture"}, {"atom", format_real(atom)}, {"weight", format_real(weight)},
                         {"seed", std::to_string(seed)}, {"n_list", join_integers(n_list)},
                         {"absolute_tolerance", format_real(absolute_tolerance)}};
    for (const auto& rows : cells)
        report.per_n_results.insert(report.per_n_results.end(), rows.begin(), rows.end());

    auto& v = report.verdict;
    v.statistic = "F_N(1)/N";
    v.reference_bound = weight * weight;
    v.threshold = absolute_tolerance;
    v.max_ratio = -std::numeric_limits<double>::infinity();
    v.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& r : report.per_n_results) {
        const double per_n = r.f_value / static_cast<double>(r.n);
        v.max_ratio = std::max(v.max_ratio, per_n);
        v.min_ratio = std::min(v.min_ratio, per_n);
    }
    v.pass = std::max(v.max_ratio - v.reference_bound, v.reference_bound - v.min_ratio) <= absolute_tolerance;
    return report;
}

} // namespace paircorr
