#include "paircorr/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace paircorr {

namespace {

void require_valid_s(double s)
{
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("pair count: s must be finite and >= 0");
}

std::uint64_t all_ordered_pairs(std::size_t n)
{
    const auto nn = static_cast<std::uint64_t>(n);
    return nn * nn - nn;
}

// Below this many points a single thread always wins.
constexpr std::size_t kMinPointsPerThread = 1u << 15;

} // namespace

double pair_threshold(double s, std::size_t n)
{
    return s / static_cast<double>(n);
}

std::uint64_t pair_count_naive(const PointSet& ps, double s)
{
    require_valid_s(s);
    const std::size_t n = ps.size();
    const double t = pair_threshold(s, n);
    std::uint64_t unordered = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (torus_distance(ps[i], ps[j]) <= t) ++unordered;
        }
    }
    return 2 * unordered;
}

SortedPairCounter::SortedPairCounter(const PointSet& ps) : sorted_(ps.sorted()) {}

std::uint64_t SortedPairCounter::count_direct(double t, std::size_t begin, std::size_t end) const
{
    const auto& x = sorted_;
    const std::size_t n = x.size();
    // e = one past the last j with x[j] - x[i] <= t; nondecreasing in i.
    auto first = x.begin() + static_cast<std::ptrdiff_t>(std::min(begin + 1, n));
    std::size_t e = static_cast<std::size_t>(
        std::partition_point(first, x.end(), [&](double v) { return v - x[begin] <= t; }) - x.begin());
    std::uint64_t total = 0;
    for (std::size_t i = begin; i < end; ++i) {
        e = std::max(e, i + 1);
        while (e < n && x[e] - x[i] <= t) ++e;
        total += e - i - 1;
    }
    return total;
}

std::uint64_t SortedPairCounter::count_wrapping(double t, std::size_t begin, std::size_t end) const
{
    const auto& x = sorted_;
    // w = number of i < j with 1 - (x[j] - x[i]) <= t; a prefix of [0, j), nondecreasing in j.
    const double xb = x[begin];
    std::size_t w = static_cast<std::size_t>(
        std::partition_point(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(begin),
                             [&](double v) { return 1.0 - (xb - v) <= t; }) -
        x.begin());
    std::uint64_t total = 0;
    for (std::size_t j = begin; j < end; ++j) {
        while (w < j && 1.0 - (x[j] - x[w]) <= t) ++w;
        total += w;
    }
    return total;
}

std::uint64_t SortedPairCounter::count(double s, unsigned threads) const
{
    require_valid_s(s);
    const std::size_t n = sorted_.size();
    const double t = pair_threshold(s, n);
    if (t >= 0.5) return all_ordered_pairs(n);

    const std::size_t parts =
        std::clamp<std::size_t>(std::min<std::size_t>(threads, n / kMinPointsPerThread), 1, 64);
    if (parts == 1) return 2 * (count_direct(t, 0, n) + count_wrapping(t, 0, n));

    std::vector<std::uint64_t> partial(parts, 0);
    std::vector<std::jthread> workers;
    workers.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t lo = n * p / parts;
        const std::size_t hi = n * (p + 1) / parts;
        workers.emplace_back([&, p, lo, hi] { partial[p] = count_direct(t, lo, hi) + count_wrapping(t, lo, hi); });
    }
    workers.clear();
    std::uint64_t unordered = 0;
    for (auto v : partial) unordered += v;
    return 2 * unordered;
}

std::uint64_t pair_count_fast(const PointSet& ps, double s, unsigned threads)
{
    require_valid_s(s);
    if (pair_threshold(s, ps.size()) >= 0.5) return all_ordered_pairs(ps.size());
    return SortedPairCounter(ps).count(s, threads);
}

double pair_correlation_value(const PointSet& ps, double s, unsigned threads)
{
    return static_cast<double>(pair_count_fast(ps, s, threads)) / static_cast<double>(ps.size());
}

PairCorrelationCurve pair_correlation_curve(const PointSet& ps, std::span<const double> s_grid, unsigned threads)
{
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        require_valid_s(s_grid[i]);
        if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
            throw std::invalid_argument("pair_correlation_curve: s grid must be strictly ascending");
    }
    PairCorrelationCurve curve;
    curve.n = ps.size();
    if (s_grid.empty()) return curve;

    const SortedPairCounter counter(ps);
    const auto n = static_cast<double>(ps.size());
    curve.samples.reserve(s_grid.size());
    for (double s : s_grid) {
        const std::uint64_t c = counter.count(s, threads);
        curve.samples.push_back({s, c, static_cast<double>(c) / n});
    }
    return curve;
}

} // namespace paircorr
