#pragma once

#include "paircorr/point_set.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace paircorr {

/// Torus radius s/N used by every pair counter. All counting routines go
/// through this so that ties at exactly s/N resolve identically.
double pair_threshold(double s, std::size_t n);

/// Ordered pairs (m, n), m != n, with torus distance <= s/N. O(N^2) reference.
std::uint64_t pair_count_naive(const PointSet& ps, double s);

/// Same value as pair_count_naive, in O(N log N) via a sorted sweep.
/// `threads` > 1 splits the sweep; the result does not depend on it.
std::uint64_t pair_count_fast(const PointSet& ps, double s, unsigned threads = 1);

/// F_N(s) = (1/N) * pair_count(ps, s).
double pair_correlation_value(const PointSet& ps, double s, unsigned threads = 1);

struct CurveSample {
    double s = 0.0;
    std::uint64_t pair_count = 0;
    double value = 0.0;
};

struct PairCorrelationCurve {
    std::size_t n = 0;
    std::vector<CurveSample> samples;
};

/// F_N over an ascending grid, sorting the points once.
PairCorrelationCurve pair_correlation_curve(const PointSet& ps, std::span<const double> s_grid,
                                            unsigned threads = 1);

/// Sorted snapshot of a point set that answers repeated pair-count queries.
///
/// Each unordered pair {a < b} (in sorted order) is either "direct"
/// (x_b - x_a <= t) or "wrapping" (1 - (x_b - x_a) <= t); for t < 1/2 the two
/// cases are disjoint and each forms a monotone window, so two linear sweeps
/// count them. The differences are computed exactly as torus_distance does.
class SortedPairCounter {
public:
    explicit SortedPairCounter(const PointSet& ps);

    std::size_t size() const noexcept { return sorted_.size(); }
    std::uint64_t count(double s, unsigned threads = 1) const;

private:
    std::uint64_t count_direct(double t, std::size_t begin, std::size_t end) const;
    std::uint64_t count_wrapping(double t, std::size_t begin, std::size_t end) const;

    std::vector<double> sorted_;
};

} // namespace paircorr
