#pragma once

#include "paircorr/generators.hpp"
#include "paircorr/point_set.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace paircorr {

/// (1/N) #{points <= x}, for x in [0,1].
double ecdf(const PointSet& ps, double x);

/// Exact star discrepancy max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the
/// sorted points.
double star_discrepancy(const PointSet& ps);

/// |(1/N) sum_n exp(2 pi i h x_n)| for h != 0.
double weyl_sum(const PointSet& ps, std::int64_t h);

/// (M/N^2) sum_m y_m^2 for the M-bin histogram: the integral of the squared
/// histogram density estimate. Equals H(1) / (N^2/M).
double l2_density_estimate(const PointSet& ps, std::size_t bins);

struct EstimateOptions {
    /// The estimate is flagged as diverging once it exceeds
    /// blowup_coefficient * sqrt(bins). A bounded density g never trips this
    /// for bins > (sup g / coefficient)^2; an atom of weight w grows like w^2 * bins.
    double blowup_coefficient = 2.0;
};

struct DistributionEstimate {
    std::vector<double> grid;     ///< i / grid_size, i = 0..grid_size
    std::vector<double> g_values; ///< ecdf at each grid point
    double l2_raw = 0.0;          ///< (M/N^2) sum y_m^2, always finite
    double l2_density = 0.0;      ///< l2_raw, or +infinity when flagged as diverging
    std::size_t bins_used = 0;

    bool diverging() const noexcept;
};

DistributionEstimate estimate_distribution(const PointSet& ps, std::size_t grid_size, std::size_t bins,
                                           const EstimateOptions& options = {});

/// Least-squares slope of log(l2_density_estimate) against log(bins).
double l2_growth_slope(const PointSet& ps, std::span<const std::size_t> bins_list);

/// Slope above this value is read as "the limit distribution has no square
/// integrable density".
inline constexpr double kBlowupSlope = 0.5;

bool blowup_suspected(const PointSet& ps, std::span<const std::size_t> bins_list);

/// Integral of g^2 for a piecewise-constant density, sum g_k^2 (t_{k+1} - t_k).
double density_l2_exact(const DensitySpec& spec);

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
double ks_statistic(const PointSet& a, const PointSet& b);

} // namespace paircorr
