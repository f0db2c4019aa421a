#include "paircorr/equidist.hpp"

#include "paircorr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace paircorr {

double ecdf(const PointSet& ps, double x)
{
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("ecdf: x must lie in [0,1]");
    const auto below = std::count_if(ps.begin(), ps.end(), [x](double p) { return p <= x; });
    return static_cast<double>(below) / static_cast<double>(ps.size());
}

double star_discrepancy(const PointSet& ps)
{
    const auto x = ps.sorted();
    const auto n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const double xi = x[i - 1];
        d = std::max({d, static_cast<double>(i) / n - xi, xi - static_cast<double>(i - 1) / n});
    }
    return d;
}

double weyl_sum(const PointSet& ps, std::int64_t h)
{
    if (h == 0) throw std::invalid_argument("weyl_sum: frequency h must be nonzero");
    // |S(-h)| = |S(h)|, so only the magnitude of h matters.
    const std::uint64_t freq = h < 0 ? static_cast<std::uint64_t>(-(h + 1)) + 1 : static_cast<std::uint64_t>(h);
    double re = 0.0;
    double im = 0.0;
    for (double p : ps) {
        const double angle = 2.0 * std::numbers::pi * fractional_product(freq, p);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    return std::hypot(re, im) / static_cast<double>(ps.size());
}

double l2_density_estimate(const PointSet& ps, std::size_t bins)
{
    const auto bc = bin_counts(ps, bins);
    std::uint64_t sum_sq = 0;
    for (auto y : bc.counts) sum_sq += y * y;
    const auto n = static_cast<double>(bc.n);
    return static_cast<double>(sum_sq) * static_cast<double>(bins) / (n * n);
}

bool DistributionEstimate::diverging() const noexcept
{
    return std::isinf(l2_density);
}

DistributionEstimate estimate_distribution(const PointSet& ps, std::size_t grid_size, std::size_t bins,
                                           const EstimateOptions& options)
{
    if (grid_size == 0) throw std::invalid_argument("estimate_distribution: grid_size must be >= 1");
    if (bins == 0) throw std::invalid_argument("estimate_distribution: bins must be >= 1");

    DistributionEstimate est;
    est.bins_used = bins;
    const auto sorted = ps.sorted();
    const auto n = static_cast<double>(sorted.size());
    est.grid.reserve(grid_size + 1);
    est.g_values.reserve(grid_size + 1);
    for (std::size_t i = 0; i <= grid_size; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid_size);
        const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        est.grid.push_back(x);
        est.g_values.push_back(static_cast<double>(count) / n);
    }

    est.l2_raw = l2_density_estimate(ps, bins);
    const double threshold = options.blowup_coefficient * std::sqrt(static_cast<double>(bins));
    est.l2_density = est.l2_raw > threshold ? std::numeric_limits<double>::infinity() : est.l2_raw;
    return est;
}

double l2_growth_slope(const PointSet& ps, std::span<const std::size_t> bins_list)
{
    if (bins_list.size() < 2) throw std::invalid_argument("l2_growth_slope: need at least two bin counts");
    const auto k = static_cast<double>(bins_list.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (auto b : bins_list) {
        if (b == 0) throw std::invalid_argument("l2_growth_slope: bin counts must be >= 1");
        const double lx = std::log(static_cast<double>(b));
        const double ly = std::log(l2_density_estimate(ps, b));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = k * sxx - sx * sx;
    if (denom <= 0.0) throw std::invalid_argument("l2_growth_slope: bin counts must not all be equal");
    return (k * sxy - sx * sy) / denom;
}

bool blowup_suspected(const PointSet& ps, std::span<const std::size_t> bins_list)
{
    return l2_growth_slope(ps, bins_list) > kBlowupSlope;
}

double density_l2_exact(const DensitySpec& spec)
{
    const auto t = spec.breakpoints();
    const auto g = spec.heights();
    double total = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) total += g[k] * g[k] * (t[k + 1] - t[k]);
    return total;
}

double ks_statistic(const PointSet& a, const PointSet& b)
{
    const auto xa = a.sorted();
    const auto xb = b.sorted();
    const auto na = static_cast<double>(xa.size());
    const auto nb = static_cast<double>(xb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < xa.size() && j < xb.size()) {
        const double v = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] == v) ++i;
        while (j < xb.size() && xb[j] == v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

} // namespace paircorr
