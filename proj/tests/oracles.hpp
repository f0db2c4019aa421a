#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the routine it is checking.

#include "paircorr/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace paircorr::oracle {

using Matrix = std::vector<std::vector<double>>;

/// Circulant matrix whose row r is `first_row` shifted right by r.
inline Matrix circulant(std::span<const double> first_row)
{
    const std::size_t m = first_row.size();
    Matrix a(m, std::vector<double>(m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a[r][c] = first_row[(c + m - r) % m];
    return a;
}

/// A^{(s)} from its definition: 1 where the periodic distance of i - j is at most s - 1.
inline Matrix band_matrix(std::size_t m, std::size_t s)
{
    Matrix a(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t d = i > j ? i - j : j - i;
            if (std::min(d, m - d) + 1 <= s) a[i][j] = 1.0;
        }
    }
    return a;
}

/// Fourier vector v_m = (1, w^m, w^{2m}, ...), w = exp(2 pi i / M).
inline std::vector<std::complex<double>> fourier_vector(std::size_t m_bins, std::size_t m)
{
    std::vector<std::complex<double>> v(m_bins);
    for (std::size_t k = 0; k < m_bins; ++k) v[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((k * m) % m_bins) / static_cast<double>(m_bins));
    return v;
}

/// max_k |(A v)_k - lambda v_k| for v = v_m.
inline double eigen_residual(const Matrix& a, std::size_t m, std::complex<double> lambda)
{
    const std::size_t n = a.size();
    const auto v = fourier_vector(n, m);
    double worst = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        std::complex<double> av{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) av += a[r][c] * v[c];
        worst = std::max(worst, std::abs(av - lambda * v[r]));
    }
    return worst;
}

/// Direct double sum of the cyclic band quadratic form.
inline double quadratic_form(std::span<const std::uint64_t> y, std::size_t s)
{
    const auto m = static_cast<std::ptrdiff_t>(y.size());
    const auto reach = static_cast<std::ptrdiff_t>(s) - 1;
    double total = 0.0;
    for (std::ptrdiff_t i = 0; i < m; ++i)
        for (std::ptrdiff_t l = -reach; l <= reach; ++l)
            total += static_cast<double>(y[static_cast<std::size_t>(i)]) *
                     static_cast<double>(y[static_cast<std::size_t>(((i + l) % m + m) % m)]);
    return total;
}

/// Star discrepancy as a sup over the candidate anchors x = each point value:
/// #{<= x}/N - x and x - #{< x}/N, counting by direct scans. O(N^2).
inline double star_discrepancy_brute(const PointSet& ps)
{
    const auto n = static_cast<double>(ps.size());
    double d = 0.0;
    for (double x : ps) {
        std::size_t le = 0, lt = 0;
        for (double p : ps) {
            le += p <= x;
            lt += p < x;
        }
        d = std::max({d, static_cast<double>(le) / n - x, x - static_cast<double>(lt) / n});
    }
    return d;
}

} // namespace paircorr::oracle
