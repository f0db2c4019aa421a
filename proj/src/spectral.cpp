#include "paircorr/spectral.hpp"

#include "paircorr/pair_correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace paircorr {

namespace {

void require_bins(std::size_t m_bins)
{
    if (m_bins == 0) throw std::invalid_argument("number of bins M must be >= 1");
}

void require_window(std::size_t m_bins, std::size_t s)
{
    if (s == 0) throw std::invalid_argument("window order s must be >= 1");
    if (2 * s - 1 > m_bins) {
        throw std::invalid_argument("window wraps onto itself: 2s-1 = " + std::to_string(2 * s - 1) +
                                    " exceeds M = " + std::to_string(m_bins));
    }
}

void require_fejer(std::size_t m_bins, std::size_t cap_s)
{
    if (cap_s == 0) throw std::invalid_argument("S must be >= 1");
    if (2 * cap_s >= m_bins) {
        throw std::invalid_argument("requires 2S < M, got S = " + std::to_string(cap_s) +
                                    ", M = " + std::to_string(m_bins));
    }
}

void require_frequency(std::size_t m_bins, std::size_t m)
{
    require_bins(m_bins);
    if (m >= m_bins) throw std::invalid_argument("frequency index m must lie in [0, M)");
}

// exp(2 pi i j / period) with j reduced first, so large products keep full accuracy.
std::complex<double> unit_root(std::uint64_t j, std::uint64_t period)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j % period) / static_cast<double>(period);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

BinnedCounts BinnedCounts::from_counts(std::vector<std::uint64_t> counts)
{
    if (counts.empty()) throw std::invalid_argument("BinnedCounts: at least one bin is required");
    BinnedCounts bc;
    bc.m = counts.size();
    for (auto c : counts) bc.n += c;
    bc.counts = std::move(counts);
    return bc;
}

std::size_t bin_index(double x, std::size_t m)
{
    const auto md = static_cast<double>(m);
    const double p = x * md;
    const double err = std::fma(x, md, -p);
    double k = std::floor(p);
    if (p == k && err < 0.0) k -= 1.0;
    if (k < 0.0) return 0;
    return std::min(static_cast<std::size_t>(k), m - 1);
}

BinnedCounts bin_counts(const PointSet& ps, std::size_t m)
{
    require_bins(m);
    BinnedCounts bc;
    bc.m = m;
    bc.counts.assign(m, 0);
    for (double p : ps) ++bc.counts[bin_index(p, m)];
    bc.n = ps.size();
    return bc;
}

std::uint64_t quadratic_form_h_exact(const BinnedCounts& bc, std::size_t s)
{
    require_bins(bc.m);
    require_window(bc.m, s);
    const auto reach = static_cast<std::ptrdiff_t>(s) - 1;
    // Sliding cyclic window W_k = sum_{|l| <= s-1} y_{k+l}.
    std::uint64_t window = 0;
    for (std::ptrdiff_t l = -reach; l <= reach; ++l) window += bc[l];
    std::uint64_t total = 0;
    const auto m = static_cast<std::ptrdiff_t>(bc.m);
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        total += bc[k] * window;
        window += bc[k + reach + 1];
        window -= bc[k - reach];
    }
    return total;
}

double quadratic_form_h(const BinnedCounts& bc, std::size_t s)
{
    return static_cast<double>(quadratic_form_h_exact(bc, s));
}

std::vector<std::complex<double>> dft(std::span<const double> values)
{
    const std::size_t m = values.size();
    std::vector<std::complex<double>> out(m);
    for (std::size_t f = 0; f < m; ++f) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < m; ++k) acc += values[k] * std::conj(unit_root(std::uint64_t{k} * f, m));
        out[f] = acc;
    }
    return out;
}

double quadratic_form_h_spectral(const BinnedCounts& bc, std::size_t s)
{
    require_bins(bc.m);
    require_window(bc.m, s);
    std::vector<double> y(bc.counts.begin(), bc.counts.end());
    const auto coeffs = dft(y);
    double total = 0.0;
    for (std::size_t f = 0; f < bc.m; ++f) total += dirichlet_eigenvalue(bc.m, s, f) * std::norm(coeffs[f]);
    return total / static_cast<double>(bc.m);
}

std::vector<double> band_circulant_row(std::size_t m_bins, std::size_t s)
{
    require_bins(m_bins);
    require_window(m_bins, s);
    std::vector<double> row(m_bins, 0.0);
    for (std::size_t l = 0; l < m_bins; ++l) {
        if (std::min(l, m_bins - l) <= s - 1) row[l] = 1.0;
    }
    return row;
}

double dirichlet_eigenvalue(std::size_t m_bins, std::size_t s, std::size_t m)
{
    require_frequency(m_bins, m);
    if (s == 0) throw std::invalid_argument("window order s must be >= 1");
    if (m == 0) return static_cast<double>(2 * s - 1);
    // sin(pi j / M) with j reduced mod 2M keeps the argument small.
    const std::uint64_t period = 2 * std::uint64_t{m_bins};
    const auto sin_pi = [&](std::uint64_t j) {
        return std::sin(std::numbers::pi * static_cast<double>(j % period) / static_cast<double>(m_bins));
    };
    return sin_pi((2 * std::uint64_t{s} - 1) * m) / sin_pi(m);
}

double dirichlet_eigenvalue_sum(std::size_t m_bins, std::size_t s, std::size_t m)
{
    require_frequency(m_bins, m);
    if (s == 0) throw std::invalid_argument("window order s must be >= 1");
    double total = 1.0;
    for (std::size_t l = 1; l < s; ++l) total += 2.0 * unit_root(std::uint64_t{m} * l, m_bins).real();
    return total;
}

std::vector<double> fejer_eigenvalue_prefix(std::size_t m_bins, std::size_t max_cap_s, std::size_t m)
{
    require_frequency(m_bins, m);
    require_fejer(m_bins, max_cap_s);
    std::vector<double> out(max_cap_s);
    double running = 0.0;
    for (std::size_t s = 1; s <= max_cap_s; ++s) {
        running += dirichlet_eigenvalue(m_bins, s, m);
        out[s - 1] = running / static_cast<double>(s);
    }
    return out;
}

double fejer_eigenvalue(std::size_t m_bins, std::size_t cap_s, std::size_t m)
{
    return fejer_eigenvalue_prefix(m_bins, cap_s, m).back();
}

SpectralReport dirichlet_spectrum(std::size_t m_bins, std::size_t s)
{
    require_bins(m_bins);
    require_window(m_bins, s);
    SpectralReport r{m_bins, s, KernelKind::dirichlet, {}};
    r.eigenvalues.reserve(m_bins);
    for (std::size_t f = 0; f < m_bins; ++f) r.eigenvalues.push_back(dirichlet_eigenvalue(m_bins, s, f));
    return r;
}

SpectralReport fejer_spectrum(std::size_t m_bins, std::size_t cap_s)
{
    require_bins(m_bins);
    require_fejer(m_bins, cap_s);
    SpectralReport r{m_bins, cap_s, KernelKind::fejer, {}};
    r.eigenvalues.reserve(m_bins);
    for (std::size_t f = 0; f < m_bins; ++f) r.eigenvalues.push_back(fejer_eigenvalue(m_bins, cap_s, f));
    return r;
}

std::vector<std::complex<double>> circulant_eig_oracle(std::span<const double> first_row)
{
    const std::size_t m = first_row.size();
    require_bins(m);
    std::vector<std::complex<double>> out(m);
    for (std::size_t f = 0; f < m; ++f) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t l = 0; l < m; ++l) acc += first_row[l] * unit_root(std::uint64_t{l} * f, m);
        out[f] = acc;
    }
    return out;
}

double lemma1_average(const BinnedCounts& bc, std::size_t cap_s)
{
    require_fejer(bc.m, cap_s);
    std::uint64_t sum = 0;
    for (std::size_t s = 1; s <= cap_s; ++s) sum += quadratic_form_h_exact(bc, s);
    return static_cast<double>(sum) / static_cast<double>(cap_s);
}

double lemma1_bound(const BinnedCounts& bc, std::size_t cap_s)
{
    require_fejer(bc.m, cap_s);
    const auto n = static_cast<double>(bc.n);
    return static_cast<double>(cap_s) * n * n / static_cast<double>(bc.m);
}

ChainCheck h_to_f_chain_check(const PointSet& ps, std::size_t m_bins, std::size_t s, unsigned threads)
{
    require_bins(m_bins);
    require_window(m_bins, s);
    const auto n = static_cast<double>(ps.size());
    const double scaled_s = static_cast<double>(s) * n / static_cast<double>(m_bins);
    ChainCheck c;
    c.lhs = quadratic_form_h(bin_counts(ps, m_bins), s);
    c.rhs = static_cast<double>(pair_count_fast(ps, scaled_s, threads)) + n;
    return c;
}

} // namespace paircorr
