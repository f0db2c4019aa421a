#pragma once

#include "paircorr/point_set.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace paircorr {

/// Counts y_0..y_{M-1} of points in the bins [k/M, (k+1)/M), indexed cyclically.
struct BinnedCounts {
    std::size_t m = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t n = 0;

    /// Validates m == counts.size() >= 1 and recomputes n.
    static BinnedCounts from_counts(std::vector<std::uint64_t> counts);

    std::uint64_t operator[](std::ptrdiff_t k) const noexcept
    {
        const auto mm = static_cast<std::ptrdiff_t>(m);
        return counts[static_cast<std::size_t>(((k % mm) + mm) % mm)];
    }
};

/// Bin index floor(x * M), computed exactly so that x lands in [k/M, (k+1)/M).
std::size_t bin_index(double x, std::size_t m);

BinnedCounts bin_counts(const PointSet& ps, std::size_t m);

/// H(s) = sum_m sum_{|l| <= s-1} y_m y_{m+l}, indices mod M. Exact in
/// integers; requires s >= 1 and 2s - 1 <= M.
std::uint64_t quadratic_form_h_exact(const BinnedCounts& bc, std::size_t s);
double quadratic_form_h(const BinnedCounts& bc, std::size_t s);

/// The same form evaluated through the circulant eigen-expansion,
/// (1/M) sum_m lambda_m^{(s)} |Y_m|^2 with Y the DFT of the counts. O(M^2).
double quadratic_form_h_spectral(const BinnedCounts& bc, std::size_t s);

/// First row of the symmetric band circulant A^{(s)}: c_l = 1 iff the cyclic
/// distance min(l, M - l) is at most s - 1.
std::vector<double> band_circulant_row(std::size_t m_bins, std::size_t s);

/// Eigenvalue of A^{(s)} for frequency m: sin((2s-1) pi m/M) / sin(pi m/M),
/// and exactly 2s-1 at m = 0.
double dirichlet_eigenvalue(std::size_t m_bins, std::size_t s, std::size_t m);

/// The same eigenvalue as the exponential sum sum_{l=-s+1}^{s-1} cos(2 pi m l / M).
double dirichlet_eigenvalue_sum(std::size_t m_bins, std::size_t s, std::size_t m);

/// Mean of the first S Dirichlet eigenvalues at frequency m (a Fejer kernel
/// sample). Requires 2S < M. Exactly S at m = 0.
double fejer_eigenvalue(std::size_t m_bins, std::size_t cap_s, std::size_t m);

/// Running Fejer means for S = 1..max_cap_s at one frequency: element S-1
/// equals fejer_eigenvalue(m_bins, S, m). Requires 2 max_cap_s < M.
std::vector<double> fejer_eigenvalue_prefix(std::size_t m_bins, std::size_t max_cap_s, std::size_t m);

enum class KernelKind { dirichlet, fejer };

struct SpectralReport {
    std::size_t m = 0;
    std::size_t order = 0; ///< s for Dirichlet, S for Fejer
    KernelKind kind = KernelKind::dirichlet;
    std::vector<double> eigenvalues;
};

SpectralReport dirichlet_spectrum(std::size_t m_bins, std::size_t s);
SpectralReport fejer_spectrum(std::size_t m_bins, std::size_t cap_s);

/// Brute-force circulant eigenvalues lambda_m = sum_l c_l exp(2 pi i l m / M)
/// for the matrix whose row r is the first row shifted right by r.
std::vector<std::complex<double>> circulant_eig_oracle(std::span<const double> first_row);

/// Discrete Fourier transform Y_m = sum_k y_k exp(-2 pi i k m / M).
std::vector<std::complex<double>> dft(std::span<const double> values);

/// (1/S) sum_{s=1}^{S} H(s). Requires 2S < M.
double lemma1_average(const BinnedCounts& bc, std::size_t cap_s);

/// Lower bound S N^2 / M on lemma1_average.
double lemma1_bound(const BinnedCounts& bc, std::size_t cap_s);

struct ChainCheck {
    double lhs = 0.0; ///< H(s) of the binned points
    double rhs = 0.0; ///< N F_N(sN/M) + N
};

/// Both sides of H(s) <= N F_N(sN/M) + N for the given point set.
ChainCheck h_to_f_chain_check(const PointSet& ps, std::size_t m_bins, std::size_t s, unsigned threads = 1);

} // namespace paircorr
