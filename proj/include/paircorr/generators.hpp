#pragma once

#include "paircorr/point_set.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace paircorr {

/// Piecewise-constant probability density on [0,1).
///
/// breakpoints: 0 = t_0 < t_1 < ... < t_K = 1; heights: K values g_k >= 0
/// with sum g_k (t_{k+1} - t_k) = 1 to within 1e-12.
class DensitySpec {
public:
    DensitySpec(std::vector<double> breakpoints, std::vector<double> heights);

    static DensitySpec uniform();

    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::span<const double> heights() const noexcept { return heights_; }
    std::size_t pieces() const noexcept { return heights_.size(); }

    /// Cumulative mass at the start of each piece, plus a final 1.
    std::span<const double> cumulative() const noexcept { return cumulative_; }

    /// Inverse CDF for u in [0,1); the result lies in [0,1) inside the
    /// support of the density.
    double quantile(double u) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> heights_;
    std::vector<double> cumulative_;
};

/// Named irrational constants at double precision.
namespace constants {
inline constexpr double golden = 0.6180339887498948482; // (sqrt(5) - 1) / 2
inline constexpr double sqrt2 = 1.4142135623730950488;
inline constexpr double e = 2.7182818284590452354;
inline constexpr double pi = 3.1415926535897932385;
} // namespace constants

/// {k * alpha}, computed without rounding the product: the error is one ulp of
/// the result rather than one ulp of k * alpha. Requires k < 2^53.
double fractional_product(std::uint64_t k, double alpha);

/// Throws std::invalid_argument unless max_multiplier * ulp(alpha) <= 1/(4n),
/// i.e. the phase error inherited from storing alpha as a double stays well
/// below the 1/N pair-correlation scale.
void check_phase_precision(std::uint64_t max_multiplier, double alpha, std::size_t n);

/// {(k+1) alpha}, k = 0..n-1.
PointSet kronecker(double alpha, std::size_t n);

/// {(k+1)^2 alpha}, k = 0..n-1.
PointSet quadratic_weyl(double alpha, std::size_t n);

/// {n_k alpha} for distinct positive integer multipliers n_k.
PointSet general_weyl(std::span<const std::uint64_t> multipliers, double alpha);

/// Radical inverse of 1..n in the given base.
PointSet van_der_corput(unsigned base, std::size_t n);
double radical_inverse(std::uint64_t k, unsigned base);

/// n i.i.d. uniform values from the seeded stream.
PointSet iid_uniform(std::uint64_t seed, std::size_t n);

/// n i.i.d. samples of `spec` by inverse-CDF transform of the same uniform
/// stream iid_uniform draws from.
PointSet iid_density(const DensitySpec& spec, std::uint64_t seed, std::size_t n);

/// Each point is `atom` with probability `weight`, otherwise uniform.
///
/// Point k consumes exactly two draws u_{2k}, u_{2k+1} of Rng(seed): it hits
/// the atom iff u_{2k} < weight, and otherwise equals u_{2k+1}.
PointSet atom_mixture(double atom, double weight, std::uint64_t seed, std::size_t n);

/// Deterministic sequence with asymptotic mass b on [0,a).
///
/// Point k goes to [0,a) iff floor((k+1) b) > floor(k b); each side is filled
/// with the base-2 van der Corput sequence rescaled to its interval, so the
/// only departure from equidistribution is the mass imbalance.
PointSet two_interval_sequence(double a, double b, std::size_t n);

} // namespace paircorr
