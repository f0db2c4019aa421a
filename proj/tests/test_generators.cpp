#include <doctest.h>

#include "paircorr/equidist.hpp"
#include "paircorr/generators.hpp"
#include "paircorr/pair_correlation.hpp"
#include "paircorr/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace paircorr;

// Two-sample KS statistic for seeds (101, 202) at N = 10^4, frozen on first run.
constexpr double kUniformKsRegression = 0.0165;

namespace {

std::vector<double> values(const PointSet& ps)
{
    return {ps.begin(), ps.end()};
}

double mean(const PointSet& ps)
{
    return std::accumulate(ps.begin(), ps.end(), 0.0) / static_cast<double>(ps.size());
}

} // namespace

TEST_CASE("Rng is reproducible and splits into distinct streams")
{
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng root(42);
    Rng c1 = root.split(1), c1b = root.split(1), c2 = root.split(2);
    CHECK(c1.next_u64() == c1b.next_u64());
    CHECK(c1.uniform01() != c2.uniform01());
}

TEST_CASE("fractional_product")
{
    CHECK(fractional_product(3, 0.5) == 0.5);
    CHECK(fractional_product(4, 0.25) == 0.0);
    CHECK(fractional_product(1, -0.25) == 0.75);
    // Exact reference: sqrt2 as a double is mantissa * 2^-52, so {k * sqrt2} is
    // (k * mantissa mod 2^52) / 2^52 in integer arithmetic.
    const auto mantissa = static_cast<std::uint64_t>(std::ldexp(constants::sqrt2, 52));
    for (std::uint64_t k : {1ull, 12345ull, 100000000ull, 9999999967ull}) {
        const unsigned __int128 product = static_cast<unsigned __int128>(k) * mantissa;
        const auto low = static_cast<std::uint64_t>(product & ((std::uint64_t{1} << 52) - 1));
        const double exact = std::ldexp(static_cast<double>(low), -52);
        CHECK(std::fabs(fractional_product(k, constants::sqrt2) - exact) <= 0x1.0p-53);
    }
}

TEST_CASE("kronecker")
{
    CHECK(values(kronecker(0.5, 4)) == std::vector<double>{0.5, 0.0, 0.5, 0.0});
    CHECK(values(kronecker(0.0, 3)) == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(star_discrepancy(kronecker(constants::golden, 100000)) < 0.001);
    CHECK_THROWS_AS(kronecker(0.5, 0), std::invalid_argument);
}

TEST_CASE("quadratic_weyl")
{
    CHECK(values(quadratic_weyl(0.0, 3)) == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(values(quadratic_weyl(0.5, 4)) == std::vector<double>{0.5, 0.0, 0.5, 0.0});
    const auto ps = quadratic_weyl(constants::sqrt2, 100000);
    const double ratio = pair_correlation_value(ps, 1.0) / 2.0;
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.2);
}

TEST_CASE("phase precision guard caps N for large multipliers")
{
    CHECK_NOTHROW(quadratic_weyl(constants::sqrt2, 100000));
    CHECK_THROWS_AS(quadratic_weyl(constants::sqrt2, 200000), std::invalid_argument);
    CHECK_THROWS_AS(kronecker(std::nan(""), 10), std::invalid_argument);
}

TEST_CASE("general_weyl")
{
    const std::vector<std::uint64_t> powers{2, 4, 8};
    CHECK(values(general_weyl(powers, 0.5)) == std::vector<double>{0.0, 0.0, 0.0});
    const std::vector<std::uint64_t> small{1, 2, 3};
    CHECK(values(general_weyl(small, 0.25)) == std::vector<double>{0.25, 0.5, 0.75});
    const std::vector<std::uint64_t> dup{1, 2, 1};
    CHECK_THROWS_AS(general_weyl(dup, 0.3), std::invalid_argument);
    const std::vector<std::uint64_t> zero{0, 1};
    CHECK_THROWS_AS(general_weyl(zero, 0.3), std::invalid_argument);
}

TEST_CASE("general_weyl with lacunary multipliers is equidistributed for almost all alpha")
{
    std::vector<std::uint64_t> lacunary;
    for (int k = 1; k <= 17; ++k) lacunary.push_back(std::uint64_t{1} << k);
    // 17 points: the two-sided KS 1% critical value is about 1.63 / sqrt(17) = 0.395
    Rng rng(1234);
    int passed = 0;
    for (int draw = 0; draw < 100; ++draw) {
        if (star_discrepancy(general_weyl(lacunary, rng.uniform01())) <= 0.395) ++passed;
    }
    CHECK(passed >= 95);
}

TEST_CASE("van_der_corput")
{
    CHECK(values(van_der_corput(2, 4)) == std::vector<double>{0.5, 0.25, 0.75, 0.125});
    CHECK(values(van_der_corput(10, 1)) == std::vector<double>{0.1});
    CHECK(values(van_der_corput(3, 4)) ==
          std::vector<double>{1.0 / 3.0, 2.0 / 3.0, 1.0 / 9.0, 4.0 / 9.0});
    CHECK(star_discrepancy(van_der_corput(2, 1024)) <= 0.011);
    CHECK_THROWS_AS(van_der_corput(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(van_der_corput(0, 4), std::invalid_argument);
}

TEST_CASE("iid_uniform")
{
    CHECK(iid_uniform(17, 1000) == iid_uniform(17, 1000));
    CHECK(values(iid_uniform(1, 10)) != values(iid_uniform(2, 10)));
    // prefix-stable: a longer run starts with the shorter one
    const auto longer = iid_uniform(17, 2000);
    const auto shorter = iid_uniform(17, 1000);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
    CHECK(std::fabs(mean(iid_uniform(9, 100000)) - 0.5) <= 0.01);
}

TEST_CASE("DensitySpec validation")
{
    CHECK_NOTHROW(DensitySpec({0.0, 0.5, 1.0}, {2.0, 0.0}));
    CHECK_THROWS_AS(DensitySpec({0.0, 0.5, 1.0}, {1.0, 0.0}), std::invalid_argument); // mass 1/2
    CHECK_THROWS_AS(DensitySpec({0.0, 1.0}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DensitySpec({0.0, 0.6, 0.5, 1.0}, {1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DensitySpec({0.1, 1.0}, {1.0 / 0.9}), std::invalid_argument);
    CHECK_THROWS_AS(DensitySpec({0.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("DensitySpec::quantile inverts the CDF")
{
    const DensitySpec spec({0.0, 0.25, 0.5, 1.0}, {0.0, 2.0, 1.0});
    CHECK(spec.quantile(0.0) == 0.25);
    CHECK(spec.quantile(0.25) == doctest::Approx(0.375));
    CHECK(spec.quantile(0.5) == doctest::Approx(0.5));
    CHECK(spec.quantile(0.75) == doctest::Approx(0.75));
    CHECK(spec.quantile(std::nextafter(1.0, 0.0)) < 1.0);
    CHECK_THROWS_AS(spec.quantile(1.0), std::invalid_argument);
}

TEST_CASE("iid_density")
{
    CHECK(iid_density(DensitySpec::uniform(), 5, 5000) == iid_uniform(5, 5000));

    const DensitySpec half({0.0, 0.5, 1.0}, {2.0, 0.0});
    const auto ps = iid_density(half, 8, 100000);
    CHECK(std::all_of(ps.begin(), ps.end(), [](double p) { return p < 0.5; }));
    CHECK(std::fabs(ecdf(ps, 0.25) - 0.5) <= 0.01);
}

TEST_CASE("iid_density with g = 1 and iid_uniform agree in distribution")
{
    const auto a = iid_density(DensitySpec::uniform(), 101, 10000);
    const auto b = iid_uniform(202, 10000);
    const double ks = ks_statistic(a, b);
    // two-sample KS critical value at the 1e-3 level: 1.949 * sqrt(2 / 10^4)
    CHECK(ks < 1.949 * std::sqrt(2.0 / 10000.0));
    CHECK(ks == doctest::Approx(kUniformKsRegression).epsilon(1e-12));
}

TEST_CASE("atom_mixture")
{
    CHECK(atom_mixture(0.3, 0.5, 4, 1000) == atom_mixture(0.3, 0.5, 4, 1000));
    CHECK_THROWS_AS(atom_mixture(1.0, 0.5, 4, 10), std::invalid_argument);
    CHECK_THROWS_AS(atom_mixture(0.3, 0.0, 4, 10), std::invalid_argument);
    CHECK_THROWS_AS(atom_mixture(0.3, 1.0, 4, 10), std::invalid_argument);
}

TEST_CASE("atom_mixture coincident pairs, atom hits counted from the raw stream")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const std::size_t n = 100000;
        Rng rng(seed);
        std::uint64_t hits = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (rng.uniform01() < 0.5) ++hits;
            rng.uniform01();
        }
        const auto ps = atom_mixture(0.3, 0.5, seed, n);
        CHECK(static_cast<std::uint64_t>(std::count(ps.begin(), ps.end(), 0.3)) >= hits);
        CHECK(pair_count_fast(ps, 1.0) >= hits * hits - hits);
        // hits ~ Binomial(n, 1/2): sd = 158
        CHECK(std::fabs(static_cast<double>(hits) - 0.5 * n) < 5 * 158.2);
    }
}

TEST_CASE("atom_mixture makes F_N(1) grow linearly in N")
{
    for (std::size_t n : {1000u, 10000u, 100000u}) {
        const double per_n = pair_correlation_value(atom_mixture(0.3, 0.5, 77, n), 1.0) / static_cast<double>(n);
        CHECK(per_n == doctest::Approx(0.25).epsilon(0.2));
    }
}

TEST_CASE("two_interval_sequence")
{
    CHECK(two_interval_sequence(0.5, 0.75, 1000) == two_interval_sequence(0.5, 0.75, 1000));
    CHECK_THROWS_AS(two_interval_sequence(0.0, 0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(two_interval_sequence(0.5, 1.0, 10), std::invalid_argument);

    const auto ps = two_interval_sequence(0.5, 0.75, 10000);
    CHECK(std::fabs(ecdf(ps, 0.5) - 0.75) <= 0.01);

    // matched mass is uniform; discrepancy decays
    const double d1 = star_discrepancy(two_interval_sequence(0.5, 0.5, 1000));
    const double d2 = star_discrepancy(two_interval_sequence(0.5, 0.5, 100000));
    CHECK(d1 < 0.01);
    CHECK(d2 < 0.0002);
    CHECK(d2 < d1);

    // mass b on [0,a) pushes F_N(s)/(2s) above 1 (segregation bound 1.25)
    const auto big = two_interval_sequence(0.5, 0.75, 100000);
    double best = 0.0;
    for (double s : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) best = std::max(best, pair_correlation_value(big, s) / (2 * s));
    CHECK(best >= 1.2);
}
