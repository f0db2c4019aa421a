#pragma once

// Hand-rolled generators for property tests: random point sets that mix
// smooth data with the awkward cases (ties, duplicates, points hugging 0 and 1).

#include "paircorr/point_set.hpp"
#include "paircorr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace paircorr::testing {

inline std::size_t random_size(Rng& rng, std::size_t max_n)
{
    // log-uniform in [1, max_n]
    const double u = rng.uniform01();
    const auto n = static_cast<std::size_t>(std::exp(u * std::log(static_cast<double>(max_n) + 1.0)));
    return std::clamp<std::size_t>(n, 1, max_n);
}

inline PointSet random_point_set(Rng& rng, std::size_t max_n)
{
    const std::size_t n = random_size(rng, max_n);
    std::vector<double> pts(n);
    switch (rng.next_u64() % 4) {
    case 0: // smooth
        for (auto& p : pts) p = rng.uniform01();
        break;
    case 1: { // coarse dyadic lattice: many exact ties and duplicates
        const unsigned bits = 1 + static_cast<unsigned>(rng.next_u64() % 12);
        for (auto& p : pts) p = std::ldexp(static_cast<double>(rng.next_u64() % (1u << bits)), -static_cast<int>(bits));
        break;
    }
    case 2: { // tight clusters around a few centres
        const double width = std::ldexp(1.0, -static_cast<int>(4 + rng.next_u64() % 20));
        std::vector<double> centres(1 + rng.next_u64() % 5);
        for (auto& c : centres) c = rng.uniform01();
        for (auto& p : pts) p = fractional_part(centres[rng.next_u64() % centres.size()] + width * rng.uniform01());
        break;
    }
    default: // hugging the wrap point
        for (auto& p : pts) {
            const double off = std::ldexp(rng.uniform01(), -static_cast<int>(rng.next_u64() % 30));
            p = rng.next_u64() % 2 ? off : fractional_part(1.0 - off);
            if (rng.next_u64() % 8 == 0) p = std::nextafter(1.0, 0.0);
        }
        break;
    }
    return PointSet(std::move(pts));
}

/// Strictly ascending grid mixing random s, s = 0, dyadic s that hit exact
/// distances on lattice sets, and s beyond N/2.
inline std::vector<double> random_s_grid(Rng& rng, std::size_t n, std::size_t count)
{
    const auto nd = static_cast<double>(n);
    std::vector<double> grid;
    for (std::size_t k = 0; k < count; ++k) {
        switch (rng.next_u64() % 5) {
        case 0: grid.push_back(0.0); break;
        case 1: grid.push_back(nd * std::ldexp(static_cast<double>(rng.next_u64() % 8), -static_cast<int>(1 + rng.next_u64() % 12))); break;
        case 2: grid.push_back(nd * (0.5 + rng.uniform01())); break;
        default: grid.push_back(10.0 * rng.uniform01()); break;
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace paircorr::testing
