#pragma once

#include "paircorr/generators.hpp"
#include "paircorr/point_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace paircorr {

/// b^2/a + (1-b)^2/(1-a): asymptotic floor of sup_s F_N(s)/(2s) for a
/// sequence putting mass b on [0,a). Equals 1 iff a == b.
double segregation_bound(double a, double b);

/// ((eps n)/(8S))^2 - n, the lower bound on N F_N(1) once eps N points sit in
/// the 2S/N-neighbourhoods of 0, a and 1. Nonpositive means vacuous.
double cluster_bound(double epsilon, std::size_t cap_s, std::size_t n);

/// Default s grid for experiments.
std::vector<double> default_s_grid();

struct ResultRow {
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    double s = 0.0;
    double f_value = 0.0;
    double ratio = 0.0; ///< F_N(s) / (2s)
};

struct Verdict {
    std::string statistic;   ///< what max_ratio / min_ratio summarise
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    double reference_bound = 0.0;
    double threshold = 0.0;  ///< value the pass test compares against
    bool pass = false;
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<ResultRow> per_n_results;
    Verdict verdict;
};

struct HarnessOptions {
    unsigned threads = 1;
};

/// Ratios F_N(s)/(2s) over the grid (s = 0 skipped). Passes when
/// max |ratio - 1| <= tolerance.
ExperimentReport run_poissonian_check(const PointSet& ps, std::span<const double> s_grid,
                                      double tolerance = 0.05, const HarnessOptions& options = {});

/// run_poissonian_check on iid_uniform(seed, n) for each seed; the verdict
/// uses the per-s median ratio across seeds.
ExperimentReport run_poissonian_seeds(std::size_t n, std::span<const std::uint64_t> seeds,
                                      std::span<const double> s_grid, double tolerance = 0.05,
                                      const HarnessOptions& options = {});

/// Pair correlations of two_interval_sequence(a, b, N) for each N. The
/// verdict takes sup_s F_N(s)/(2s) at the largest N and requires it to reach
/// 1 + 0.8 (segregation_bound(a, b) - 1). Rejects a == b.
ExperimentReport run_theorem1_contrapositive(double a, double b, std::span<const std::size_t> n_list,
                                             std::span<const double> s_grid, const HarnessOptions& options = {});

/// Median over seeds of F_N(s)/(2s) for iid_density samples, compared with
/// the exact integral of g^2. Passes when every median lies within
/// relative_tolerance of it.
ExperimentReport run_theorem2_density(const DensitySpec& spec, std::size_t n, std::span<const std::uint64_t> seeds,
                                      std::span<const double> s_grid, double relative_tolerance = 0.1,
                                      const HarnessOptions& options = {});

/// F_N(1)/N for atom_mixture samples at each N. A point mass makes F_N grow
/// linearly in N, with slope weight^2; passes when every F_N(1)/N lies within
/// absolute_tolerance of weight^2.
ExperimentReport run_theorem2_blowup(double atom, double weight, std::uint64_t seed,
                                     std::span<const std::size_t> n_list, double absolute_tolerance = 0.05,
                                     const HarnessOptions& options = {});

/// Largest F_N(s)/(2s) among the rows with the given N.
double sup_ratio(const ExperimentReport& report, std::size_t n);

} // namespace paircorr
