#pragma once

#include "paircorr/harness.hpp"
#include "paircorr/pair_correlation.hpp"
#include "paircorr/spectral.hpp"

#include <json.hpp>

#include <string>

namespace paircorr {

using Json = nlohmann::ordered_json;

/// {name, parameters, per_n_results: [{n, seed, s, f_value, ratio}], verdict}.
Json to_json(const ExperimentReport& report);

/// Header "N,seed,s,f_value,ratio", one row per result; seed is empty when
/// the experiment had none.
std::string to_csv(const ExperimentReport& report);

/// Header "s,pair_count,f_value".
std::string to_csv(const PairCorrelationCurve& curve);
Json to_json(const PairCorrelationCurve& curve);

/// Header "m,lambda".
std::string to_csv(const SpectralReport& spectrum);

/// Serialised JSON text, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace paircorr
