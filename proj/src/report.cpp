#include "paircorr/report.hpp"

#include "paircorr/io.hpp"

namespace paircorr {

Json to_json(const ExperimentReport& report)
{
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;

    Json rows = Json::array();
    for (const auto& r : report.per_n_results) {
        Json row = {{"n", r.n}};
        row["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
        row["s"] = r.s;
        row["f_value"] = r.f_value;
        row["ratio"] = r.ratio;
        rows.push_back(std::move(row));
    }

    const auto& v = report.verdict;
    Json verdict = {{"statistic", v.statistic},   {"max_ratio", v.max_ratio},
                    {"min_ratio", v.min_ratio},   {"reference_bound", v.reference_bound},
                    {"threshold", v.threshold},   {"pass", v.pass}};

    return Json{{"name", report.name}, {"parameters", std::move(params)}, {"per_n_results", std::move(rows)},
                {"verdict", std::move(verdict)}};
}

std::string to_csv(const ExperimentReport& report)
{
    std::string out = "N,seed,s,f_value,ratio\n";
    for (const auto& r : report.per_n_results) {
        out += std::to_string(r.n);
        out += ',';
        if (r.seed) out += std::to_string(*r.seed);
        out += ',' + format_real(r.s) + ',' + format_real(r.f_value) + ',' + format_real(r.ratio) + '\n';
    }
    return out;
}

std::string to_csv(const PairCorrelationCurve& curve)
{
    std::string out = "s,pair_count,f_value\n";
    for (const auto& p : curve.samples)
        out += format_real(p.s) + ',' + std::to_string(p.pair_count) + ',' + format_real(p.value) + '\n';
    return out;
}

Json to_json(const PairCorrelationCurve& curve)
{
    Json samples = Json::array();
    for (const auto& p : curve.samples)
        samples.push_back({{"s", p.s}, {"pair_count", p.pair_count}, {"f_value", p.value}});
    return Json{{"n", curve.n}, {"samples", std::move(samples)}};
}

std::string to_csv(const SpectralReport& spectrum)
{
    std::string out = "m,lambda\n";
    for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k)
        out += std::to_string(k) + ',' + format_real(spectrum.eigenvalues[k]) + '\n';
    return out;
}

std::string dump(const Json& j)
{
    return j.dump(2) + '\n';
}

} // namespace paircorr
