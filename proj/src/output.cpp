#include "defzero/output.hpp"

#include <sstream>

namespace defzero {

namespace {

std::string csv_cell(const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "undefined";
    return v.dump();
}

} // namespace

std::string OutputRecord::to_csv() const
{
    std::ostringstream out;
    out << "# defzero schema_version=" << kSchemaVersion << " command=" << command << " config=" << config.dump()
        << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[i]);
        out << "\n";
    }
    return out.str();
}

nlohmann::json OutputRecord::to_json() const
{
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["config"] = config;
    auto objects = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i)
            obj[columns[i]] = row[i];
        objects.push_back(std::move(obj));
    }
    out["rows"] = std::move(objects);
    return out;
}

std::vector<std::string> estimate_columns()
{
    return {"n", "p", "trials", "successes", "estimate", "ci_low", "ci_high", "wall_time_ms"};
}

std::vector<std::string> estimate_columns_k()
{
    return {"n", "k", "trials", "successes", "estimate", "ci_low", "ci_high", "wall_time_ms"};
}

nlohmann::json estimate_cells(const EstimateRow& row)
{
    return nlohmann::json::array(
        {row.n, row.p, row.trials, row.successes, row.estimate, row.ci_low, row.ci_high, row.wall_time_ms});
}

nlohmann::json estimate_cells_k(const EstimateRow& row)
{
    return nlohmann::json::array({row.n, row.k.value_or(0), row.trials, row.successes, row.estimate, row.ci_low,
                                  row.ci_high, row.wall_time_ms});
}

std::vector<std::string> conditional_columns()
{
    return {"n",        "p",      "trials", "conditioning_events", "successes", "estimate",
            "ci_low",   "ci_high", "wall_time_ms"};
}

nlohmann::json conditional_cells(const ConditionalEstimate& est, std::uint32_t n, double p)
{
    if (!est.row)
        return nlohmann::json::array({n, p, est.trials, est.conditioning_events, 0, nullptr, nullptr, nullptr, 0.0});
    const auto& r = *est.row;
    return nlohmann::json::array(
        {n, p, est.trials, est.conditioning_events, r.successes, r.estimate, r.ci_low, r.ci_high, r.wall_time_ms});
}

nlohmann::json report_to_json(const DeficiencyReport& report)
{
    nlohmann::json out;
    out["num_complexes"] = report.num_complexes;
    out["num_components"] = report.num_components;
    out["rank"] = report.rank;
    out["deficiency"] = report.deficiency;
    out["is_paired"] = report.is_paired;
    auto comps = nlohmann::json::array();
    for (const auto& c : report.components)
        comps.push_back({{"complex_count", c.complex_count}, {"rank", c.rank}, {"deficiency", c.deficiency}});
    out["components"] = std::move(comps);
    return out;
}

std::string render_report_text(const DeficiencyReport& report, std::uint32_t species_count)
{
    std::ostringstream out;
    if (report.num_complexes == 0) {
        out << "empty network, deficiency: 0\n";
        return out.str();
    }
    out << "species: " << species_count << "\n"
        << "complexes: " << report.num_complexes << "\n"
        << "components: " << report.num_components << "\n"
        << "rank: " << report.rank << "\n"
        << "deficiency: " << report.deficiency << "\n"
        << "paired: " << (report.is_paired ? "yes" : "no") << " (" << report.num_components << " components)\n"
        << "component  complexes  rank  deficiency\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const auto& c = report.components[i];
        out << i + 1 << "  " << c.complex_count << "  " << c.rank << "  " << c.deficiency << "\n";
    }
    return out.str();
}

} // namespace defzero
