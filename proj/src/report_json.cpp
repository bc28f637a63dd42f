#include "starrad/report_json.hpp"

#include "starrad/version.hpp"

namespace starrad {

using nlohmann::json;

namespace {

json region_json(const TargetRegion& region) {
    json j;
    j["region"] = std::string(region_name(region.tag));
    j["target"] = std::string(region_symbol(region.tag));
    if (region.tag == RegionTag::HalfPlane)
        j["alpha"] = region.alpha;
    else
        j["alpha"] = nullptr;
    return j;
}

json tolerances_json(const VerifyTolerances& tol) {
    return json{{"inside", tol.inside}, {"touch", tol.touch}, {"solver", tol.solver}};
}

}  // namespace

json to_json(const VerificationReport& rep) {
    json j = region_json(rep.region);
    j["class"] = std::string(class_name(rep.cls));
    j["function"] = std::string(function_name(rep.function_id));
    j["radius_tested"] = rep.radius_tested;
    j["n_samples"] = rep.n_samples;
    j["min_margin"] = rep.min_margin;
    if (rep.touch_point)
        j["touch_point"] = json{{"re", rep.touch_point->real()},
                                {"im", rep.touch_point->imag()}};
    else
        j["touch_point"] = nullptr;
    j["touch_angle"] = rep.touch_angle;
    j["verdict"] = std::string(verdict_name(rep.verdict));
    j["tolerances"] = tolerances_json(rep.tolerances);
    j["closed_form"] = rep.closed_form ? json(*rep.closed_form) : json(nullptr);
    j["solved"] = rep.solved ? json(*rep.solved) : json(nullptr);
    if (rep.closed_form && rep.solved)
        j["abs_diff"] = std::abs(*rep.closed_form - *rep.solved);
    else
        j["abs_diff"] = nullptr;
    j["sharp"] = rep.sharp;
    j["pass"] = rep.pass;
    j["route"] = rep.route;
    j["route_discrepancy"] =
        rep.route_discrepancy ? json(*rep.route_discrepancy) : json(nullptr);
    j["failures"] = rep.failures;
    return j;
}

json to_json(const RadiusResult& row) {
    json j = region_json(row.region);
    j["class"] = std::string(class_name(row.cls));
    j["closed_form"] = row.closed_form;
    j["solved"] = row.solved;
    j["abs_diff"] = std::abs(row.closed_form - row.solved);
    j["sharp"] = row.sharp;
    j["equation"] = row.equation;
    j["route"] = row.route;
    j["route_discrepancy"] =
        row.route_discrepancy ? json(*row.route_discrepancy) : json(nullptr);
    return j;
}

json make_run_report(const std::vector<VerificationReport>& reports,
                     std::uint64_t seed, const VerifyTolerances& tol) {
    json j;
    j["version"] = std::string(kVersion);
    j["seed"] = seed;
    j["tolerances"] = tolerances_json(tol);
    json list = json::array();
    for (const VerificationReport& rep : reports) list.push_back(to_json(rep));
    j["reports"] = list;
    return j;
}

}  // namespace starrad
