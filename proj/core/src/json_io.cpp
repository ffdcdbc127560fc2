#include "fm18/json_io.hpp"

#include <stdexcept>

namespace fm18 {

nlohmann::json g2_element_to_json(const G2Element& g)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : g.c) arr.push_back(rat_to_string(x));
    return arr;
}

G2Element g2_element_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 14)
        throw std::invalid_argument("expected a JSON array of 14 rationals");
    G2Element g;
    for (int i = 0; i < 14; ++i) {
        const auto& v = j[i];
        if (v.is_string()) g.c[i] = parse_rat(v.get<std::string>());
        else if (v.is_number_integer()) g.c[i] = Rat(v.get<long>());
        else throw std::invalid_argument("element coordinates must be strings or integers");
    }
    return g;
}

nlohmann::json orbit_class_to_json(const OrbitClass& c)
{
    nlohmann::json j;
    j["tag"] = to_string(c.tag);
    j["centralizer_dim"] = c.centralizer_dim;
    j["in_D_long"] = c.in_D_long;
    j["in_D_short"] = c.in_D_short;
    if (c.tag == OrbitTag::Nilpotent) j["nilpotent_kind"] = c.nilpotent_kind;
    return j;
}

nlohmann::json classification_report_to_json(const ClassificationReport& r)
{
    nlohmann::json j;
    j["schema"] = "fm18.classification/1";
    j["orbit"] = orbit_class_to_json(r.orbit);
    j["section_smooth"] = r.section_smooth;
    j["cone_flexibility"] = r.cone_flexibility;
    if (r.aut0) j["aut0"] = to_string(*r.aut0);
    if (r.full_aut) {
        nlohmann::json fa;
        fa["determined"] = r.full_aut->determined;
        fa["lower"] = r.full_aut->lower;
        fa["upper"] = r.full_aut->upper;
        j["full_aut"] = fa;
    }
    if (r.cubic_cone_count) j["cubic_cones"] = to_string(*r.cubic_cone_count);
    if (r.sigma_s_type) j["splitting_surface"] = to_string(*r.sigma_s_type);
    if (r.variety_name) j["variety"] = to_string(*r.variety_name);
    if (r.residual_symmetry) j["residual_symmetry"] = *r.residual_symmetry;
    return j;
}

nlohmann::json sextic_report_to_json(const SexticReport& r)
{
    nlohmann::json j;
    j["schema"] = "fm18.sextic/1";
    j["surface_type"] = to_string(r.surface_type);
    j["aut"] = r.aut_descriptor;
    j["aut0_dim"] = r.aut0_dim;
    if (r.line_count) j["lines"] = *r.line_count;
    else j["lines"] = "infinite";
    j["singularities"] = r.sing_descriptor;
    j["dual_graph"] = r.dual_graph;
    return j;
}

nlohmann::json singular_locus_to_json(const SingularLocus& s)
{
    nlohmann::json j;
    j["certificate"] = s.certificate;
    j["singular_along_curve"] = s.is_curve;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) {
        nlohmann::json e;
        nlohmann::json x = nlohmann::json::array(), y = nlohmann::json::array();
        for (const auto& v : p.x) x.push_back(rat_to_string(v));
        for (const auto& v : p.y) y.push_back(rat_to_string(v));
        e["x"] = x;
        e["y"] = y;
        e["eigenvalue"] = rat_to_string(p.eigenvalue);
        pts.push_back(e);
    }
    j["points"] = pts;
    return j;
}

nlohmann::json identity_checks_to_json(const std::vector<IdentityCheck>& checks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["expected"] = rat_to_string(c.expected);
        e["computed"] = rat_to_string(c.computed);
        e["pass"] = c.pass;
        arr.push_back(e);
    }
    return arr;
}

nlohmann::json pair_stabilizer_to_json(const PairStabilizer& s)
{
    nlohmann::json j;
    j["group"] = to_string(s.group);
    j["family"] = s.family;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : s.generators) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < 3; ++k) row.push_back(rat_to_string(g.at(i, k)));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    return j;
}

} // namespace fm18
