#pragma once

#include "fm18/binary_cubic.hpp"
#include "fm18/conic_pairs.hpp"
#include "fm18/flag_sextic.hpp"
#include "fm18/g2.hpp"
#include "fm18/ledger.hpp"
#include "fm18/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace fm18 {

/// G2Element <-> JSON array of 14 strings "p/q", ordered
/// (h1, h2, e(1,0), e(0,1), e(1,1), e(2,1), e(3,1), e(3,2), then negatives).
nlohmann::json g2_element_to_json(const G2Element& g);
G2Element g2_element_from_json(const nlohmann::json& j);

nlohmann::json orbit_class_to_json(const OrbitClass& c);
nlohmann::json classification_report_to_json(const ClassificationReport& r);
nlohmann::json sextic_report_to_json(const SexticReport& r);
nlohmann::json singular_locus_to_json(const SingularLocus& s);
nlohmann::json identity_checks_to_json(const std::vector<IdentityCheck>& checks);
nlohmann::json pair_stabilizer_to_json(const PairStabilizer& s);

} // namespace fm18
