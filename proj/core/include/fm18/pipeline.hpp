#pragma once

#include "fm18/flag_sextic.hpp"
#include "fm18/g2.hpp"

#include <optional>
#include <string>

namespace fm18 {

enum class ConeCount { TwoFamiliesPlusTwo, Four, Six };
enum class SigmaSType { ReducibleFirstKind, TypeA1, SmoothDP6 };
enum class VarietyName { V18s, V18a, Generic };

std::string to_string(ConeCount c);
std::string to_string(SigmaSType s);
std::string to_string(VarietyName v);

/// Full automorphism group, either a single group or a lower/upper sandwich
/// when only bounds are known.
struct FullAut {
    std::string lower;
    std::string upper;
    bool determined = false; // lower == upper == the group
};

/// Composite classification of the hyperplane section V^g cut out by an
/// element g of g2.
struct ClassificationReport {
    OrbitClass orbit;
    bool section_smooth = false;
    // the following are set only when the section is smooth
    std::optional<Aut0Section> aut0;
    std::optional<FullAut> full_aut;
    std::optional<ConeCount> cubic_cone_count;
    std::optional<SigmaSType> sigma_s_type;
    std::optional<VarietyName> variety_name;
    /// For the generic torus case the residual finite symmetry is known
    /// only up to a divisor of 6; surfaced instead of guessed.
    std::optional<std::string> residual_symmetry;
    std::string cone_flexibility;
};

ClassificationReport classify_fourfold(const G2Element& g);

/// Does a candidate matrix for the splitting-line surface match the report?
/// A2 sections and second-kind reducible sections are never demanded: they
/// do not occur for a smooth V.
bool cross_check_with_flag_sextic(const ClassificationReport& report, const TracelessMatrix3& c);

/// Certified representatives of the three smooth-section classes. Each
/// generator re-checks the defining predicates and aborts if they fail.
G2Element sample_generic();
G2Element sample_v18s();
G2Element sample_v18a();

} // namespace fm18
