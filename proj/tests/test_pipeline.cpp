#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/json_io.hpp"
#include "fm18/pipeline.hpp"

using namespace fm18;

TEST_CASE("the three certified samples")
{
    auto generic = classify_fourfold(sample_generic());
    CHECK(generic.section_smooth);
    CHECK(generic.aut0 == Aut0Section::Torus2);
    CHECK(generic.variety_name == VarietyName::Generic);
    CHECK(generic.cubic_cone_count == ConeCount::Six);
    CHECK(generic.sigma_s_type == SigmaSType::SmoothDP6);
    REQUIRE(generic.full_aut.has_value());
    CHECK(!generic.full_aut->determined);
    CHECK(generic.residual_symmetry.has_value());

    auto vs = classify_fourfold(sample_v18s());
    CHECK(vs.aut0 == Aut0Section::GL2);
    CHECK(vs.variety_name == VarietyName::V18s);
    CHECK(vs.cubic_cone_count == ConeCount::TwoFamiliesPlusTwo);
    CHECK(vs.sigma_s_type == SigmaSType::ReducibleFirstKind);
    REQUIRE(vs.full_aut.has_value());
    CHECK(vs.full_aut->determined);
    CHECK(vs.full_aut->lower == "GL2(C) x| Z/2");

    auto va = classify_fourfold(sample_v18a());
    CHECK(va.aut0 == Aut0Section::GaGm);
    CHECK(va.variety_name == VarietyName::V18a);
    CHECK(va.cubic_cone_count == ConeCount::Four);
    CHECK(va.sigma_s_type == SigmaSType::TypeA1);
    REQUIRE(va.full_aut.has_value());
    CHECK(va.full_aut->lower == "(Ga x Gm) x| Z/2");
}

TEST_CASE("singular sections carry no smooth-case fields")
{
    const G2Structure& lie = g2();
    auto rep = classify_fourfold(lie.cartan_element(Rat(1), Rat(0))); // long root killed
    CHECK(!rep.section_smooth);
    CHECK(!rep.aut0.has_value());
    CHECK(!rep.variety_name.has_value());

    auto nil = classify_fourfold(lie.root_vector(2));
    CHECK(!nil.section_smooth);

    auto zero = classify_fourfold(G2Element::zero());
    CHECK(!zero.section_smooth);
    CHECK(zero.orbit.tag == OrbitTag::Zero);
}

TEST_CASE("cross-checks against candidate splitting surfaces")
{
    auto va = classify_fourfold(sample_v18a());
    CHECK(cross_check_with_flag_sextic(va, c1_normal_form()));
    CHECK(!cross_check_with_flag_sextic(va, c2_normal_form()));
    CHECK(!cross_check_with_flag_sextic(va, diag_c(Rat(1), Rat(2))));

    auto vs = classify_fourfold(sample_v18s());
    CHECK(cross_check_with_flag_sextic(vs, diag_c(Rat(1), Rat(1))));
    CHECK(!cross_check_with_flag_sextic(vs, c3_normal_form()));

    auto generic = classify_fourfold(sample_generic());
    CHECK(cross_check_with_flag_sextic(generic, diag_c(Rat(1), Rat(2))));
    CHECK(cross_check_with_flag_sextic(generic, cube_roots_representative()));
    CHECK(!cross_check_with_flag_sextic(generic, c2_normal_form()));
}

TEST_CASE("report serialization round-trips and is deterministic")
{
    auto rep = classify_fourfold(sample_v18a());
    nlohmann::json j = classification_report_to_json(rep);
    std::string once = j.dump();
    CHECK(nlohmann::json::parse(once).dump() == once);
    CHECK(classification_report_to_json(classify_fourfold(sample_v18a())).dump() == once);

    G2Element g = sample_generic();
    auto arr = g2_element_to_json(g);
    CHECK(g2_element_from_json(arr) == g);
}
