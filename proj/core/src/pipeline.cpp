#include "fm18/pipeline.hpp"

#include <stdexcept>

namespace fm18 {

std::string to_string(ConeCount c)
{
    switch (c) {
    case ConeCount::TwoFamiliesPlusTwo:
        return "two one-parameter families plus two invariant cones";
    case ConeCount::Four: return "4";
    case ConeCount::Six: return "6";
    }
    return "?";
}

std::string to_string(SigmaSType s)
{
    switch (s) {
    case SigmaSType::ReducibleFirstKind: return "reducible of the first kind";
    case SigmaSType::TypeA1: return "del Pezzo sextic of type A1";
    case SigmaSType::SmoothDP6: return "smooth del Pezzo sextic";
    }
    return "?";
}

std::string to_string(VarietyName v)
{
    switch (v) {
    case VarietyName::V18s: return "V18s";
    case VarietyName::V18a: return "V18a";
    case VarietyName::Generic: return "generic V18";
    }
    return "?";
}

ClassificationReport classify_fourfold(const G2Element& g)
{
    const G2Structure& lie = g2();
    ClassificationReport rep;
    rep.orbit = lie.classify_element(g);
    rep.section_smooth = !rep.orbit.in_D_long && !g.is_zero();
    rep.cone_flexibility = "affine cones flexible in codimension one";
    if (!rep.section_smooth) return rep;

    Aut0Section a = aut0_of_section(rep.orbit);
    rep.aut0 = a;
    switch (a) {
    case Aut0Section::GL2:
        rep.variety_name = VarietyName::V18s;
        rep.full_aut = FullAut{"GL2(C) x| Z/2", "GL2(C) x| Z/2", true};
        rep.cubic_cone_count = ConeCount::TwoFamiliesPlusTwo;
        rep.sigma_s_type = SigmaSType::ReducibleFirstKind;
        rep.cone_flexibility = "affine cones flexible (and flexible in codimension one)";
        break;
    case Aut0Section::GaGm:
        rep.variety_name = VarietyName::V18a;
        rep.full_aut = FullAut{"(Ga x Gm) x| Z/2", "(Ga x Gm) x| Z/2", true};
        rep.cubic_cone_count = ConeCount::Four;
        rep.sigma_s_type = SigmaSType::TypeA1;
        break;
    case Aut0Section::Torus2:
        rep.variety_name = VarietyName::Generic;
        rep.full_aut = FullAut{"(Gm)^2", "(Gm)^2 x| Z/6", false};
        rep.cubic_cone_count = ConeCount::Six;
        rep.sigma_s_type = SigmaSType::SmoothDP6;
        rep.residual_symmetry =
            "cyclic of order dividing 6; which divisor occurs is left undetermined";
        break;
    case Aut0Section::SectionSingular:
        throw std::logic_error("smooth section cannot map to SectionSingular");
    }
    return rep;
}

bool cross_check_with_flag_sextic(const ClassificationReport& report, const TracelessMatrix3& c)
{
    if (!report.section_smooth || !report.sigma_s_type) return false;
    SurfaceType got = classify_section(c).surface_type;
    switch (*report.sigma_s_type) {
    case SigmaSType::ReducibleFirstKind: return got == SurfaceType::ReducibleFirstKind;
    case SigmaSType::TypeA1: return got == SurfaceType::A1;
    case SigmaSType::SmoothDP6:
        return got == SurfaceType::SmoothDP6_Z2 || got == SurfaceType::SmoothDP6_Z6;
    }
    return false;
}

G2Element sample_generic()
{
    const G2Structure& lie = g2();
    G2Element h = lie.cartan_element(Rat(1), Rat(1));
    auto [dl, ds] = lie.invariant_sextics(h);
    if (is_zero(dl) || is_zero(ds) || lie.centralizer_dim(h) != 2)
        throw std::logic_error("generic sample failed its certificate");
    return h;
}

G2Element sample_v18s()
{
    const G2Structure& lie = g2();
    // Cartan element killed by the short simple root only
    G2Element h = lie.cartan_element(Rat(0), Rat(1));
    auto [dl, ds] = lie.invariant_sextics(h);
    if (is_zero(dl) || !is_zero(ds) || lie.centralizer_dim(h) != 4)
        throw std::logic_error("subregular sample failed its certificate");
    return h;
}

G2Element sample_v18a()
{
    const G2Structure& lie = g2();
    G2Element h = lie.cartan_element(Rat(0), Rat(1));
    G2Element e = lie.root_vector(0); // e_{a1}, killed by h
    G2Element g = h + e;
    if (!lie.bracket(h, e).is_zero())
        throw std::logic_error("mixed sample: parts do not commute");
    auto [gs, gn] = lie.jordan_decomposition(g);
    auto [dl, ds] = lie.invariant_sextics(g);
    if (gn.is_zero() || gs.is_zero() || is_zero(dl) || !is_zero(ds) ||
        lie.centralizer_dim(g) != 2)
        throw std::logic_error("mixed sample failed its certificate");
    return g;
}

} // namespace fm18
