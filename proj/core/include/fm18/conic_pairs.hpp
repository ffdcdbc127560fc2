#pragma once

#include "fm18/ratmatrix.hpp"

#include <string>
#include <vector>

namespace fm18 {

/// Plane conic as a symmetric Gram matrix up to scalar.
class Conic {
public:
    explicit Conic(RatMatrix gram);
    /// Upper triangle (a00, a01, a02, a11, a12, a22).
    static Conic from_upper_triangle(const RatVec& six);

    const RatMatrix& gram() const { return g_; }
    bool is_smooth() const { return !is_zero(determinant(g_)); }
    bool proportional_to(const Conic& o) const;
    /// Value of the quadratic form at v.
    Rat eval(const RatVec& v) const;

private:
    RatMatrix g_;
};

enum class TangencyType { Equal, Quadritangent, Bitangent, NotEvenTouching };

std::string to_string(TangencyType t);

/// Multiset of intersection multiplicities of J against the smooth base
/// conic U, summing to 4. Computed by pulling J back along a rational
/// parametrization of U and reading off the root multiplicities of the
/// resulting binary quartic (squarefree decomposition, root at infinity
/// included).
std::vector<int> intersection_multiplicities(const Conic& u, const Conic& j);

TangencyType classify_pair(const Conic& u, const Conic& j);

enum class PairGroup { PGL2, Ga_semidirect_Z2, Gm_semidirect_Z2 };

std::string to_string(PairGroup g);

struct PairStabilizer {
    PairGroup group;
    /// Explicit 3x3 generators in the normal-form coordinates (a sample of
    /// the 1-parameter family plus the involution); empty for PGL2.
    std::vector<RatMatrix> generators;
    std::string family; // descriptor of the 1-parameter family
};

/// Stabilizer of the pair in the normal-form coordinates where the base
/// conic is x^2 + yz. Throws for NotEvenTouching.
PairStabilizer pair_stabilizer(TangencyType t);

enum class Aut0FromPair { GL2, GaGm, Torus2 };

std::string to_string(Aut0FromPair a);

Aut0FromPair pair_to_aut0V(TangencyType t);

/// g preserves the conic exactly: g^t * gram * g proportional to gram.
bool preserves_conic(const RatMatrix& g, const Conic& c);

/// Normal forms: the base conic x^2 + yz and its two touching partners.
Conic upsilon_normal_form();              // x^2 + yz
Conic bitangent_partner(const Rat& a, const Rat& b);   // a x^2 + b yz
Conic quadritangent_partner(const Rat& a, const Rat& b); // a (x^2 + yz) + b z^2

} // namespace fm18
