#pragma once

#include "fm18/ratmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fm18 {

/// Hyperplane datum for a section of the flag variety of rank-1 traceless
/// 3x3 matrices: X_C = { [M] : rk M = 1, tr M = 0, tr(M C) = 0 }.
class TracelessMatrix3 {
public:
    explicit TracelessMatrix3(RatMatrix m);
    static TracelessMatrix3 from_entries(const RatVec& nine_row_major);

    const RatMatrix& matrix() const { return m_; }

private:
    RatMatrix m_;
};

/// Conjugacy type of a nonzero traceless 3x3 matrix, decided by rational
/// predicates only (char-poly coefficients, discriminant, minimal-polynomial
/// degree, C^2 = 0).
enum class JordanLabel {
    DiagDoubleEigenvalue, // diag(a,a,-2a)
    CubeRootsTriple,      // eigenvalues proportional to 1, w, w^2
    GenericDistinct,      // three distinct eigenvalues, otherwise generic
    JordanBlockPlusEigen, // 2-block plus a distinct eigenvalue
    RegularNilpotent,     // single 3-block
    RankOneNilpotent,     // C != 0, C^2 = 0
};

enum class SurfaceType {
    ReducibleFirstKind,
    SmoothDP6_Z6,
    SmoothDP6_Z2,
    A1,
    A2,
    ReducibleSecondKind,
};

struct SexticReport {
    SurfaceType surface_type;
    std::string aut_descriptor;
    int aut0_dim = 0;
    std::optional<long> line_count; // nullopt = infinitely many lines
    std::string sing_descriptor;
    std::string dual_graph;
};

std::string to_string(JordanLabel l);
std::string to_string(SurfaceType t);

JordanLabel jordan_label(const TracelessMatrix3& c);

SexticReport classify_section(const TracelessMatrix3& c);

/// Number of lines on X_C, or nullopt for infinitely many. Lines are the
/// ruling fibers over the left and right eigendirections of C; an eigenvalue
/// with a 2-dimensional eigenspace contributes a pencil.
std::optional<long> count_lines(const TracelessMatrix3& c);

/// dim { X in gl3 : XC - CX in span(C) } - 1, the Lie-algebra dimension of
/// the subgroup of PGL3 preserving the pair (Sigma, X_C).
int pcent_lie_dim(const TracelessMatrix3& c);

/// A singular point of X_C: a pair of a left eigenvector x and a right
/// eigenvector y for one common eigenvalue with x . y = 0.
struct FlagPoint {
    RatVec x, y;
    Rat eigenvalue;
};

struct SingularLocus {
    std::vector<FlagPoint> points; // the isolated rational singular points
    bool is_curve = false;         // singular along a curve (reducible types)
    std::string certificate;       // count/type certificate from the classification
};

SingularLocus find_singular_points(const TracelessMatrix3& c);

/// The six normal forms: diag(a, b, -a-b) and the three exceptional matrices.
TracelessMatrix3 diag_c(const Rat& a, const Rat& b);
TracelessMatrix3 c1_normal_form(); // [[1,1,0],[0,1,0],[0,0,-2]]
TracelessMatrix3 c2_normal_form(); // upper shift, regular nilpotent
TracelessMatrix3 c3_normal_form(); // elementary E12, rank-one nilpotent
/// Companion matrix of t^3 - 1: a rational stand-in for diag(1, w, w^2).
TracelessMatrix3 cube_roots_representative();

} // namespace fm18
