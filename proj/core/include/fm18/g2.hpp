#pragma once

#include "fm18/ratmatrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fm18 {

/// A root m*a1 + n*a2 of the G2 root system, in simple-root coordinates.
struct G2Root {
    int m = 0, n = 0;
    bool operator==(const G2Root&) const = default;
};

/// The G2 root system with the Bourbaki normalization
/// (a1,a1) = 2, (a2,a2) = 6, (a1,a2) = -3. Six long and six short roots.
class RootSystemG2 {
public:
    RootSystemG2();

    static constexpr int root_count = 12;
    static constexpr int positive_count = 6;

    const std::array<G2Root, root_count>& roots() const { return roots_; }
    /// Index into roots() or -1 when (m, n) is not a root.
    int index_of(int m, int n) const;
    bool is_root(int m, int n) const { return index_of(m, n) >= 0; }

    static long inner(const G2Root& a, const G2Root& b);
    static long norm2(const G2Root& a) { return inner(a, a); }
    static bool is_long(const G2Root& a) { return norm2(a) == 6; }
    /// Cartan pairing <a, ai^vee> for the simple coroot i in {0, 1}.
    static long pairing_with_simple_coroot(const G2Root& a, int i);

    std::vector<int> long_indices() const;
    std::vector<int> short_indices() const;

private:
    std::array<G2Root, root_count> roots_;
};

/// Element of g2 as 14 exact coordinates in the fixed basis
/// (h1, h2, then root vectors in the order of RootSystemG2::roots()).
struct G2Element {
    std::array<Rat, 14> c{};

    static G2Element zero() { return {}; }
    bool is_zero() const;
    G2Element operator+(const G2Element& o) const;
    G2Element operator-(const G2Element& o) const;
    G2Element scaled(const Rat& a) const;
    bool operator==(const G2Element& o) const = default;
};

enum class OrbitTag {
    Zero,
    RegularSemisimple,
    SubregularSemisimple,
    RegularMixed,
    OtherSingular,
    Nilpotent,
};

struct OrbitClass {
    OrbitTag tag = OrbitTag::Zero;
    int centralizer_dim = 14;
    bool in_D_long = true;
    bool in_D_short = true;
    /// For nilpotent elements the orbit is pinned down by the centralizer
    /// dimension (2, 4, 6 or 8); zero otherwise.
    int nilpotent_kind = 0;
};

enum class Aut0Section { GL2, GaGm, Torus2, SectionSingular };

std::string to_string(OrbitTag t);
std::string to_string(Aut0Section a);

/// The Lie algebra g2 in a Chevalley basis: 14 basis elements with integer
/// structure constants, built from the root system alone.
///
/// Construction: |N_{a,b}| = p+1 is forced by the root strings; signs of the
/// extraspecial pairs are set positive; the remaining constants follow from
/// antisymmetry, N_{-a,-b} = -N_{a,b}, and the zero-sum-triple proportions.
/// Any sign the relations leave free is resolved by searching the two
/// candidates against the Jacobi identity on all basis triples. The finished
/// table is re-verified (Jacobi, root-space relations, Killing form
/// ad-invariance) and the build aborts with the failing triple otherwise.
class G2Structure {
public:
    static constexpr int dim = 14;
    static constexpr int rank = 2;

    const RootSystemG2& root_system() const { return rs_; }

    /// Bracket of basis elements i, j as a 14-vector of integers.
    const std::array<long, dim>& basis_bracket(int i, int j) const { return table_[i][j]; }
    const RatMatrix& killing_form() const { return killing_; }

    /// Basis index of the root vector e_alpha for roots()[k].
    static int root_basis_index(int k) { return 2 + k; }

    G2Element bracket(const G2Element& x, const G2Element& y) const;
    RatMatrix ad_matrix(const G2Element& g) const;
    Rat killing(const G2Element& x, const G2Element& y) const;

    /// Cartan element with prescribed simple-root values a = a1(h), b = a2(h).
    G2Element cartan_element(const Rat& a, const Rat& b) const;
    /// Root vector e_alpha for roots()[k].
    G2Element root_vector(int k) const;
    /// exp(ad(x)) for x with nilpotent ad; exact finite series.
    RatMatrix exp_ad_nilpotent(const G2Element& x) const;

    int centralizer_dim(const G2Element& g) const;
    std::pair<G2Element, G2Element> jordan_decomposition(const G2Element& g) const;
    /// (delta_long, delta_short), normalized so that on Cartan elements they
    /// equal the literal products of the long (short) root values.
    std::pair<Rat, Rat> invariant_sextics(const G2Element& g) const;
    OrbitClass classify_element(const G2Element& g) const;

    /// Which of the two degree-6 candidate invariants were calibrated
    /// ("e2^3,e6" or the fallback "e2*e4,e6").
    const std::string& calibration_basis() const { return calib_name_; }

    /// JSON dump of the structure-constant table for external auditing.
    std::string dump_json() const;

private:
    friend const G2Structure& g2();
    G2Structure();

    RootSystemG2 rs_;
    std::array<std::array<std::array<long, dim>, dim>, dim> table_{};
    RatMatrix killing_;
    RatMatrix ad_map_; // 196 x 14, column j = vec(ad basis_j)
    // calibrated 2x2 change of basis from candidate invariants to
    // (delta_long, delta_short)
    std::array<Rat, 4> calib_{};
    bool calib_fallback_ = false;
    std::string calib_name_;

    std::pair<Rat, Rat> candidate_invariants(const G2Element& g) const;
    void build_table();
    void verify_table() const;
    void calibrate_sextics();
};

/// The shared immutable structure (built once, thread-safe afterwards).
const G2Structure& g2();

Aut0Section aut0_of_section(const OrbitClass& cls);

/// Literal root products on a Cartan element with a = a1(h), b = a2(h):
/// delta_short = -(a (a+b) (2a+b))^2, delta_long = -(b (3a+b) (3a+2b))^2.
std::pair<Rat, Rat> cartan_root_products(const Rat& a, const Rat& b);

} // namespace fm18
