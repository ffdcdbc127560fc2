#pragma once

#include "fm18/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace fm18 {

/// Degree-4 intersection numbers of two divisor-class generators on a
/// rank-2 lattice: moments[i] is the value of G0^(4-i) * G1^i.
struct MomentTable {
    std::string g0, g1;
    std::array<long, 5> moments{};
};

/// Polynomial in the two generators with rational coefficients, canonical
/// (sorted monomials, no zero coefficients).
class ClassExpr {
public:
    ClassExpr() = default;
    static ClassExpr generator(int which); // 0 -> G0, 1 -> G1
    static ClassExpr constant(const Rat& c);

    ClassExpr operator+(const ClassExpr& o) const;
    ClassExpr operator-(const ClassExpr& o) const;
    ClassExpr operator*(const ClassExpr& o) const;
    ClassExpr operator-() const;
    ClassExpr pow(int e) const;
    ClassExpr scaled(const Rat& a) const;

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    std::string to_string(const std::string& v0, const std::string& v1) const;

private:
    // (i, j) -> coefficient of G0^i G1^j
    std::map<std::pair<int, int>, Rat> terms_;
    void prune();
};

/// Expand the product of the factors and contract against the moments.
/// The product must be homogeneous of total degree exactly 4.
Rat evaluate(const MomentTable& t, const std::vector<ClassExpr>& factors);

/// (H*, A~) side: blowup of the quintic del Pezzo fourfold.
MomentTable builtin_w_table();
/// (L*, B~) side: blowup of the genus-10 fourfold; the fifth moment is the
/// stored derived value B~^4 = 1, kept independent of the identities that
/// check it.
MomentTable builtin_v_table();

struct IdentityCheck {
    std::string name;
    Rat expected;
    Rat computed;
    bool pass = false;
};

/// Every intersection-number identity the two Sarkisov links rely on,
/// checked exactly. Failures are reported, not thrown.
std::vector<IdentityCheck> verify_ledger_identities();

/// Parse an expression like "(2H-A)^3*(H-A)" over the table's generator
/// letters. Grammar: sum of products of powered primaries; rationals are
/// integers or p/q; parentheses as usual.
ClassExpr parse_class_expr(const std::string& src, const std::string& v0, const std::string& v1);

} // namespace fm18
