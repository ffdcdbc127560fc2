#pragma once

#include "fm18/rational.hpp"
#include "fm18/unipoly.hpp"

#include <optional>
#include <vector>

namespace fm18 {

/// Dense matrix over the rationals, row major. All elimination routines are
/// exact; there is no floating point anywhere on a classification path.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    RatMatrix(std::size_t rows, std::size_t cols, RatVec entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const RatVec& entries() const { return e_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& a) const;
    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transpose() const;
    Rat trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    RatVec apply(const RatVec& v) const;
    /// Flattened row-major copy of the entries (used to compare matrix
    /// spans, e.g. for minimal-polynomial degrees).
    RatVec vectorized() const { return e_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatVec e_;
};

std::size_t matrix_rank(const RatMatrix& m);

/// Basis of the right null space; vectors are exact and the count is
/// cols - rank.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

/// One exact solution of A x = b, or nullopt when the system is
/// inconsistent. The zero solution comes back as a vector of zeros, which is
/// distinct from nullopt by construction.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

Rat determinant(const RatMatrix& m);

/// det(tI - M) by the Faddeev-LeVerrier recurrence, exact over the rationals.
UniPoly char_poly(const RatMatrix& m);

/// Monic minimal polynomial via the first linear dependence among
/// I, M, M^2, ...
UniPoly minimal_polynomial(const RatMatrix& m);

/// p(M) by Horner.
RatMatrix eval_poly(const UniPoly& p, const RatMatrix& m);

} // namespace fm18
