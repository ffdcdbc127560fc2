#include "fm18/ratmatrix.hpp"

#include <stdexcept>

namespace fm18 {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, RatVec entries)
    : rows_(rows), cols_(cols), e_(std::move(entries))
{
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match matrix shape");
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (fm18::is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& a) const
{
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * a;
    return r;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Rat RatMatrix::trace() const
{
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : e_)
        if (!fm18::is_zero(x)) return false;
    return true;
}

RatVec RatMatrix::apply(const RatVec& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    RatVec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!fm18::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Row echelon reduction in place. Returns the pivot columns. When
// `reduced` is set the pivots are normalized to 1 and cleared above.
std::vector<std::size_t> echelon(RatMatrix& m, bool reduced)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // pick the structurally simplest nonzero pivot in this column
        std::size_t best = m.rows();
        std::size_t best_size = 0;
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            std::size_t sz = mpz_sizeinbase(m.at(i, col).get_num().get_mpz_t(), 2) +
                             mpz_sizeinbase(m.at(i, col).get_den().get_mpz_t(), 2);
            if (best == m.rows() || sz < best_size) { best = i; best_size = sz; }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(best, j), m.at(row, j));
        const Rat p = m.at(row, col);
        if (reduced)
            for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= p;
        std::size_t start = reduced ? 0 : row + 1;
        for (std::size_t i = start; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            Rat f = m.at(i, col) / m.at(row, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(const RatMatrix& m)
{
    RatMatrix w = m;
    return echelon(w, false).size();
}

std::vector<RatVec> kernel_basis(const RatMatrix& m)
{
    RatMatrix w = m;
    auto pivots = echelon(w, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = echelon(aug, true);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RatVec x(a.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = echelon(aug, true);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Rat determinant(const RatMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix w = m;
    const std::size_t n = w.rows();
    Rat det(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = row; i < n; ++i)
            if (!is_zero(w.at(i, col))) { piv = i; break; }
        if (piv == n) return Rat(0);
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(row, j));
            det = -det;
        }
        det *= w.at(row, col);
        for (std::size_t i = row + 1; i < n; ++i) {
            if (is_zero(w.at(i, col))) continue;
            Rat f = w.at(i, col) / w.at(row, col);
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(row, j);
        }
        ++row;
    }
    return det;
}

UniPoly char_poly(const RatMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    RatVec c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - (k - 1)];
            mk = m * shifted;
        }
        c[n - k] = -mk.trace() / Rat(static_cast<long>(k));
    }
    return UniPoly{std::move(c)};
}

UniPoly minimal_polynomial(const RatMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("minimal_polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<RatVec> powers;
    powers.push_back(RatMatrix::identity(n).vectorized());
    RatMatrix p = m;
    for (std::size_t deg = 1; deg <= n; ++deg) {
        // is M^deg a combination of lower powers?
        RatMatrix sys(n * n, deg);
        for (std::size_t j = 0; j < deg; ++j)
            for (std::size_t i = 0; i < n * n; ++i)
                sys.at(i, j) = powers[j][i];
        auto sol = solve_linear(sys, p.vectorized());
        if (sol) {
            RatVec coeffs(deg + 1, Rat(0));
            coeffs[deg] = 1;
            for (std::size_t j = 0; j < deg; ++j) coeffs[j] = -(*sol)[j];
            return UniPoly{std::move(coeffs)};
        }
        powers.push_back(p.vectorized());
        p = p * m;
    }
    throw std::logic_error("minimal polynomial not found below dimension bound");
}

RatMatrix eval_poly(const UniPoly& p, const RatMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix acc(n, n);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c[i];
    }
    return acc;
}

} // namespace fm18
