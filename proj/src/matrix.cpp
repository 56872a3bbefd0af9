#include "dquad/matrix.hpp"

#include "dquad/errors.hpp"

#include <utility>

namespace dquad {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Domain& domain)
    : rows_(rows), cols_(cols), domain_(domain), data_(rows * cols, domain.zero()) {}

Matrix Matrix::identity(std::size_t n, const Domain& domain) {
    Matrix m(n, n, domain);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = domain.one();
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Domain& domain) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols, domain);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c].domain() != domain) throw DomainError("matrix entry outside the matrix domain");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_, domain_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, domain_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, domain_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::to_domain(const Domain& d) const {
    Matrix out(rows_, cols_, d);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].to_domain(d);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.domain_ != b.domain_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
        std::size_t sel = prow;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(prow, j));
        Scalar inv = a(prow, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(prow, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == prow || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (!a(prow, j).is_zero()) a(r, j) -= f * a(prow, j);
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nfree = m.cols() - pivots.size();
    Matrix k(m.cols(), nfree, m.domain());
    std::size_t idx = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        k(f, idx) = m.domain().one();
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], idx) = -r(i, f);
        ++idx;
    }
    return k;
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw SingularMatrixError("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.domain());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.domain().one();
    }
    auto [r, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
    Matrix inv(n, n, m.domain());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace dquad
