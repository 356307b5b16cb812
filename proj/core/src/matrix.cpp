#include "flaginv/matrix.hpp"

#include "flaginv/errors.hpp"

namespace flaginv {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("shape", "ragged matrix initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::column(const std::vector<GaussianRational>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

Matrix Matrix::row(const std::vector<GaussianRational>& entries) {
    Matrix m(1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
    return m;
}

Matrix Matrix::conj_transpose() const { return conjugate().transpose(); }

GaussianRational Matrix::trace() const {
    if (!is_square()) throw DomainError("shape", "trace of non-square matrix");
    GaussianRational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::col(std::size_t j) const { return cols_slice(j, 1); }

Matrix Matrix::cols_slice(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DomainError("shape", "column slice out of range");
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m.at(i, j) = at(i, first + j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square() || rows_ == 0) return false;
    const GaussianRational& d = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? d : GaussianRational())) return false;
    return !d.is_zero();
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("shape", "matrix sum shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("shape", "matrix difference shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("shape", "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Matrix operator*(const GaussianRational& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = s * a.e_[k];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DomainError("shape", "hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DomainError("shape", "vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Echelon row_echelon(const Matrix& a) {
    Echelon ech{a, {}, 1};
    Matrix& m = ech.mat;
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t hit = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) { hit = r; break; }
        if (hit == m.rows()) continue;
        if (hit != pr) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(hit, j), m.at(pr, j));
            ech.sign = -ech.sign;
        }
        for (std::size_t r = pr + 1; r < m.rows(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c) / m.at(pr, c);
            m.at(r, c) = GaussianRational();
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(pr, j);
        }
        ech.pivot_cols.push_back(c);
        ++pr;
    }
    return ech;
}

std::size_t rank(const Matrix& a) { return row_echelon(a).pivot_cols.size(); }

GaussianRational det(const Matrix& a) {
    if (!a.is_square()) throw DomainError("shape", "determinant of non-square matrix");
    Echelon ech = row_echelon(a);
    if (ech.pivot_cols.size() < a.rows()) return GaussianRational();
    GaussianRational d(ech.sign);
    for (std::size_t i = 0; i < a.rows(); ++i) d *= ech.mat.at(i, i);
    return d;
}

namespace {

// Reduced row echelon: pivots normalized to 1 and cleared above.
Echelon rref(const Matrix& a) {
    Echelon ech = row_echelon(a);
    Matrix& m = ech.mat;
    for (std::size_t p = ech.pivot_cols.size(); p-- > 0;) {
        std::size_t c = ech.pivot_cols[p];
        GaussianRational inv = m.at(p, c).reciprocal();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(p, j) *= inv;
        for (std::size_t r = 0; r < p; ++r) {
            if (m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(p, j);
        }
    }
    return ech;
}

} // namespace

Matrix kernel_basis(const Matrix& a) {
    Echelon ech = rref(a);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (p < ech.pivot_cols.size() && ech.pivot_cols[p] == c) { ++p; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix basis(a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = GaussianRational(1);
        for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
            basis.at(ech.pivot_cols[p], k) = -ech.mat.at(p, f);
    }
    return basis;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (!a.is_square()) throw DomainError("shape", "solve needs a square matrix");
    if (a.rows() != b.rows()) throw DomainError("shape", "solve shape mismatch");
    Echelon ech = rref(hstack(a, b));
    if (ech.pivot_cols.size() != a.rows() || (a.rows() > 0 && ech.pivot_cols.back() >= a.cols()))
        throw DomainError("singular", "solve with singular matrix");
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = ech.mat.at(i, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

std::vector<GaussianRational> char_poly(const Matrix& a) {
    if (!a.is_square()) throw DomainError("shape", "characteristic polynomial of non-square matrix");
    std::size_t n = a.rows();
    // Faddeev-LeVerrier: exact over Q(i), divisions only by integers.
    std::vector<GaussianRational> coeff(n + 1);
    coeff[0] = GaussianRational(1);
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == 1) {
            m = a;
        } else {
            Matrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeff[k - 1];
            m = a * shifted;
        }
        coeff[k] = -(m.trace() / GaussianRational(static_cast<long>(k)));
    }
    return coeff;
}

Matrix quat_to_complex_2x2(const RationalQuaternion& q) {
    GaussianRational z(q.a(), q.b());
    GaussianRational w(q.c(), q.d());
    return Matrix{{z, w}, {-w.conj(), z.conj()}};
}

bool is_semisimple_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DomainError("shape", "semisimplicity test needs a 2x2 matrix");
    if (m.is_scalar() || m.is_zero()) return true;
    GaussianRational tr = m.trace();
    return !(tr * tr - GaussianRational(4) * det(m)).is_zero();
}

} // namespace flaginv
