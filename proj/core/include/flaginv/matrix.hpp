#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "flaginv/gaussian.hpp"
#include "flaginv/quaternion.hpp"

namespace flaginv {

// Dense matrix over Q(i), row-major.  Immutable by convention once handed to
// the flag/configuration layer; all decompositions are exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix column(const std::vector<GaussianRational>& entries);
    static Matrix row(const std::vector<GaussianRational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix conj_transpose() const;
    GaussianRational trace() const;
    Matrix col(std::size_t j) const;
    Matrix cols_slice(std::size_t first, std::size_t count) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    // Scalar multiple of the identity; the projective-triviality test.
    bool is_scalar() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussianRational> e_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Row echelon by exact Gaussian elimination.  Pivot choice: within each
// column, the first nonzero entry scanning top to bottom.  `sign` tracks row
// swaps so det(a) = sign * prod of pivots when a is square.
struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    int sign;
};
Echelon row_echelon(const Matrix& a);

std::size_t rank(const Matrix& a);
GaussianRational det(const Matrix& a);

// Columns form a basis of { x : a x = 0 }; empty (n x 0) when injective.
// Deterministic: free coordinates taken in increasing order.
Matrix kernel_basis(const Matrix& a);

// Unique solution of a x = b for square invertible a.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

// Monic characteristic polynomial, coefficients from degree n down to 0.
std::vector<GaussianRational> char_poly(const Matrix& a);

// [[a+bi, c+di], [-c+di, a-bi]]; multiplicative embedding of the quaternions,
// det = norm_sq.
Matrix quat_to_complex_2x2(const RationalQuaternion& q);

// 2x2 semisimplicity: scalar, or distinct eigenvalues (tr^2 - 4 det != 0).
bool is_semisimple_2x2(const Matrix& m);

} // namespace flaginv
