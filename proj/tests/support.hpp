#pragma once

// Shared helpers for the test suites: a deterministic RNG over small exact
// scalars, and independent oracles (Laplace determinant) used to cross-check
// the elimination-based routines.

#include <cstdint>
#include <random>
#include <vector>

#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"
#include "flaginv/quaternion.hpp"
#include "flaginv/rational.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    flaginv::Rational rational(long span = 9, long den_max = 5) {
        return flaginv::Rational(integer(-span, span), integer(1, den_max));
    }

    flaginv::Rational rational_nonzero(long span = 9, long den_max = 5) {
        for (;;) {
            flaginv::Rational r = rational(span, den_max);
            if (!r.is_zero()) return r;
        }
    }

    flaginv::GaussianRational gaussian(long span = 9, long den_max = 5) {
        return {rational(span, den_max), rational(span, den_max)};
    }

    flaginv::GaussianRational gaussian_nonzero(long span = 9, long den_max = 5) {
        for (;;) {
            flaginv::GaussianRational z = gaussian(span, den_max);
            if (!z.is_zero()) return z;
        }
    }

    flaginv::RationalQuaternion quaternion(long span = 5, long den_max = 3) {
        return {rational(span, den_max), rational(span, den_max),
                rational(span, den_max), rational(span, den_max)};
    }

    flaginv::RationalQuaternion quaternion_nonzero(long span = 5, long den_max = 3) {
        for (;;) {
            flaginv::RationalQuaternion q = quaternion(span, den_max);
            if (!q.is_zero()) return q;
        }
    }

    // Small integer entries keep elimination fast while exercising exactness.
    flaginv::Matrix matrix(std::size_t rows, std::size_t cols, long span = 4) {
        flaginv::Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = flaginv::GaussianRational(
                    flaginv::Rational(integer(-span, span)),
                    flaginv::Rational(integer(-1, 1)));
        return m;
    }

    flaginv::Matrix invertible(std::size_t n, long span = 4) {
        for (;;) {
            flaginv::Matrix m = matrix(n, n, span);
            if (!flaginv::det(m).is_zero()) return m;
        }
    }

    // det == 1: divide the first column of an invertible matrix by its det.
    flaginv::Matrix special_linear(std::size_t n, long span = 3) {
        flaginv::Matrix m = invertible(n, span);
        flaginv::GaussianRational d = flaginv::det(m);
        for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = m.at(i, 0) / d;
        return m;
    }

private:
    std::mt19937_64 eng_;
};

inline flaginv::Matrix minor_matrix(const flaginv::Matrix& m, std::size_t row, std::size_t col) {
    flaginv::Matrix out(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

// Cofactor expansion along the first row; independent of the elimination path.
inline flaginv::GaussianRational det_laplace(const flaginv::Matrix& m) {
    if (m.rows() == 0) return flaginv::GaussianRational(1);
    if (m.rows() == 1) return m.at(0, 0);
    flaginv::GaussianRational acc;
    long sign = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.at(0, j).is_zero())
            acc += flaginv::GaussianRational(sign) * m.at(0, j) * det_laplace(minor_matrix(m, 0, j));
        sign = -sign;
    }
    return acc;
}

inline flaginv::GaussianRational eval_poly(const std::vector<flaginv::GaussianRational>& coeff,
                                           const flaginv::GaussianRational& x) {
    flaginv::GaussianRational acc;
    for (const auto& c : coeff) acc = acc * x + c;
    return acc;
}

} // namespace testsupport
