#pragma once

#include <cstddef>
#include <vector>

#include "epchar/errors.hpp"
#include "epchar/numeric.hpp"

namespace epchar {

// Minimal dense matrix over an exact scalar; all we need is arithmetic,
// determinants and exact comparisons at desk-scale sizes.
template <typename T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool operator==(const Mat&) const = default;

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < data.size(); ++i) r.data[i] = r.data[i] + o.data[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < data.size(); ++i) r.data[i] = r.data[i] - o.data[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols != o.rows) fail(errc::dimension_mismatch, "matrix product shape");
        Mat r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& v : r.data) v = v * s;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols) fail(errc::dimension_mismatch, "matrix apply shape");
        std::vector<T> r(rows, T(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }
};

using RationalMatrix = Mat<Rational>;
using GaussianMatrix = Mat<GaussianRational>;

// Exact determinant by fraction-free elimination over the rationals.
inline Rational determinant(const RationalMatrix& m) {
    if (m.rows != m.cols) fail(errc::dimension_mismatch, "determinant of nonsquare matrix");
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < a.cols; ++col) {
        std::size_t pivot = col;
        while (pivot < a.rows && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < a.rows; ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < a.cols; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

// Positive semidefiniteness of a symmetric matrix, by exact Schur
// complements (LDL^T pivots must be nonnegative, zero pivots need zero rows).
inline bool positive_semidefinite(const RationalMatrix& m) {
    if (m.rows != m.cols) return false;
    RationalMatrix a = m;
    std::size_t n = a.rows;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) < 0) return false;
        if (a(k, k) == 0) {
            for (std::size_t j = k; j < n; ++j)
                if (a(k, j) != 0) return false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) = 0;
    }
    return true;
}

}  // namespace epchar
