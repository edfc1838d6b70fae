#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hyper/errors.hpp"
#include "hyper/hnumber.hpp"

namespace hyper {

/// Dense square-or-rectangular matrix over a ring T, row-major.
/// Used with T = HNumber (hyperbolic matrices), std::complex<double>
/// (split components, generator bases) and AlgebraElement (internal-space
/// valued gauge fields).
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n, const T& one) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw SizeMismatch("Mat: product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    Mat transposed() const {
        Mat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <typename F>
    auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
        Mat<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("Mat: shape mismatch");
    }

    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<T> data_;
};

using HMatrix = Mat<HNumber>;
using CMatrix = Mat<std::complex<double>>;

inline double entry_norm_sq(double t) { return t * t; }
inline double entry_norm_sq(const std::complex<double>& t) { return std::norm(t); }
inline double entry_norm_sq(const HNumber& t) { return t.norm_sq(); }

/// Frobenius-style norm built from the componentwise Euclidean norms.
template <typename T>
double frobenius_norm(const Mat<T>& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += entry_norm_sq(m(i, j));
    return std::sqrt(s);
}

/// Split an HNumber matrix into its two complex null-plane components.
inline std::pair<CMatrix, CMatrix> split(const HMatrix& m) {
    CMatrix plus(m.rows(), m.cols());
    CMatrix minus(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const SplitPair s = split(m(i, j));
            plus(i, j) = s.plus;
            minus(i, j) = s.minus;
        }
    return {plus, minus};
}

inline HMatrix join(const CMatrix& plus, const CMatrix& minus) {
    if (plus.rows() != minus.rows() || plus.cols() != minus.cols())
        throw SizeMismatch("join: component shape mismatch");
    HMatrix out(plus.rows(), plus.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = join(SplitPair{plus(i, j), minus(i, j)});
    return out;
}

} // namespace hyper
