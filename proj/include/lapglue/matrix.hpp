#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "lapglue/bigint.hpp"
#include "lapglue/error.hpp"

namespace lapglue {

// Dense row-major matrix. Value semantics; entries default-constructed to T{}.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        require(rows >= 0 && cols >= 0, errc::dimension_mismatch, "negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        require(cols_ == rhs.rows_, errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix& operator+=(const Matrix& rhs) {
        require(rows_ == rhs.rows_ && cols_ == rhs.cols_, errc::dimension_mismatch,
                "matrix sum shape mismatch");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    // Deletes row `r` and column `c`.
    Matrix minor_at(int r, int c) const {
        require(r >= 0 && r < rows_ && c >= 0 && c < cols_, errc::index_out_of_range,
                "minor index out of range");
        Matrix out(rows_ - 1, cols_ - 1);
        for (int i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (int j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj) = (*this)(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

inline bool is_symmetric(const IntMatrix& m) {
    if (!m.square()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

template <typename T>
Matrix<double> to_real(const Matrix<T>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

} // namespace lapglue
