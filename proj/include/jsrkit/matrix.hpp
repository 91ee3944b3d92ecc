#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace jsrkit {

template <Scalar T>
using Vector = std::vector<T>;

/**
 * @brief Dense square matrix with row-major storage.
 *
 * Entries are checked for finiteness on construction from external data;
 * arithmetic results are not re-checked.
 */
template <Scalar T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    /// Zero matrix of order @p n.
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T{}) {}

    Matrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
        if (data_.size() != n_ * n_) {
            throw DimensionError("matrix data has " + std::to_string(data_.size()) +
                                 " entries, expected " + std::to_string(n_ * n_));
        }
        check_finite();
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw DimensionError("matrix literal is not square");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
        check_finite();
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T{1};
        }
        return m;
    }

    std::size_t dim() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const T> entries() const noexcept { return data_; }
    std::span<T> entries() noexcept { return data_; }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                out(j, i) = conj_of((*this)(i, j));
            }
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T{}; });
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& c) {
        for (auto& x : data_) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    void require_same_dim(const Matrix& other) const {
        if (other.n_ != n_) {
            throw DimensionError("matrix dimension mismatch: " + std::to_string(n_) + " vs " +
                                 std::to_string(other.n_));
        }
    }

private:
    void check_finite() const {
        for (const auto& x : data_) {
            if (!is_finite(x)) {
                throw NonFiniteError("matrix entry is not finite");
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Standard matrix product a*b.
template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim();
    Matrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    return matmul(a, b);
}

template <Scalar T>
Vector<T> apply(const Matrix<T>& a, std::span<const T> v) {
    if (v.size() != a.dim()) {
        throw DimensionError("vector length " + std::to_string(v.size()) +
                             " does not match matrix order " + std::to_string(a.dim()));
    }
    const std::size_t n = a.dim();
    Vector<T> out(n, T{});
    for (std::size_t i = 0; i < n; ++i) {
        T acc{};
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

template <Scalar T>
Matrix<T> matrix_power(const Matrix<T>& a, unsigned p) {
    Matrix<T> result = Matrix<T>::identity(a.dim());
    Matrix<T> base = a;
    while (p > 0) {
        if (p & 1U) result = matmul(result, base);
        p >>= 1U;
        if (p > 0) base = matmul(base, base);
    }
    return result;
}

template <Scalar T>
Matrix<complex> to_complex(const Matrix<T>& a) {
    if constexpr (is_complex_v<T>) {
        return a;
    } else {
        std::vector<complex> data(a.entries().begin(), a.entries().end());
        return Matrix<complex>(a.dim(), std::move(data));
    }
}

/// Frobenius norm.
template <Scalar T>
real frobenius_norm(const Matrix<T>& a) {
    real s = 0;
    for (const auto& x : a.entries()) s += abs2_of(x);
    return std::sqrt(s);
}

/// Largest entrywise modulus of a - b.
template <Scalar T>
real max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    a.require_same_dim(b);
    real m = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, abs_of(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

template <Scalar T>
real vector_norm2(std::span<const T> v) {
    real s = 0;
    for (const auto& x : v) s += abs2_of(x);
    return std::sqrt(s);
}

} // namespace jsrkit
