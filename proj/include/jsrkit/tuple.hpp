#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace jsrkit {

/**
 * @brief An ordered r-tuple (A_1, ..., A_r) of d x d matrices.
 *
 * Immutable after construction. Slots are addressed 1-based through
 * operator[] with a Letter, matching word letters.
 */
template <Scalar T>
class MatrixTuple {
public:
    using scalar_type = T;

    explicit MatrixTuple(std::vector<Matrix<T>> matrices) : matrices_(std::move(matrices)) {
        if (matrices_.empty()) throw ArgumentError("matrix tuple must contain at least one matrix");
        const std::size_t d = matrices_.front().dim();
        if (d == 0) throw DimensionError("matrix dimension must be positive");
        for (const auto& m : matrices_) {
            if (m.dim() != d) throw DimensionError("tuple matrices must share one dimension");
        }
    }

    static constexpr Field field() noexcept { return field_of<T>; }
    std::size_t size() const noexcept { return matrices_.size(); }
    std::size_t dim() const noexcept { return matrices_.front().dim(); }

    const Matrix<T>& operator[](Letter i) const {
        if (i < 1 || i > matrices_.size()) {
            throw ArgumentError("letter " + std::to_string(i) + " outside tuple of size " +
                                std::to_string(matrices_.size()));
        }
        return matrices_[i - 1];
    }

    const std::vector<Matrix<T>>& matrices() const noexcept { return matrices_; }

    /// max_i of the Euclidean operator norm of A_i.
    real max_op_norm() const {
        real m = 0;
        for (const auto& a : matrices_) m = std::max(m, op_norm(a));
        return m;
    }

private:
    std::vector<Matrix<T>> matrices_;
};

using RealTuple = MatrixTuple<real>;
using ComplexTuple = MatrixTuple<complex>;
using AnyTuple = std::variant<RealTuple, ComplexTuple>;

/**
 * @brief Product A_{w_n} ... A_{w_1} along w.
 *
 * The first letter indexes the rightmost factor. Every product in the
 * library goes through this helper or through left-extension of a prefix
 * product, which has the same ordering.
 */
template <Scalar T>
Matrix<T> product_along(const MatrixTuple<T>& t, const Word& w) {
    if (w.max_letter() > t.size()) {
        throw ArgumentError("word " + to_string(w) + " uses letters beyond tuple size " + std::to_string(t.size()));
    }
    Matrix<T> p = t[w[0]];
    for (std::size_t k = 1; k < w.size(); ++k) p = matmul(t[w[k]], p);
    return p;
}

template <Scalar T>
void require_same_shape(const MatrixTuple<T>& a, const MatrixTuple<T>& b) {
    if (a.size() != b.size() || a.dim() != b.dim()) {
        throw DimensionError("tuples differ in shape: (r=" + std::to_string(a.size()) + ", d=" +
                             std::to_string(a.dim()) + ") vs (r=" + std::to_string(b.size()) +
                             ", d=" + std::to_string(b.dim()) + ")");
    }
}

/// max_i |||A_i - B_i|||.
template <Scalar T>
real tuple_distance(const MatrixTuple<T>& a, const MatrixTuple<T>& b) {
    require_same_shape(a, b);
    real m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, op_norm(a.matrices()[i] - b.matrices()[i]));
    return m;
}

template <Scalar T>
MatrixTuple<T> scale(const MatrixTuple<T>& t, real c) {
    if (!(c > 0)) throw ArgumentError("tuple scale factor must be positive");
    std::vector<Matrix<T>> out;
    out.reserve(t.size());
    for (const auto& m : t.matrices()) out.push_back(m * T(c));
    return MatrixTuple<T>(std::move(out));
}

/// Slotwise second exterior power.
template <Scalar T>
MatrixTuple<T> exterior_square(const MatrixTuple<T>& t) {
    std::vector<Matrix<T>> out;
    out.reserve(t.size());
    for (const auto& m : t.matrices()) out.push_back(exterior_square(m));
    return MatrixTuple<T>(std::move(out));
}

template <Scalar T>
MatrixTuple<T> adjoint(const MatrixTuple<T>& t) {
    std::vector<Matrix<T>> out;
    out.reserve(t.size());
    for (const auto& m : t.matrices()) out.push_back(m.adjoint());
    return MatrixTuple<T>(std::move(out));
}

} // namespace jsrkit
