#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library code path it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <jsrkit/matrix.hpp>
#include <jsrkit/words.hpp>

namespace oracle {

using jsrkit::complex;
using jsrkit::Matrix;
using jsrkit::real;

/// Textbook i-j-k triple loop.
template <class T>
Matrix<T> naive_multiply(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t n = a.dim();
    Matrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T s{};
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

template <class T>
Matrix<T> random_matrix(std::size_t n, std::mt19937_64& rng, real scale = 1.0) {
    std::normal_distribution<real> g(0.0, scale);
    Matrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<T, complex>) {
                const real re = g(rng);
                const real im = g(rng);
                m(i, j) = complex(re, im);
            } else {
                m(i, j) = g(rng);
            }
        }
    return m;
}

/// Largest singular value of a 2x2 matrix: sqrt of the top root of the
/// characteristic quadratic of A^H A.
template <class T>
real op_norm_2x2(const Matrix<T>& a) {
    // A^H A = [[p, q], [conj(q), s]]
    real p = 0, s = 0;
    std::complex<real> q{};
    for (std::size_t k = 0; k < 2; ++k) {
        p += std::norm(std::complex<real>(a(k, 0)));
        s += std::norm(std::complex<real>(a(k, 1)));
        q += std::conj(std::complex<real>(a(k, 0))) * std::complex<real>(a(k, 1));
    }
    const real tr = p + s;
    const real det = p * s - std::norm(q);
    return std::sqrt((tr + std::sqrt(std::max(0.0, tr * tr - 4 * det))) / 2);
}

/// Two largest singular values from the eigenvalues of A^H A by Jacobi
/// eigenvalue rotations on the Hermitian Gram matrix (real case only).
inline std::vector<real> singular_values_gram(const Matrix<real>& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<real>> g(n, std::vector<real>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g[i][j] += a(k, i) * a(k, j);
    for (int sweep = 0; sweep < 100; ++sweep) {
        real off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += g[p][q] * g[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (g[p][q] == 0) continue;
                const real theta = (g[q][q] - g[p][p]) / (2 * g[p][q]);
                const real t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const real c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const real gkp = g[k][p], gkq = g[k][q];
                    g[k][p] = c * gkp - s * gkq;
                    g[k][q] = s * gkp + c * gkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const real gpk = g[p][k], gqk = g[q][k];
                    g[p][k] = c * gpk - s * gqk;
                    g[q][k] = s * gpk + c * gqk;
                }
            }
    }
    std::vector<real> sv;
    for (std::size_t i = 0; i < n; ++i) sv.push_back(std::sqrt(std::max(0.0, g[i][i])));
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

/// Spectral radius of a 2x2 matrix from the roots of x^2 - tr x + det.
template <class T>
real spectral_radius_2x2(const Matrix<T>& a) {
    const std::complex<real> tr = std::complex<real>(a(0, 0)) + std::complex<real>(a(1, 1));
    const std::complex<real> det =
        std::complex<real>(a(0, 0)) * std::complex<real>(a(1, 1)) - std::complex<real>(a(0, 1)) * std::complex<real>(a(1, 0));
    const auto disc = std::sqrt(tr * tr - 4.0 * det);
    return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
}

/// Two 2x2 complex matrices share an eigenvector iff det(AB - BA) = 0.
inline complex commutator_det_2x2(const Matrix<complex>& a, const Matrix<complex>& b) {
    const auto c = naive_multiply(a, b);
    const auto e = naive_multiply(b, a);
    return (c(0, 0) - e(0, 0)) * (c(1, 1) - e(1, 1)) - (c(0, 1) - e(0, 1)) * (c(1, 0) - e(1, 0));
}

inline std::vector<jsrkit::Letter> min_rotation_brute(const std::vector<jsrkit::Letter>& w) {
    auto best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<jsrkit::Letter> r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        best = std::min(best, r);
    }
    return best;
}

inline bool rotation_equivalent_brute(const std::vector<jsrkit::Letter>& a, const std::vector<jsrkit::Letter>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        bool eq = true;
        for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[(i + k) % a.size()] == b[i];
        if (eq) return true;
    }
    return false;
}

/// w is a power iff some proper divisor q of n is a period.
inline bool is_primitive_divisors(const std::vector<jsrkit::Letter>& w) {
    const std::size_t n = w.size();
    for (std::size_t q = 1; q < n; ++q) {
        if (n % q) continue;
        bool periodic = true;
        for (std::size_t i = q; i < n && periodic; ++i) periodic = w[i] == w[i - q];
        if (periodic) return false;
    }
    return true;
}

inline std::size_t euler_phi(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

/// (1/n) sum_{d | n} phi(d) r^(n/d)
inline std::size_t burnside_necklaces(std::size_t r, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::size_t p = 1;
        for (std::size_t i = 0; i < n / d; ++i) p *= r;
        total += euler_phi(d) * p;
    }
    return total / n;
}

/// Number of rotation classes by brute-force dedup of min rotations.
inline std::size_t necklaces_brute(std::size_t r, std::size_t n) {
    std::set<std::vector<jsrkit::Letter>> seen;
    std::vector<jsrkit::Letter> w(n, 1);
    while (true) {
        seen.insert(min_rotation_brute(w));
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == r) w[--pos] = 1;
        if (pos == 0) break;
        ++w[pos - 1];
    }
    return seen.size();
}

/// Rank of a set of vectors by Gaussian elimination with complete row pivoting.
template <class T>
std::size_t rank_gauss(std::vector<std::vector<T>> rows, real tol) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    real scale = 0;
    for (const auto& r : rows)
        for (const auto& x : r) scale = std::max(scale, std::abs(x));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
        if (std::abs(rows[piv][c]) <= tol * scale) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const T f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// dim span{I, all products of length <= max_len} by explicit enumeration.
template <class T>
std::size_t algebra_dimension_brute(const std::vector<Matrix<T>>& mats, std::size_t max_len) {
    const std::size_t d = mats.front().dim();
    std::vector<std::vector<T>> rows;
    std::vector<Matrix<T>> level = {Matrix<T>::identity(d)};
    auto push = [&](const Matrix<T>& m) { rows.emplace_back(m.entries().begin(), m.entries().end()); };
    push(level.front());
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Matrix<T>> next;
        for (const auto& p : level)
            for (const auto& a : mats) {
                next.push_back(naive_multiply(a, p));
                push(next.back());
            }
        level = std::move(next);
    }
    return rank_gauss(rows, 1e-9);
}

/// max over every word of length n of f(word), where the product order is the first letter rightmost.
template <class T, class F>
void for_each_product(const std::vector<Matrix<T>>& mats, std::size_t n, F&& f) {
    const std::size_t r = mats.size();
    std::vector<jsrkit::Letter> w(n, 1);
    while (true) {
        Matrix<T> p = mats[w[0] - 1];
        for (std::size_t k = 1; k < n; ++k) p = naive_multiply(mats[w[k] - 1], p);
        f(w, p);
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == r) w[--pos] = 1;
        if (pos == 0) break;
        ++w[pos - 1];
    }
}

} // namespace oracle
