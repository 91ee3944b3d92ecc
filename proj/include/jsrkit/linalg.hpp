#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace jsrkit {

/// Singular value decomposition data: A V = U diag(sigma).
template <Scalar T>
struct SvdResult {
    std::vector<real> sigma;  ///< descending
    Matrix<T> v;              ///< right singular vectors as columns, same order
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 60;

/**
 * One-sided (Hestenes) Jacobi on the columns of a.
 *
 * Pairs of columns are rotated until mutually orthogonal; complex pairs are
 * first aligned by a unit phase so the rotation itself stays real. The
 * column norms of the result are the singular values.
 */
template <Scalar T>
SvdResult<T> jacobi_svd(const Matrix<T>& a, bool want_v) {
    const std::size_t n = a.dim();
    Matrix<T> w = a;
    Matrix<T> v = want_v ? Matrix<T>::identity(n) : Matrix<T>();
    const real eps = std::numeric_limits<real>::epsilon() * static_cast<real>(std::max<std::size_t>(n, 1));

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                real alpha = 0;
                real beta = 0;
                T gamma{};
                for (std::size_t i = 0; i < n; ++i) {
                    alpha += abs2_of(w(i, p));
                    beta += abs2_of(w(i, q));
                    gamma += conj_of(w(i, p)) * w(i, q);
                }
                const real g = abs_of(gamma);
                if (g == 0 || g <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;

                const T phase = conj_of(gamma / g);
                const real zeta = (beta - alpha) / (2 * g);
                const real t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                const real c = 1 / std::sqrt(1 + t * t);
                const real s = c * t;

                for (std::size_t i = 0; i < n; ++i) {
                    const T xp = w(i, p);
                    const T xq = w(i, q) * phase;
                    w(i, p) = c * xp - s * xq;
                    w(i, q) = s * xp + c * xq;
                }
                if (want_v) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const T xp = v(i, p);
                        const T xq = v(i, q) * phase;
                        v(i, p) = c * xp - s * xq;
                        v(i, q) = s * xp + c * xq;
                    }
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<real> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        real s = 0;
        for (std::size_t i = 0; i < n; ++i) s += abs2_of(w(i, j));
        norms[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdResult<T> out;
    out.sigma.reserve(n);
    for (auto j : order) out.sigma.push_back(norms[j]);
    if (want_v) {
        out.v = Matrix<T>(n);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, order[k]);
        }
    }
    return out;
}

inline std::pair<complex, complex> quadratic_eigenvalues(complex a, complex b, complex c, complex d) {
    const complex tr = a + d;
    const complex det = a * d - b * c;
    const complex disc = std::sqrt(tr * tr - 4.0 * det);
    // Pick the sign that avoids cancellation, then recover the partner from det.
    const complex big = (std::real(std::conj(tr) * disc) >= 0) ? (tr + disc) / 2.0 : (tr - disc) / 2.0;
    const complex small = (big == complex{}) ? complex{} : det / big;
    return {big, small};
}

/// Householder reduction to upper Hessenberg form.
inline Matrix<complex> hessenberg(Matrix<complex> h) {
    const std::size_t n = h.dim();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::vector<complex> x(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) x[i - k - 1] = h(i, k);
        const real alpha = vector_norm2<complex>(x);
        if (alpha == 0) continue;
        const complex phase = std::abs(x[0]) == 0 ? complex{1} : x[0] / std::abs(x[0]);
        x[0] += phase * alpha;
        const real vn = vector_norm2<complex>(x);
        for (auto& xi : x) xi /= vn;

        // h <- P h with P = I - 2 x x^H acting on rows k+1..n-1
        for (std::size_t j = 0; j < n; ++j) {
            complex dot{};
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(x[i - k - 1]) * h(i, j);
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * x[i - k - 1] * dot;
        }
        // h <- h P on columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            complex dot{};
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * x[j - k - 1];
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(x[j - k - 1]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = complex{};
    }
    return h;
}

/// Eigenvalues of a Hessenberg matrix by single-shift complex QR with deflation.
inline std::vector<complex> hessenberg_qr_eigenvalues(Matrix<complex> h) {
    const std::size_t n = h.dim();
    std::vector<complex> eig(n);
    const real eps = std::numeric_limits<real>::epsilon();
    const real scale = std::max(frobenius_norm(h), std::numeric_limits<real>::min());
    const std::size_t cap = 10 * n * n;

    std::size_t iterations = 0;
    std::size_t since_deflation = 0;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    std::vector<complex> cs(n);
    std::vector<complex> sn(n);

    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        std::ptrdiff_t l = hi;
        while (l > 0) {
            real s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0) s = scale;
            if (std::abs(h(l, l - 1)) <= eps * s) {
                h(l, l - 1) = complex{};
                break;
            }
            --l;
        }
        if (l == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (l == hi - 1) {
            auto [e1, e2] = quadratic_eigenvalues(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
            eig[l] = e1;
            eig[hi] = e2;
            hi -= 2;
            since_deflation = 0;
            continue;
        }
        if (++iterations > cap) {
            throw ConvergenceError("QR eigenvalue iteration exceeded " + std::to_string(cap) + " sweeps");
        }
        ++since_deflation;

        complex mu;
        if (since_deflation % 10 == 0) {
            // exceptional shift to break symmetric stalls (e.g. permutation-like blocks)
            mu = h(hi, hi) + complex(0.75, 0.4375) * (std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)));
        } else {
            auto [e1, e2] = quadratic_eigenvalues(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = std::abs(e1 - h(hi, hi)) <= std::abs(e2 - h(hi, hi)) ? e1 : e2;
        }

        for (std::ptrdiff_t k = l; k <= hi; ++k) h(k, k) -= mu;
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const complex a = h(k, k);
            const complex b = h(k + 1, k);
            const real r = std::hypot(std::abs(a), std::abs(b));
            complex c{1};
            complex s{};
            if (r != 0) {
                c = a / r;
                s = b / r;
            }
            cs[k] = c;
            sn[k] = s;
            for (std::ptrdiff_t j = k; j <= hi; ++j) {
                const complex x = h(k, j);
                const complex y = h(k + 1, j);
                h(k, j) = std::conj(c) * x + std::conj(s) * y;
                h(k + 1, j) = -s * x + c * y;
            }
        }
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const complex c = cs[k];
            const complex s = sn[k];
            const std::ptrdiff_t last = std::min(k + 2, hi);
            for (std::ptrdiff_t i = l; i <= last; ++i) {
                const complex x = h(i, k);
                const complex y = h(i, k + 1);
                h(i, k) = x * c + y * s;
                h(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
            }
        }
        for (std::ptrdiff_t k = l; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

} // namespace detail

/// Singular values in descending order.
template <Scalar T>
std::vector<real> singular_values(const Matrix<T>& a) {
    return detail::jacobi_svd(a, false).sigma;
}

template <Scalar T>
SvdResult<T> svd(const Matrix<T>& a) {
    return detail::jacobi_svd(a, true);
}

/// Euclidean operator norm (largest singular value).
template <Scalar T>
real op_norm(const Matrix<T>& a) {
    if (a.dim() == 0) return 0;
    if (a.dim() == 1) return abs_of(a(0, 0));
    return singular_values(a).front();
}

/**
 * @brief All eigenvalues (with multiplicity, unordered).
 *
 * Orders up to 2 use the quadratic formula. Larger orders go through a
 * Householder Hessenberg reduction followed by shifted QR, capped at 10*d^2
 * iterations; exceeding the cap throws ConvergenceError. Exactly nilpotent
 * inputs (A^d == 0 in floating point) short-circuit to zeros.
 */
template <Scalar T>
std::vector<complex> eigenvalues(const Matrix<T>& a) {
    const std::size_t n = a.dim();
    if (n == 0) return {};
    if (n == 1) return {complex(a(0, 0))};
    if (n == 2) {
        auto [e1, e2] = detail::quadratic_eigenvalues(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
        return {e1, e2};
    }
    if (a.is_zero() || matrix_power(a, static_cast<unsigned>(n)).is_zero()) {
        return std::vector<complex>(n, complex{});
    }
    return detail::hessenberg_qr_eigenvalues(detail::hessenberg(to_complex(a)));
}

/// Largest eigenvalue modulus.
template <Scalar T>
real spectral_radius(const Matrix<T>& a) {
    real r = 0;
    for (const auto& e : eigenvalues(a)) r = std::max(r, std::abs(e));
    return r;
}

/// Determinant by LU factorization with partial pivoting.
template <Scalar T>
T determinant(const Matrix<T>& a) {
    const std::size_t n = a.dim();
    if (n == 0) return T{1};
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    Matrix<T> lu = a;
    T det{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (abs_of(lu(i, k)) > abs_of(lu(piv, k))) piv = i;
        }
        if (lu(piv, k) == T{}) return T{};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = lu(i, k) / lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

inline constexpr real kDefaultRankTol = 1e-9;

/// Number of singular values above tol * sigma_1; zero for the zero matrix.
template <Scalar T>
std::size_t rank_eps(const Matrix<T>& a, real tol = kDefaultRankTol) {
    if (!(tol > 0)) throw ArgumentError("rank tolerance must be positive");
    const auto s = singular_values(a);
    if (s.empty() || s.front() == 0) return 0;
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](real x) { return x > tol * s.front(); }));
}

/// Index pairs (i, j), i < j, in lexicographic order: the basis e_i ^ e_j.
inline std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) basis.emplace_back(i, j);
    }
    return basis;
}

/**
 * @brief Second exterior power of a.
 *
 * Entry ((i,j),(k,l)) is the 2x2 minor a_ik a_jl - a_il a_jk in the
 * lexicographic basis of e_i ^ e_j. For d = 2 this is [det a].
 */
template <Scalar T>
Matrix<T> exterior_square(const Matrix<T>& a) {
    if (a.dim() < 2) {
        throw DimensionError("exterior square needs order >= 2, got " + std::to_string(a.dim()));
    }
    const auto basis = wedge_basis(a.dim());
    Matrix<T> out(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto [i, j] = basis[r];
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto [k, l] = basis[c];
            out(r, c) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
        }
    }
    return out;
}

} // namespace jsrkit
