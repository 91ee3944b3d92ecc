#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "tuple.hpp"
#include "words.hpp"

namespace jsrkit {

/// ||v|| = max_k w_k |v_k|.
struct WeightedMaxNorm {
    std::vector<real> weights;
};

/// ||v|| = (sum_k (w_k |v_k|)^p)^(1/p); empty weights mean all ones.
struct EllPNorm {
    real p = 2;
    std::vector<real> weights;
};

/**
 * @brief Sampled norm on R^2.
 *
 * values[j] is the norm of the unit vector at angles[j], with angles strictly
 * increasing in [0, pi). Other directions are linearly interpolated in angle,
 * using phi(-v) = phi(v) to wrap around, and extended 1-homogeneously.
 */
struct MeshNorm {
    std::vector<real> angles;
    std::vector<real> values;
};

using NormRep = std::variant<WeightedMaxNorm, EllPNorm, MeshNorm>;

inline WeightedMaxNorm max_norm(std::size_t d) { return {std::vector<real>(d, 1.0)}; }
inline EllPNorm euclidean_norm() { return {2.0, {}}; }

/// Throws ArgumentError unless the representation describes a norm.
inline void validate(const NormRep& norm) {
    std::visit(
        [](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, WeightedMaxNorm>) {
                if (n.weights.empty()) throw ArgumentError("weighted max norm needs weights");
                for (real w : n.weights) {
                    if (!(w > 0) || !std::isfinite(w)) throw ArgumentError("norm weights must be positive and finite");
                }
            } else if constexpr (std::is_same_v<N, EllPNorm>) {
                if (!(n.p >= 1) || !std::isfinite(n.p)) throw ArgumentError("l_p norm needs finite p >= 1");
                for (real w : n.weights) {
                    if (!(w > 0) || !std::isfinite(w)) throw ArgumentError("norm weights must be positive and finite");
                }
            } else {
                if (n.angles.size() < 2 || n.angles.size() != n.values.size()) {
                    throw ArgumentError("mesh norm needs at least two angles with one value each");
                }
                for (std::size_t j = 0; j < n.angles.size(); ++j) {
                    if (!(n.angles[j] >= 0 && n.angles[j] < std::numbers::pi)) {
                        throw ArgumentError("mesh angles must lie in [0, pi)");
                    }
                    if (j > 0 && !(n.angles[j] > n.angles[j - 1])) {
                        throw ArgumentError("mesh angles must be strictly increasing");
                    }
                    if (!(n.values[j] > 0) || !std::isfinite(n.values[j])) {
                        throw ArgumentError("mesh values must be positive and finite");
                    }
                }
            }
        },
        norm);
}

namespace detail {

inline real mesh_unit_value(const MeshNorm& n, real theta) {
    const auto& a = n.angles;
    const auto& f = n.values;
    const std::size_t m = a.size();
    auto hi = std::upper_bound(a.begin(), a.end(), theta);
    real a0, a1, f0, f1;
    if (hi == a.begin()) {
        a0 = a[m - 1] - std::numbers::pi;
        f0 = f[m - 1];
        a1 = a[0];
        f1 = f[0];
    } else if (hi == a.end()) {
        a0 = a[m - 1];
        f0 = f[m - 1];
        a1 = a[0] + std::numbers::pi;
        f1 = f[0];
    } else {
        const auto j = static_cast<std::size_t>(hi - a.begin());
        a0 = a[j - 1];
        f0 = f[j - 1];
        a1 = a[j];
        f1 = f[j];
    }
    const real s = (theta - a0) / (a1 - a0);
    return f0 + s * (f1 - f0);
}

} // namespace detail

template <Scalar T>
real eval_norm(const NormRep& norm, std::span<const T> v) {
    return std::visit(
        [&](const auto& n) -> real {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, WeightedMaxNorm>) {
                if (v.size() != n.weights.size()) throw DimensionError("vector length does not match norm weights");
                real m = 0;
                for (std::size_t k = 0; k < v.size(); ++k) m = std::max(m, n.weights[k] * abs_of(v[k]));
                return m;
            } else if constexpr (std::is_same_v<N, EllPNorm>) {
                if (!n.weights.empty() && v.size() != n.weights.size()) {
                    throw DimensionError("vector length does not match norm weights");
                }
                auto weighted = [&](std::size_t k) { return (n.weights.empty() ? 1.0 : n.weights[k]) * abs_of(v[k]); };
                real m = 0;
                for (std::size_t k = 0; k < v.size(); ++k) m = std::max(m, weighted(k));
                if (m == 0) return 0;
                if (n.p == 2) {
                    real s = 0;
                    for (std::size_t k = 0; k < v.size(); ++k) s += (weighted(k) / m) * (weighted(k) / m);
                    return m * std::sqrt(s);
                }
                real s = 0;
                for (std::size_t k = 0; k < v.size(); ++k) s += std::pow(weighted(k) / m, n.p);
                return m * std::pow(s, 1.0 / n.p);
            } else {
                if constexpr (is_complex_v<T>) {
                    throw ArgumentError("mesh norms are defined on real 2-vectors only");
                } else {
                    if (v.size() != 2) throw DimensionError("mesh norms are defined on R^2");
                    const real r = std::hypot(v[0], v[1]);
                    if (r == 0) return 0;
                    real theta = std::atan2(v[1], v[0]);
                    if (theta < 0) theta += std::numbers::pi;
                    if (theta >= std::numbers::pi) theta -= std::numbers::pi;
                    return r * detail::mesh_unit_value(n, theta);
                }
            }
        },
        norm);
}

template <Scalar T>
real eval_norm(const NormRep& norm, const Vector<T>& v) {
    return eval_norm<T>(norm, std::span<const T>(v));
}

/// Angles j*pi/m, j = 0..m-1.
inline std::vector<real> mesh_angles(std::size_t m) {
    if (m < 2) throw ArgumentError("mesh needs at least two points");
    std::vector<real> a(m);
    for (std::size_t j = 0; j < m; ++j) a[j] = std::numbers::pi * static_cast<real>(j) / static_cast<real>(m);
    return a;
}

/// Unit vectors of R^2 at the mesh angles (half circle; norms are even).
inline std::vector<Vector<real>> circle_mesh(std::size_t m) {
    std::vector<Vector<real>> pts;
    pts.reserve(m);
    for (real a : mesh_angles(m)) pts.push_back({std::cos(a), std::sin(a)});
    // exact axis directions keep piecewise-linear example norms exact on the mesh
    for (auto& p : pts) {
        for (auto& x : p) {
            if (std::abs(x) < 1e-15) x = 0;
        }
    }
    return pts;
}

/// Basis vectors plus seeded Gaussian directions normalized to the unit sphere.
template <Scalar T>
std::vector<Vector<T>> sphere_samples(std::size_t d, std::size_t count, std::uint64_t seed = defaults::seed) {
    std::vector<Vector<T>> pts;
    for (std::size_t k = 0; k < d; ++k) {
        Vector<T> e(d, T{});
        e[k] = T{1};
        pts.push_back(std::move(e));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<real> g(0.0, 1.0);
    while (pts.size() < count) {
        Vector<T> v(d);
        for (auto& x : v) {
            if constexpr (is_complex_v<T>) {
                const real re = g(rng);
                const real im = g(rng);
                x = T(re, im);
            } else {
                x = g(rng);
            }
        }
        const real n = vector_norm2<T>(v);
        if (n == 0) continue;
        for (auto& x : v) x /= n;
        pts.push_back(std::move(v));
    }
    return pts;
}

/// The circle mesh for real d = 2, otherwise sphere samples.
template <Scalar T>
std::vector<Vector<T>> default_samples(std::size_t d, std::size_t mesh = defaults::mesh_size,
                                       std::uint64_t seed = defaults::seed) {
    if constexpr (!is_complex_v<T>) {
        if (d == 2) return circle_mesh(mesh);
    }
    return sphere_samples<T>(d, std::max<std::size_t>(defaults::sphere_samples, d), seed);
}

template <Scalar T>
struct VerificationReport {
    real max_residual = 0;
    Vector<T> worst_point;
    std::size_t samples_checked = 0;

    bool passes(real tol) const { return max_residual <= tol; }
};

namespace detail {

template <Scalar T, class Residual>
VerificationReport<T> verify_impl(const MatrixTuple<T>& t, const NormRep& norm, real rho_hat,
                                  const std::vector<Vector<T>>& samples, Residual residual) {
    if (!(rho_hat > 0)) throw ArgumentError("rho_hat must be positive");
    if (samples.empty()) throw ArgumentError("verification needs at least one sample point");
    validate(norm);
    VerificationReport<T> rep;
    for (const auto& v : samples) {
        const real nv = eval_norm<T>(norm, v);
        if (nv == 0) continue;
        real image = 0;
        for (const auto& a : t.matrices()) image = std::max(image, eval_norm<T>(norm, apply<T>(a, v)));
        const real res = residual(image, rho_hat * nv) / nv;
        ++rep.samples_checked;
        if (rep.worst_point.empty() || res > rep.max_residual) {
            rep.max_residual = res;
            rep.worst_point = v;
        }
    }
    if (rep.samples_checked == 0) throw ArgumentError("all sample points are zero");
    return rep;
}

} // namespace detail

/// max over samples of |max_i ||A_i v|| - rho_hat ||v||| / ||v||.
template <Scalar T>
VerificationReport<T> verify_barabanov(const MatrixTuple<T>& t, const NormRep& norm, real rho_hat,
                                       const std::vector<Vector<T>>& samples) {
    return detail::verify_impl(t, norm, rho_hat, samples, [](real lhs, real rhs) { return std::abs(lhs - rhs); });
}

/// As verify_barabanov, but only excess max_i ||A_i v|| > rho_hat ||v|| counts.
template <Scalar T>
VerificationReport<T> verify_extremal(const MatrixTuple<T>& t, const NormRep& norm, real rho_hat,
                                      const std::vector<Vector<T>>& samples) {
    return detail::verify_impl(t, norm, rho_hat, samples, [](real lhs, real rhs) { return std::max(0.0, lhs - rhs); });
}

/// max over samples of |log(a(v) / b(v))|: a sampled lower estimate of d_N(a, b).
template <Scalar T>
real norm_distance(const NormRep& a, const NormRep& b, const std::vector<Vector<T>>& samples) {
    if (samples.empty()) throw ArgumentError("norm distance needs at least one sample point");
    real worst = 0;
    for (const auto& v : samples) {
        const real na = eval_norm<T>(a, v);
        const real nb = eval_norm<T>(b, v);
        if (na == 0 && nb == 0) continue;
        if (na == 0 || nb == 0) throw ArgumentError("norm vanishes on a nonzero sample");
        worst = std::max(worst, std::abs(std::log(na / nb)));
    }
    return worst;
}

/**
 * @brief Operator norm of p induced by a vector norm.
 *
 * Exact for weighted max norms (box vertices for real d <= 10, weighted row
 * sums otherwise), for weighted l_1 (column sums) and for l_2 (largest
 * singular value of W P W^-1). Other norms fall back to the maximum of
 * ||p v|| / ||v|| over samples, which is a lower estimate.
 */
template <Scalar T>
real induced_norm(const NormRep& norm, const Matrix<T>& p, const std::vector<Vector<T>>& samples) {
    validate(norm);
    const std::size_t d = p.dim();
    if (const auto* wm = std::get_if<WeightedMaxNorm>(&norm)) {
        const auto& w = wm->weights;
        if (w.size() != d) throw DimensionError("norm weights do not match matrix order");
        if constexpr (!is_complex_v<T>) {
            if (d <= 10) {
                // unit ball is the box |v_k| <= 1/w_k; a convex function peaks at a vertex
                real best = 0;
                const std::uint64_t patterns = std::uint64_t{1} << (d - 1);
                Vector<real> v(d);
                for (std::uint64_t s = 0; s < patterns; ++s) {
                    v[0] = 1.0 / w[0];
                    for (std::size_t k = 1; k < d; ++k) v[k] = ((s >> (k - 1)) & 1U ? -1.0 : 1.0) / w[k];
                    best = std::max(best, eval_norm<real>(norm, apply<real>(p, v)));
                }
                return best;
            }
        }
        real best = 0;
        for (std::size_t r = 0; r < d; ++r) {
            real row = 0;
            for (std::size_t k = 0; k < d; ++k) row += abs_of(p(r, k)) / w[k];
            best = std::max(best, w[r] * row);
        }
        return best;
    }
    if (const auto* lp = std::get_if<EllPNorm>(&norm)) {
        auto weight = [&](std::size_t k) { return lp->weights.empty() ? 1.0 : lp->weights[k]; };
        if (!lp->weights.empty() && lp->weights.size() != d) throw DimensionError("norm weights do not match matrix order");
        if (lp->p == 1) {
            real best = 0;
            for (std::size_t k = 0; k < d; ++k) {
                real col = 0;
                for (std::size_t r = 0; r < d; ++r) col += weight(r) * abs_of(p(r, k));
                best = std::max(best, col / weight(k));
            }
            return best;
        }
        if (lp->p == 2) {
            Matrix<T> scaled = p;
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t k = 0; k < d; ++k) scaled(r, k) *= T(weight(r) / weight(k));
            }
            return op_norm(scaled);
        }
    }
    if (samples.empty()) throw ArgumentError("sampled operator norm needs sample points");
    real best = 0;
    for (const auto& v : samples) {
        const real nv = eval_norm<T>(norm, v);
        if (nv == 0) continue;
        best = std::max(best, eval_norm<T>(norm, apply<T>(p, v)) / nv);
    }
    return best;
}

/// ||P_w||^(1/|w|) in the given norm.
template <Scalar T>
real theta(const MatrixTuple<T>& t, const Word& w, const NormRep& norm, const std::vector<Vector<T>>& samples) {
    return std::pow(induced_norm(norm, product_along(t, w), samples), 1.0 / static_cast<real>(w.size()));
}

struct ApproxOptions {
    std::size_t mesh = defaults::mesh_size;
    std::size_t max_iter = defaults::approx_max_iter;
    real tol = defaults::approx_tol;
};

struct BarabanovApprox {
    MeshNorm norm;
    std::size_t iterations = 0;
    bool converged = false;
    real last_step = 0;  ///< d_N between the last two iterates on the mesh
};

/**
 * @brief Fixed-point iteration phi <- max_i phi(A_i .) / rho_hat on a circle mesh.
 *
 * Real d = 2 only. After every sweep the iterate is rescaled so phi(e_1) = 1.
 * Stops when consecutive iterates are within tol in d_N on the mesh; if
 * max_iter is reached first the result is returned with converged = false.
 */
inline BarabanovApprox approx_barabanov(const RealTuple& t, real rho_hat, const NormRep& init,
                                        const ApproxOptions& opts = {}) {
    if (t.dim() != 2) throw DimensionError("Barabanov mesh approximation needs d = 2");
    if (!(rho_hat > 0)) throw ArgumentError("rho_hat must be positive");
    validate(init);

    const auto pts = circle_mesh(opts.mesh);
    std::vector<std::vector<Vector<real>>> images(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (const auto& p : pts) images[i].push_back(apply<real>(t.matrices()[i], p));
    }

    BarabanovApprox out;
    out.norm.angles = mesh_angles(opts.mesh);
    out.norm.values.reserve(pts.size());
    for (const auto& p : pts) {
        const real v = eval_norm<real>(init, p);
        if (!(v > 0)) throw ArgumentError("initial norm must be positive on the mesh");
        out.norm.values.push_back(v);
    }

    std::vector<real> next(pts.size());
    for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
        const NormRep current = out.norm;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            real m = 0;
            for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, eval_norm<real>(current, images[i][j]));
            next[j] = m / rho_hat;
        }
        const real anchor = next[0];
        real step = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            next[j] /= anchor;
            if (!(next[j] > 0) || !std::isfinite(next[j])) {
                throw ConvergenceError("mesh iterate lost positivity at iteration " + std::to_string(iter));
            }
            step = std::max(step, std::abs(std::log(next[j] / out.norm.values[j])));
        }
        out.norm.values = next;
        out.iterations = iter;
        out.last_step = step;
        if (step < opts.tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

} // namespace jsrkit
