#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "config.hpp"
#include "jsr_bounds.hpp"
#include "linalg.hpp"
#include "tuple.hpp"

namespace jsrkit {

enum class Status { Certified, Refuted, Unknown };

inline constexpr std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Certified: return "Certified";
        case Status::Refuted: return "Refuted";
        case Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

/// Three-valued property result with the numeric evidence behind it.
template <class Evidence>
struct Verdict {
    Status status = Status::Unknown;
    Evidence evidence;
};

/**
 * @brief Incrementally built orthonormal basis of a subspace of K^m.
 *
 * Candidates are orthogonalized twice (classical Gram-Schmidt with one
 * reorthogonalization pass) and dropped when the residual norm is at most
 * drop_tol times the candidate norm.
 */
template <Scalar T>
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient, real drop_tol = defaults::span_drop_tol)
        : ambient_(ambient), drop_tol_(drop_tol) {}

    /// Returns true if v enlarged the span.
    bool add(Vector<T> v) {
        if (v.size() != ambient_) throw DimensionError("span candidate has wrong length");
        const real norm0 = vector_norm2<T>(v);
        if (norm0 == 0 || basis_.size() == ambient_) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis_) {
                T dot{};
                for (std::size_t k = 0; k < ambient_; ++k) dot += conj_of(q[k]) * v[k];
                for (std::size_t k = 0; k < ambient_; ++k) v[k] -= dot * q[k];
            }
        }
        const real norm1 = vector_norm2<T>(v);
        if (norm1 <= drop_tol_ * norm0) return false;
        for (auto& x : v) x /= norm1;
        basis_.push_back(std::move(v));
        return true;
    }

    /// Norm of the component of v orthogonal to the span.
    real residual(Vector<T> v) const {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis_) {
                T dot{};
                for (std::size_t k = 0; k < ambient_; ++k) dot += conj_of(q[k]) * v[k];
                for (std::size_t k = 0; k < ambient_; ++k) v[k] -= dot * q[k];
            }
        }
        return vector_norm2<T>(v);
    }

    std::size_t size() const noexcept { return basis_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const std::vector<Vector<T>>& vectors() const noexcept { return basis_; }

private:
    std::size_t ambient_;
    real drop_tol_;
    std::vector<Vector<T>> basis_;
};

namespace detail {

template <Scalar T>
Vector<T> flatten(const Matrix<T>& m) {
    return Vector<T>(m.entries().begin(), m.entries().end());
}

template <Scalar T>
Matrix<T> unflatten(std::size_t d, const Vector<T>& v) {
    return Matrix<T>(d, v);
}

/// Orthonormal basis of span{I, P_w}, closed under left multiplication by every A_i.
template <Scalar T>
SpanBasis<T> algebra_span(const MatrixTuple<T>& t) {
    const std::size_t d = t.dim();
    SpanBasis<T> span(d * d);
    span.add(flatten(Matrix<T>::identity(d)));
    for (std::size_t idx = 0; idx < span.size(); ++idx) {
        const Matrix<T> b = unflatten<T>(d, span.vectors()[idx]);
        for (const auto& a : t.matrices()) {
            span.add(flatten(matmul(a, b)));
            if (span.size() == d * d) return span;
        }
    }
    return span;
}

/// Smallest common invariant subspace containing v.
template <Scalar T>
SpanBasis<T> orbit_span(const MatrixTuple<T>& t, const Vector<T>& v) {
    SpanBasis<T> span(t.dim());
    span.add(v);
    for (std::size_t idx = 0; idx < span.size(); ++idx) {
        const Vector<T> b = span.vectors()[idx];
        for (const auto& a : t.matrices()) {
            span.add(apply<T>(a, b));
            if (span.size() == t.dim()) return span;
        }
    }
    return span;
}

template <Scalar T>
std::vector<Vector<T>> orthogonal_complement(const SpanBasis<T>& span) {
    const std::size_t d = span.ambient();
    SpanBasis<T> full(d);
    for (const auto& q : span.vectors()) full.add(q);
    const std::size_t before = full.size();
    for (std::size_t k = 0; k < d && full.size() < d; ++k) {
        Vector<T> e(d, T{});
        e[k] = T{1};
        full.add(std::move(e));
    }
    return {full.vectors().begin() + static_cast<std::ptrdiff_t>(before), full.vectors().end()};
}

template <Scalar T>
T random_scalar(std::mt19937_64& rng) {
    std::normal_distribution<real> g(0.0, 1.0);
    if constexpr (is_complex_v<T>) {
        const real re = g(rng);
        const real im = g(rng);
        return T(re, im);
    } else {
        return g(rng);
    }
}

template <Scalar T>
Vector<T> random_vector(std::size_t d, std::mt19937_64& rng) {
    Vector<T> v(d);
    for (auto& x : v) x = random_scalar<T>(rng);
    return v;
}

/// max over basis vectors b and slots i of the part of A_i b outside the span, over |||A_i|||.
template <Scalar T>
real invariance_residual(const MatrixTuple<T>& t, const std::vector<Vector<T>>& basis) {
    SpanBasis<T> span(t.dim());
    for (const auto& b : basis) span.add(b);
    real worst = 0;
    for (const auto& a : t.matrices()) {
        const real scale = std::max(op_norm(a), std::numeric_limits<real>::min());
        for (const auto& b : basis) worst = std::max(worst, span.residual(apply<T>(a, b)) / scale);
    }
    return worst;
}

} // namespace detail

/// Dimension of the unital algebra generated by the tuple (Burnside test quantity).
template <Scalar T>
std::size_t algebra_dimension(const MatrixTuple<T>& t) {
    return detail::algebra_span(t).size();
}

template <Scalar T>
struct IrreducibilityEvidence {
    std::size_t dim = 0;
    std::size_t algebra_dimension = 0;
    std::vector<Vector<T>> invariant_basis;  ///< orthonormal basis of a proper invariant subspace
    real invariance_residual = 0;            ///< checked on the reported basis
    std::string method;
};

struct IrreducibilityOptions {
    std::uint64_t seed = defaults::seed;
    std::size_t attempts = defaults::witness_attempts;
    /// Invariant-subspace witnesses must pass this residual check.
    real witness_tol = 1e-8;
};

/**
 * @brief Irreducibility verdict.
 *
 * Certified when the generated algebra is all of Mat_d. Otherwise a
 * proper invariant subspace is searched for: orbits of basis and random
 * vectors, then orbits of kernel vectors of B - mu I for random algebra
 * elements B and their eigenvalues mu, together with the complements of
 * kernel orbits of the adjoint tuple. Over the reals only real eigenvalues
 * are used and an unsuccessful search yields Unknown.
 */
template <Scalar T>
Verdict<IrreducibilityEvidence<T>> is_irreducible(const MatrixTuple<T>& t, const IrreducibilityOptions& opts = {}) {
    const std::size_t d = t.dim();
    Verdict<IrreducibilityEvidence<T>> out;
    out.evidence.dim = d;
    const auto algebra = detail::algebra_span(t);
    out.evidence.algebra_dimension = algebra.size();
    if (algebra.size() == d * d) {
        out.status = Status::Certified;
        out.evidence.method = "generated algebra is the full matrix algebra";
        return out;
    }

    auto accept = [&](std::vector<Vector<T>> basis, std::string method) {
        const real res = detail::invariance_residual(t, basis);
        if (basis.empty() || basis.size() >= d || res > opts.witness_tol) return false;
        out.status = Status::Refuted;
        out.evidence.invariant_basis = std::move(basis);
        out.evidence.invariance_residual = res;
        out.evidence.method = std::move(method);
        return true;
    };
    auto try_vector = [&](const Vector<T>& v, std::string method) {
        const auto orbit = detail::orbit_span(t, v);
        return orbit.size() < d && accept(orbit.vectors(), std::move(method));
    };

    for (std::size_t k = 0; k < d; ++k) {
        Vector<T> e(d, T{});
        e[k] = T{1};
        if (try_vector(e, "orbit of basis vector e" + std::to_string(k + 1))) return out;
    }

    std::mt19937_64 rng(opts.seed);
    const auto adj = adjoint(t);
    const auto& elems = algebra.vectors();
    for (std::size_t attempt = 0; attempt < opts.attempts; ++attempt) {
        Vector<T> combo(d * d, T{});
        for (const auto& e : elems) {
            const T c = detail::random_scalar<T>(rng);
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += c * e[k];
        }
        const Matrix<T> b = detail::unflatten<T>(d, combo);
        const real scale = std::max(frobenius_norm(b), std::numeric_limits<real>::min());
        std::vector<complex> mus;
        try {
            mus = eigenvalues(b);
        } catch (const ConvergenceError&) {
            continue;
        }
        for (const auto& mu : mus) {
            T shift;
            if constexpr (is_complex_v<T>) {
                shift = mu;
            } else {
                if (std::abs(mu.imag()) > 1e-8 * scale) continue;
                shift = mu.real();
            }
            Matrix<T> m = b - Matrix<T>::identity(d) * shift;
            const auto right = svd(m);
            Vector<T> v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = right.v(i, d - 1);
            if (try_vector(v, "orbit of a kernel vector of a random algebra element")) return out;

            const auto left = svd(m.adjoint());
            Vector<T> w(d);
            for (std::size_t i = 0; i < d; ++i) w[i] = left.v(i, d - 1);
            const auto co_orbit = detail::orbit_span(adj, w);
            if (co_orbit.size() < d &&
                accept(detail::orthogonal_complement(co_orbit),
                       "complement of an adjoint kernel-vector orbit")) {
                return out;
            }
        }
        if (attempt < 4) {
            if (try_vector(detail::random_vector<T>(d, rng), "orbit of a random vector")) return out;
        }
    }

    out.status = Status::Unknown;
    out.evidence.method = field_of<T> == Field::Real
                              ? "algebra is proper but no real invariant subspace was found"
                              : "algebra is proper but the witness search was exhausted";
    return out;
}

struct RankOneEvidence {
    JsrBounds base;   ///< bounds for the tuple
    JsrBounds wedge;  ///< bounds for its slotwise exterior square
    real tol = defaults::rank_one_tol;
    std::string reason;
};

/**
 * @brief Rank-one property via rho(wedge^2 A) < rho(A)^2.
 *
 * Certified when upper(wedge) sits below lower(A)^2, or when every
 * exterior-square product vanishes (wedge JSR is zero) and the tuple is not
 * bounded to zero; the latter relies on the relative product boundedness
 * precondition rho(A) > 0. Refuted when lower(wedge) reaches upper(A)^2,
 * since rho(wedge^2 A) <= rho(A)^2 always. Unknown otherwise.
 */
template <Scalar T>
Verdict<RankOneEvidence> rank_one_property(const MatrixTuple<T>& t, std::size_t depth,
                                           real tol = defaults::rank_one_tol, const BoundsOptions& opts = {}) {
    if (t.dim() < 2) throw DimensionError("rank one property needs dimension >= 2");
    Verdict<RankOneEvidence> out;
    out.evidence.tol = tol;
    out.evidence.base = bounds(t, depth, opts);
    out.evidence.wedge = bounds(exterior_square(t), depth, opts);
    const auto& b = out.evidence.base;
    const auto& w = out.evidence.wedge;
    const real slack = tol * std::max(b.upper * b.upper, std::numeric_limits<real>::min());

    if (w.upper < b.lower * b.lower - slack) {
        out.status = Status::Certified;
        out.evidence.reason = "upper(wedge) < lower(A)^2";
    } else if (w.upper == 0 && b.upper > 0) {
        out.status = Status::Certified;
        out.evidence.reason = "wedge products vanish, so rho(wedge) = 0 < rho(A)^2 given rho(A) > 0";
    } else if (w.lower >= b.upper * b.upper - slack) {
        out.status = Status::Refuted;
        out.evidence.reason = "lower(wedge) >= upper(A)^2 forces rho(wedge) = rho(A)^2";
    } else {
        out.status = Status::Unknown;
        out.evidence.reason = "intervals overlap; increase depth";
    }
    return out;
}

/**
 * True iff every A_i (d = 2) has eigenvalues of distinct modulus. Then
 * rho(wedge^2 A) = max |det A_i| < max rho(A_i)^2 <= rho(A)^2, which predicts
 * the rank-one property.
 */
template <Scalar T>
bool eigen_separation_heuristic(const MatrixTuple<T>& t, real gap = defaults::separation_gap) {
    if (t.dim() != 2) throw DimensionError("eigenvalue separation heuristic needs d = 2");
    for (const auto& a : t.matrices()) {
        const auto ev = eigenvalues(a);
        const real m0 = std::abs(ev[0]);
        const real m1 = std::abs(ev[1]);
        if (!(std::abs(m0 - m1) > gap * std::max(m0, m1))) return false;
    }
    return true;
}

} // namespace jsrkit
