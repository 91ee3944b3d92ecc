#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "config.hpp"
#include "linalg.hpp"
#include "tuple.hpp"
#include "words.hpp"

namespace jsrkit {

/**
 * @brief Certified enclosure lower <= JSR <= upper.
 *
 * lower = max over necklaces w with |w| <= depth of rho(P_w)^(1/|w|);
 * upper = min over levels n <= depth of max_{|w|=n} |||P_w|||^(1/n).
 */
struct JsrBounds {
    real lower = 0;
    real upper = std::numeric_limits<real>::infinity();
    std::size_t depth = 0;        ///< deepest level fully processed
    Word lower_witness;           ///< word attaining lower
    std::size_t upper_level = 0;  ///< level attaining upper
    bool partial = false;         ///< true if the budget stopped the scan before max_depth
};

struct BoundsOptions {
    std::uint64_t budget = defaults::word_budget;  ///< words per level
    bool prune = true;
};

namespace detail {

/// Largest |||P_w||| over all words of length n, by depth-first prefix extension.
template <Scalar T>
real level_max_norm(const MatrixTuple<T>& t, std::size_t n, bool prune) {
    const real growth = t.max_op_norm();
    std::vector<real> growth_pow(n + 1, 1);
    for (std::size_t k = 1; k <= n; ++k) growth_pow[k] = growth_pow[k - 1] * growth;

    real running = 0;
    // P is the product of the current prefix; children left-multiply by A_i.
    auto visit = [&](auto&& self, const Matrix<T>& p, std::size_t k) -> void {
        if (k == n) {
            running = std::max(running, op_norm(p));
            return;
        }
        if (prune && k > 0) {
            // |||P_w||| <= |||P_prefix||| * max|||A_i|||^(n-k); 1e-12 keeps rounding from
            // discarding a word whose computed norm would tie the running max.
            if (op_norm(p) * growth_pow[n - k] * (1 + 1e-12) < running) return;
        }
        for (Letter i = 1; i <= t.size(); ++i) {
            self(self, k == 0 ? t[i] : matmul(t[i], p), k + 1);
        }
    };
    visit(visit, Matrix<T>::identity(t.dim()), 0);
    return running;
}

} // namespace detail

/// Largest |||P_w||| over words of length n, before taking the n-th root.
template <Scalar T>
real level_max_norm(const MatrixTuple<T>& t, std::size_t n, bool prune = true) {
    if (n == 0) throw ArgumentError("level must be positive");
    return detail::level_max_norm(t, n, prune);
}

template <Scalar T>
JsrBounds bounds(const MatrixTuple<T>& t, std::size_t max_depth, const BoundsOptions& opts = {}) {
    if (max_depth == 0) throw ArgumentError("bounds depth must be at least 1");
    const std::size_t r = t.size();
    JsrBounds b;
    real lower = -1;
    for (std::size_t n = 1; n <= max_depth; ++n) {
        if (word_count_capped(r, n, opts.budget) > opts.budget) {
            b.partial = true;
            break;
        }
        const real inv_n = 1.0 / static_cast<real>(n);
        for_each_necklace(
            r, n,
            [&](const Word& w) {
                const real v = std::pow(spectral_radius(product_along(t, w)), inv_n);
                if (v > lower) {
                    lower = v;
                    b.lower_witness = w;
                }
            },
            opts.budget);
        const real u = std::pow(detail::level_max_norm(t, n, opts.prune), inv_n);
        if (u < b.upper) {
            b.upper = u;
            b.upper_level = n;
        }
        b.depth = n;
    }
    if (b.depth == 0) {
        throw BudgetExceeded("a single level of " + std::to_string(r) + " words exceeds the budget");
    }
    b.lower = lower;
    return b;
}

struct Candidate {
    Word word;
    real value = 0;  ///< rho(P_w)^(1/|w|)
};

/**
 * Necklace representatives of length <= max_depth whose normalized spectral
 * radius ties the best one within tie_tol (relative). These are the
 * finiteness-property candidates visible at this depth.
 */
template <Scalar T>
std::vector<Candidate> spectral_maximal_candidates(const MatrixTuple<T>& t, std::size_t max_depth,
                                                   real tie_tol = defaults::tie_tol,
                                                   std::uint64_t budget = defaults::word_budget) {
    if (max_depth == 0) throw ArgumentError("candidate depth must be at least 1");
    std::vector<Candidate> all;
    for (std::size_t n = 1; n <= max_depth; ++n) {
        if (word_count_capped(t.size(), n, budget) > budget) {
            if (n == 1) require_budget(t.size(), n, budget);
            break;
        }
        const real inv_n = 1.0 / static_cast<real>(n);
        for_each_necklace(
            t.size(), n,
            [&](const Word& w) { all.push_back({w, std::pow(spectral_radius(product_along(t, w)), inv_n)}); },
            budget);
    }
    real best = 0;
    for (const auto& c : all) best = std::max(best, c.value);
    std::vector<Candidate> out;
    for (auto& c : all) {
        if (c.value >= best - tie_tol * best) out.push_back(std::move(c));
    }
    return out;
}

/// True iff upper - lower <= close_tol * upper.
inline bool finiteness_verified_at_depth(const JsrBounds& b, real close_tol = defaults::close_tol) {
    return b.upper - b.lower <= close_tol * b.upper;
}

} // namespace jsrkit
