#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "barabanov.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "tuple.hpp"
#include "words.hpp"

namespace jsrkit {

/// (k + 1) mod n without sign pitfalls; indices are 0-based.
inline std::size_t cyclic_next(std::size_t k, std::size_t n) { return k + 1 == n ? 0 : k + 1; }

/**
 * @brief Tuple for which omega is a characteristic word.
 *
 * d = |omega|. A_{omega_i} e_i = e_{i+1} with indices mod d, and every other
 * basis action is zero. omega must be primitive and use exactly the symbols
 * {1..r'} for some r' <= r; slots r'+j (j >= 1) are set to A_{1+((j-1) mod r')}
 * scaled by 1/(j+1). The construction checks its own postconditions: the
 * omega-product has spectral radius 1 and rank 1, |||A_i||| <= 1, and every
 * other product of length d over {1..r'} vanishes.
 */
template <Scalar T = real>
MatrixTuple<T> characteristic_tuple(std::size_t r, const Word& omega) {
    const std::size_t n = omega.size();
    if (omega.max_letter() > r) throw ArgumentError("characteristic word uses letters beyond r");
    if (!is_primitive(omega)) {
        throw ArgumentError("characteristic word " + to_string(omega) + " is a power of a shorter word");
    }
    const std::size_t used = omega.max_letter();
    for (Letter s = 1; s <= used; ++s) {
        if (std::find(omega.letters().begin(), omega.letters().end(), s) == omega.letters().end()) {
            throw ArgumentError("characteristic word must use an initial segment of symbols; " +
                                std::to_string(s) + " is missing");
        }
    }

    std::vector<Matrix<T>> mats(r, Matrix<T>(n));
    for (std::size_t i = 0; i < n; ++i) mats[omega[i] - 1](cyclic_next(i, n), i) = T{1};
    for (std::size_t j = 1; used + j <= r; ++j) {
        mats[used + j - 1] = mats[(j - 1) % used] * T(1.0 / static_cast<real>(j + 1));
    }
    MatrixTuple<T> t(std::move(mats));

    const Word w(used, omega.letters());
    const auto p = product_along(t, w);
    if (std::abs(spectral_radius(p) - 1) > 1e-12 || rank_eps(p) != 1) {
        throw Error("characteristic product lost spectral radius 1 or rank 1");
    }
    for (Letter i = 1; i <= used; ++i) {
        if (op_norm(t[i]) > 1 + 1e-12) throw Error("characteristic slot has operator norm above 1");
    }
    for_each_word(used, n, [&](const Word& z) {
        if (!rotation_equivalent(z, w) && !product_along(t, z).is_zero()) {
            throw Error("product along " + to_string(z) + " does not vanish");
        }
    });
    return t;
}

/// Known facts about a fixture. Unset flags are not asserted either way.
struct GroundTruth {
    real jsr = 1;
    std::vector<NormRep> barabanov_norms;
    std::optional<bool> irreducible;
    std::optional<bool> finiteness;
    std::optional<bool> sfh;
    std::optional<bool> rank_one;
    std::optional<bool> unique_norm;
    std::optional<bool> unbounded_agreements;
    std::optional<Word> characteristic_word;
    std::string description;
};

template <Scalar T>
struct Fixture {
    MatrixTuple<T> tuple;
    GroundTruth truth;
};

/**
 * Parameters of the built-in fixtures:
 *  1: A1 = [[0,1],[l1,0]], A2 = [[0,l2],[1,0]], 0 <= |l1|,|l2| < 1
 *  2: A1 = diag(1,l), A2 = [[0,l],[l,0]], 0 < |l| < 1
 *  3: A1 = diag(1,-1), A2 = [[0,l],[l,0]], 0 < |l| < 1
 *  4: diag(1,0), diag(0,1), [[0,l],[l,0]], 0 < |l| < 1; xi in [|l|, 1/|l|]
 *  5: swap [[0,1],[1,0]] and I/2
 */
struct ExampleParams {
    int id = 1;
    complex lambda1{0};
    complex lambda2{0};
    complex lambda{0.5};
    real xi = 1;
};

namespace detail {

template <Scalar T>
T field_value(complex z, const char* name) {
    if constexpr (is_complex_v<T>) {
        return z;
    } else {
        if (z.imag() != 0) throw ArgumentError(std::string(name) + " must be real for a real tuple");
        return z.real();
    }
}

inline void require_open_unit(complex z, const char* name, bool allow_zero) {
    const real m = std::abs(z);
    if (!(m < 1) || (!allow_zero && m == 0)) {
        throw ArgumentError(std::string(name) + " must satisfy " + (allow_zero ? "0 <= " : "0 < ") + "|" + name +
                            "| < 1");
    }
}

} // namespace detail

template <Scalar T = real>
Fixture<T> example_tuple(const ExampleParams& p) {
    const T one{1};
    const T zero{};
    GroundTruth g;
    switch (p.id) {
        case 1: {
            detail::require_open_unit(p.lambda1, "lambda1", true);
            detail::require_open_unit(p.lambda2, "lambda2", true);
            const T l1 = detail::field_value<T>(p.lambda1, "lambda1");
            const T l2 = detail::field_value<T>(p.lambda2, "lambda2");
            g.barabanov_norms = {max_norm(2)};
            g.irreducible = g.finiteness = g.sfh = g.rank_one = g.unique_norm = g.unbounded_agreements = true;
            g.characteristic_word = Word(2, {1, 2});
            g.description = "alternating pair; unique Barabanov norm max(|x|,|y|)";
            return {MatrixTuple<T>({Matrix<T>{{zero, one}, {l1, zero}}, Matrix<T>{{zero, l2}, {one, zero}}}), g};
        }
        case 2: {
            detail::require_open_unit(p.lambda, "lambda", false);
            const T l = detail::field_value<T>(p.lambda, "lambda");
            g.barabanov_norms = {WeightedMaxNorm{{1.0, std::abs(p.lambda)}}};
            g.irreducible = g.finiteness = g.rank_one = g.unbounded_agreements = true;
            g.sfh = false;
            g.description = "finiteness without the strong finiteness hypothesis";
            return {MatrixTuple<T>({Matrix<T>{{one, zero}, {zero, l}}, Matrix<T>{{zero, l}, {l, zero}}}), g};
        }
        case 3: {
            detail::require_open_unit(p.lambda, "lambda", false);
            const T l = detail::field_value<T>(p.lambda, "lambda");
            g.barabanov_norms = {EllPNorm{1.0, {}}, EllPNorm{2.0, {}}, max_norm(2)};
            g.irreducible = g.finiteness = g.unbounded_agreements = true;
            g.rank_one = g.unique_norm = false;
            g.description = "every l_p norm is Barabanov; identity in the limit semigroup";
            return {MatrixTuple<T>({Matrix<T>{{one, zero}, {zero, -one}}, Matrix<T>{{zero, l}, {l, zero}}}), g};
        }
        case 4: {
            detail::require_open_unit(p.lambda, "lambda", false);
            const real m = std::abs(p.lambda);
            if (!(p.xi >= m && p.xi <= 1 / m)) throw ArgumentError("xi must lie in [|lambda|, 1/|lambda|]");
            const T l = detail::field_value<T>(p.lambda, "lambda");
            for (real xi : {m, p.xi, 1 / m}) {
                const bool seen = std::any_of(g.barabanov_norms.begin(), g.barabanov_norms.end(), [&](const NormRep& n) {
                    return std::get<WeightedMaxNorm>(n).weights[1] == xi;
                });
                if (!seen) g.barabanov_norms.push_back(WeightedMaxNorm{{1.0, xi}});
            }
            g.irreducible = g.finiteness = g.rank_one = true;
            g.unique_norm = g.unbounded_agreements = false;
            g.description = "coordinate projections plus a contraction; a family max(|x|, xi|y|) of Barabanov norms";
            return {MatrixTuple<T>({Matrix<T>{{one, zero}, {zero, zero}}, Matrix<T>{{zero, zero}, {zero, one}},
                                    Matrix<T>{{zero, l}, {l, zero}}}),
                    g};
        }
        case 5: {
            const T half{0.5};
            g.barabanov_norms = {euclidean_norm(), max_norm(2)};
            // span{(1,1)} is invariant under both matrices
            g.irreducible = false;
            g.finiteness = g.sfh = true;
            g.rank_one = false;
            g.characteristic_word = Word(2, {1});
            g.description = "swap with half identity; JSR attained by the swap alone";
            return {MatrixTuple<T>({Matrix<T>{{zero, one}, {one, zero}}, Matrix<T>{{half, zero}, {zero, half}}}), g};
        }
        default:
            throw ArgumentError("example id must be 1..5, got " + std::to_string(p.id));
    }
}

} // namespace jsrkit
