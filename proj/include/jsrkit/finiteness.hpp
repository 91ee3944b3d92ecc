#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "barabanov.hpp"
#include "config.hpp"
#include "jsr_bounds.hpp"
#include "tuple.hpp"
#include "words.hpp"

namespace jsrkit {

/// A word outside the candidate's rotation class whose product is (near) norm-maximal.
struct Offender {
    Word word;
    real value = 0;              ///< ||P_z|| in the norm below
    std::size_t norm_index = 0;  ///< position in the supplied norm list
};

/**
 * @brief Evidence for the strong finiteness hypothesis with a candidate word.
 *
 * margin = min over norms of (rho_hat^n - max_{z !~ w} ||P_z||) / rho_hat^n.
 * Offenders are the z with ||P_z|| >= rho_hat^n (1 - tol), so offenders is
 * empty exactly when margin > tol. A positive margin under finitely many
 * norms is evidence, not proof: the hypothesis quantifies over every
 * Barabanov norm.
 */
struct SfhReport {
    Word candidate;
    std::size_t depth = 0;
    real margin = 0;
    real tol = defaults::offender_tol;
    real rho_hat = 1;
    std::vector<real> norm_margins;     ///< one per supplied norm
    std::vector<real> candidate_values; ///< ||P_w|| per norm
    std::vector<Offender> offenders;

    bool supports_sfh() const { return offenders.empty(); }
};

struct SfhOptions {
    real offender_tol = defaults::offender_tol;
    real barabanov_tol = defaults::barabanov_tol;  ///< each norm must verify at this residual
    std::uint64_t budget = defaults::word_budget;
};

template <Scalar T>
SfhReport sfh_evidence(const MatrixTuple<T>& t, const Word& omega, const std::vector<NormRep>& norms, real rho_hat,
                       const std::vector<Vector<T>>& samples, const SfhOptions& opts = {}) {
    if (norms.empty()) throw ArgumentError("SFH evidence needs at least one norm");
    if (!(rho_hat > 0)) throw ArgumentError("rho_hat must be positive");
    if (omega.max_letter() > t.size()) throw ArgumentError("candidate word uses letters beyond the tuple size");
    for (std::size_t k = 0; k < norms.size(); ++k) {
        const auto rep = verify_barabanov(t, norms[k], rho_hat, samples);
        if (!rep.passes(opts.barabanov_tol)) {
            throw ArgumentError("norm " + std::to_string(k) + " is not a Barabanov norm at tolerance " +
                                std::to_string(opts.barabanov_tol) + " (residual " +
                                std::to_string(rep.max_residual) + ")");
        }
    }

    const std::size_t n = omega.size();
    SfhReport out;
    out.candidate = Word(t.size(), omega.letters());
    out.depth = n;
    out.tol = opts.offender_tol;
    out.rho_hat = rho_hat;
    const real target = std::pow(rho_hat, static_cast<real>(n));
    out.margin = std::numeric_limits<real>::infinity();

    std::vector<Word> others;
    for_each_word(
        t.size(), n,
        [&](Word z) {
            if (!rotation_equivalent(z, omega)) others.push_back(std::move(z));
        },
        opts.budget);
    std::vector<Matrix<T>> products;
    products.reserve(others.size());
    for (const auto& z : others) products.push_back(product_along(t, z));

    for (std::size_t k = 0; k < norms.size(); ++k) {
        out.candidate_values.push_back(induced_norm(norms[k], product_along(t, omega), samples));
        real worst = 0;
        for (std::size_t idx = 0; idx < others.size(); ++idx) {
            const real v = induced_norm(norms[k], products[idx], samples);
            worst = std::max(worst, v);
            if (v >= target * (1 - opts.offender_tol)) out.offenders.push_back({others[idx], v, k});
        }
        const real m = (target - worst) / target;
        out.norm_margins.push_back(m);
        out.margin = std::min(out.margin, m);
    }
    return out;
}

/// sfh_evidence on every spectral-maximal candidate up to depth, best margin first.
template <Scalar T>
std::vector<SfhReport> characteristic_word_search(const MatrixTuple<T>& t, std::size_t depth,
                                                  const std::vector<NormRep>& norms, real rho_hat,
                                                  const std::vector<Vector<T>>& samples, const SfhOptions& opts = {},
                                                  real tie_tol = defaults::tie_tol) {
    std::vector<SfhReport> reports;
    for (const auto& c : spectral_maximal_candidates(t, depth, tie_tol, opts.budget)) {
        reports.push_back(sfh_evidence(t, c.word, norms, rho_hat, samples, opts));
    }
    std::stable_sort(reports.begin(), reports.end(), [](const SfhReport& a, const SfhReport& b) {
        if (a.margin != b.margin) return a.margin > b.margin;
        return a.depth < b.depth;
    });
    return reports;
}

} // namespace jsrkit
