#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "barabanov.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "finiteness.hpp"
#include "jsr_bounds.hpp"
#include "structure.hpp"
#include "tuple.hpp"

namespace jsrkit::io {

using nlohmann::json;

// Scalars: reals as numbers, complex numbers as [re, im].

inline json scalar_to_json(real x) { return x; }
inline json scalar_to_json(const complex& z) { return json::array({z.real(), z.imag()}); }

template <Scalar T>
json vector_to_json(const Vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

template <Scalar T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar T>
json tuple_to_json(const MatrixTuple<T>& t) {
    json mats = json::array();
    for (const auto& m : t.matrices()) mats.push_back(matrix_to_json(m));
    return {{"field", std::string(to_string(t.field()))}, {"r", t.size()}, {"d", t.dim()}, {"matrices", mats}};
}

inline json tuple_to_json(const AnyTuple& t) {
    return std::visit([](const auto& x) { return tuple_to_json(x); }, t);
}

namespace detail {

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::size_t require_count(const json& j, const char* key) {
    const auto& v = require(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ParseError(std::string("'") + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

inline real require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + " must be a number");
    return j.get<real>();
}

template <Scalar T>
T parse_scalar(const json& j, const std::string& where) {
    if constexpr (is_complex_v<T>) {
        if (j.is_number()) return T(j.get<real>(), 0);
        if (!j.is_array() || j.size() != 2) throw ParseError(where + " must be [re, im]");
        return T(require_number(j[0], where), require_number(j[1], where));
    } else {
        return require_number(j, where);
    }
}

template <Scalar T>
MatrixTuple<T> parse_matrices(const json& mats, std::size_t r, std::size_t d) {
    if (!mats.is_array() || mats.size() != r) {
        throw ParseError("'matrices' must be an array of r = " + std::to_string(r) + " matrices");
    }
    std::vector<Matrix<T>> out;
    for (std::size_t k = 0; k < r; ++k) {
        const auto& rows = mats[k];
        const std::string where = "matrix " + std::to_string(k + 1);
        if (!rows.is_array() || rows.size() != d) throw ParseError(where + " must have d = " + std::to_string(d) + " rows");
        std::vector<T> data;
        data.reserve(d * d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!rows[i].is_array() || rows[i].size() != d) {
                throw ParseError(where + " row " + std::to_string(i + 1) + " must have d entries");
            }
            for (std::size_t j = 0; j < d; ++j) {
                data.push_back(parse_scalar<T>(rows[i][j], where + " entry (" + std::to_string(i + 1) + "," +
                                                               std::to_string(j + 1) + ")"));
            }
        }
        out.emplace_back(d, std::move(data));
    }
    return MatrixTuple<T>(std::move(out));
}

} // namespace detail

/// Parses the tuple document. Unknown keys (e.g. "truth") are ignored.
inline AnyTuple parse_tuple(const json& j) {
    const auto& field = detail::require(j, "field");
    if (!field.is_string()) throw ParseError("'field' must be \"real\" or \"complex\"");
    const std::size_t r = detail::require_count(j, "r");
    const std::size_t d = detail::require_count(j, "d");
    const auto& mats = detail::require(j, "matrices");
    const auto f = field.get<std::string>();
    if (f == "real") return detail::parse_matrices<real>(mats, r, d);
    if (f == "complex") return detail::parse_matrices<complex>(mats, r, d);
    throw ParseError("'field' must be \"real\" or \"complex\", got \"" + f + "\"");
}

inline AnyTuple parse_tuple_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_tuple(j);
}

inline json norm_to_json(const NormRep& n) {
    return std::visit(
        [](const auto& x) -> json {
            using N = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<N, WeightedMaxNorm>) {
                return {{"variant", "weighted_max"}, {"weights", x.weights}};
            } else if constexpr (std::is_same_v<N, EllPNorm>) {
                json out = {{"variant", "ellp"}, {"p", x.p}};
                if (!x.weights.empty()) out["weights"] = x.weights;
                return out;
            } else {
                return {{"variant", "mesh"}, {"angles", x.angles}, {"values", x.values}};
            }
        },
        n);
}

inline NormRep parse_norm(const json& j) {
    const auto& variant = detail::require(j, "variant");
    if (!variant.is_string()) throw ParseError("'variant' must be a string");
    auto numbers = [&](const char* key) {
        const auto& arr = detail::require(j, key);
        if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
        std::vector<real> out;
        for (const auto& x : arr) out.push_back(detail::require_number(x, key));
        return out;
    };
    NormRep n;
    const auto v = variant.get<std::string>();
    if (v == "weighted_max") {
        n = WeightedMaxNorm{numbers("weights")};
    } else if (v == "ellp") {
        EllPNorm e{detail::require_number(detail::require(j, "p"), "p"), {}};
        if (j.contains("weights")) e.weights = numbers("weights");
        n = e;
    } else if (v == "mesh") {
        n = MeshNorm{numbers("angles"), numbers("values")};
    } else {
        throw ParseError("unknown norm variant \"" + v + "\"");
    }
    try {
        validate(n);
    } catch (const ArgumentError& e) {
        throw ParseError(e.what());
    }
    return n;
}

inline json word_to_json(const Word& w) { return to_string(w); }

inline json bounds_to_json(const JsrBounds& b) {
    return {{"lower", b.lower},
            {"upper", b.upper},
            {"depth", b.depth},
            {"witness", word_to_json(b.lower_witness)},
            {"upper_level", b.upper_level},
            {"partial", b.partial}};
}

template <Scalar T>
json verdict_to_json(const Verdict<IrreducibilityEvidence<T>>& v) {
    json basis = json::array();
    for (const auto& b : v.evidence.invariant_basis) basis.push_back(vector_to_json(b));
    return {{"status", std::string(to_string(v.status))},
            {"evidence",
             {{"dim", v.evidence.dim},
              {"algebra_dimension", v.evidence.algebra_dimension},
              {"invariant_basis", basis},
              {"invariance_residual", v.evidence.invariance_residual},
              {"method", v.evidence.method}}}};
}

inline json verdict_to_json(const Verdict<RankOneEvidence>& v) {
    return {{"status", std::string(to_string(v.status))},
            {"evidence",
             {{"bounds", bounds_to_json(v.evidence.base)},
              {"wedge_bounds", bounds_to_json(v.evidence.wedge)},
              {"tol", v.evidence.tol},
              {"reason", v.evidence.reason}}}};
}

template <Scalar T>
json report_to_json(const VerificationReport<T>& r, real tol) {
    return {{"max_residual", r.max_residual},
            {"worst_point", vector_to_json(r.worst_point)},
            {"samples_checked", r.samples_checked},
            {"tol", tol},
            {"passes", r.passes(tol)}};
}

inline json approx_to_json(const BarabanovApprox& a) {
    return {{"norm", norm_to_json(a.norm)},
            {"iterations", a.iterations},
            {"converged", a.converged},
            {"last_step", a.last_step}};
}

inline json sfh_to_json(const SfhReport& r) {
    json offenders = json::array();
    for (const auto& o : r.offenders) {
        offenders.push_back({{"word", word_to_json(o.word)}, {"value", o.value}, {"norm_index", o.norm_index}});
    }
    return {{"candidate", word_to_json(r.candidate)},
            {"depth", r.depth},
            {"margin", r.margin},
            {"tol", r.tol},
            {"rho_hat", r.rho_hat},
            {"norm_margins", r.norm_margins},
            {"candidate_values", r.candidate_values},
            {"offenders", offenders},
            {"supports_sfh", r.supports_sfh()},
            {"caveat",
             "evidence only: the hypothesis quantifies over all Barabanov norms, only the listed norms were checked"}};
}

inline json truth_to_json(const GroundTruth& g) {
    auto flag = [](const std::optional<bool>& b) -> json { return b ? json(*b) : json(nullptr); };
    json norms = json::array();
    for (const auto& n : g.barabanov_norms) norms.push_back(norm_to_json(n));
    return {{"jsr", g.jsr},
            {"barabanov_norms", norms},
            {"irreducible", flag(g.irreducible)},
            {"finiteness", flag(g.finiteness)},
            {"sfh", flag(g.sfh)},
            {"rank_one", flag(g.rank_one)},
            {"unique_norm", flag(g.unique_norm)},
            {"unbounded_agreements", flag(g.unbounded_agreements)},
            {"characteristic_word", g.characteristic_word ? word_to_json(*g.characteristic_word) : json(nullptr)},
            {"description", g.description}};
}

} // namespace jsrkit::io
