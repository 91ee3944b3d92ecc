// jsrkit command-line front end.
//
// Every analysis reads the tuple JSON document and writes a JSON (or text)
// report to stdout or --output. Exit codes: 0 success, 1 Unknown verdict
// under --strict, 2 input or analysis error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <jsrkit/jsrkit.hpp>
#include <jsrkit/json_io.hpp>

namespace {

using namespace jsrkit;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    std::string input;
    std::string output;
    std::string format = "json";
    std::size_t depth = defaults::depth;
    std::optional<real> tol;
    std::size_t mesh = defaults::mesh_size;
    std::size_t max_iter = defaults::approx_max_iter;
    std::string word;
    std::optional<real> rho_hat;
    std::vector<std::string> norms;
    std::string init;
    std::uint64_t seed = defaults::seed;
    std::uint64_t budget = defaults::word_budget;
    bool strict = false;
    bool no_prune = false;
    bool candidates = false;
    bool extremal = false;
    std::size_t search_depth = 0;

    // construct
    std::optional<int> example;
    std::size_t r = 0;
    std::string field = "real";
    std::string l1 = "0", l2 = "0", lambda = "0.5";
    real xi = 1;

    // words
    std::size_t n = 0;
};

/// Input errors all map to exit code 2.
struct InputError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    if (path.empty()) throw InputError("--input is required");
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AnyTuple load_tuple(const RunConfig& cfg) { return io::parse_tuple_text(read_file(cfg.input)); }

NormRep load_norm(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError("malformed norm JSON in '" + path + "': " + e.what());
    }
    return io::parse_norm(j);
}

complex parse_param(const std::string& text, const char* name) {
    try {
        const auto comma = text.find(',');
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const real re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0};
        }
        const real re = std::stod(text.substr(0, comma));
        const real im = std::stod(text.substr(comma + 1));
        return {re, im};
    } catch (const std::logic_error&) {
        throw InputError(std::string("--") + name + " expects 're' or 're,im', got '" + text + "'");
    }
}

json config_json(const RunConfig& cfg) {
    json c = {{"depth", cfg.depth}, {"budget", cfg.budget}, {"seed", cfg.seed}, {"mesh", cfg.mesh}};
    if (cfg.tol) c["tol"] = *cfg.tol;
    if (cfg.rho_hat) c["rho_hat"] = *cfg.rho_hat;
    return c;
}

void flatten_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const RunConfig& cfg, const json& j) {
    std::ostringstream os;
    if (cfg.format == "text") {
        flatten_text(j, "", os);
    } else {
        os << j.dump(2) << "\n";
    }
    if (cfg.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw InputError("cannot write '" + cfg.output + "'");
        out << os.str();
    }
}

BoundsOptions bounds_options(const RunConfig& cfg) { return {cfg.budget, !cfg.no_prune}; }

/// User value, or the midpoint of the certified bounds at --depth.
template <Scalar T>
real resolve_rho_hat(const RunConfig& cfg, const MatrixTuple<T>& t) {
    if (cfg.rho_hat) {
        if (!(*cfg.rho_hat > 0)) throw ArgumentError("--rho-hat must be positive");
        return *cfg.rho_hat;
    }
    const auto b = bounds(t, cfg.depth, bounds_options(cfg));
    return 0.5 * (b.lower + b.upper);
}

template <Scalar T>
std::vector<Vector<T>> samples_for(const RunConfig& cfg, std::size_t d) {
    return default_samples<T>(d, cfg.mesh, cfg.seed);
}

int cmd_bounds(const RunConfig& cfg) {
    const auto tuple = load_tuple(cfg);
    return std::visit(
        [&](const auto& t) {
            const auto b = bounds(t, cfg.depth, bounds_options(cfg));
            const real close = cfg.tol.value_or(defaults::close_tol);
            json out = io::bounds_to_json(b);
            out["finiteness_verified"] = finiteness_verified_at_depth(b, close);
            if (cfg.candidates) {
                json cands = json::array();
                for (const auto& c : spectral_maximal_candidates(t, cfg.depth, defaults::tie_tol, cfg.budget)) {
                    cands.push_back({{"word", io::word_to_json(c.word)}, {"value", c.value}});
                }
                out["candidates"] = cands;
            }
            out["config"] = config_json(cfg);
            out["config"]["close_tol"] = close;
            out["config"]["tie_tol"] = defaults::tie_tol;
            emit(cfg, out);
            return kExitOk;
        },
        tuple);
}

int cmd_rank1(const RunConfig& cfg) {
    const auto tuple = load_tuple(cfg);
    return std::visit(
        [&](const auto& t) {
            const real tol = cfg.tol.value_or(defaults::rank_one_tol);
            const auto v = rank_one_property(t, cfg.depth, tol, bounds_options(cfg));
            json out = io::verdict_to_json(v);
            if (t.dim() == 2) out["evidence"]["eigen_separation"] = eigen_separation_heuristic(t);
            out["config"] = config_json(cfg);
            emit(cfg, out);
            return cfg.strict && v.status == Status::Unknown ? kExitUnknown : kExitOk;
        },
        tuple);
}

int cmd_irreducible(const RunConfig& cfg) {
    const auto tuple = load_tuple(cfg);
    return std::visit(
        [&](const auto& t) {
            IrreducibilityOptions opts;
            opts.seed = cfg.seed;
            const auto v = is_irreducible(t, opts);
            json out = io::verdict_to_json(v);
            out["field"] = std::string(to_string(t.field()));
            out["config"] = config_json(cfg);
            emit(cfg, out);
            return cfg.strict && v.status == Status::Unknown ? kExitUnknown : kExitOk;
        },
        tuple);
}

int cmd_barabanov_approx(const RunConfig& cfg) {
    const auto tuple = load_tuple(cfg);
    const auto* t = std::get_if<RealTuple>(&tuple);
    if (t == nullptr) throw ArgumentError("Barabanov approximation supports real tuples only");
    const real rho_hat = resolve_rho_hat(cfg, *t);
    const NormRep init = cfg.init.empty() ? NormRep(euclidean_norm()) : load_norm(cfg.init);
    ApproxOptions opts{cfg.mesh, cfg.max_iter, cfg.tol.value_or(defaults::approx_tol)};
    const auto approx = approx_barabanov(*t, rho_hat, init, opts);
    const auto report = verify_barabanov(*t, NormRep(approx.norm), rho_hat, circle_mesh(cfg.mesh));
    json out = io::approx_to_json(approx);
    out["rho_hat"] = rho_hat;
    out["verification"] = io::report_to_json(report, 10 * opts.tol);
    out["config"] = config_json(cfg);
    out["config"]["max_iter"] = cfg.max_iter;
    emit(cfg, out);
    return cfg.strict && !approx.converged ? kExitUnknown : kExitOk;
}

int cmd_barabanov_verify(const RunConfig& cfg) {
    if (cfg.norms.size() != 1) throw InputError("verify needs exactly one --norm file");
    const auto tuple = load_tuple(cfg);
    const NormRep norm = load_norm(cfg.norms.front());
    return std::visit(
        [&](const auto& t) {
            using T = typename std::decay_t<decltype(t)>::scalar_type;
            const real rho_hat = resolve_rho_hat(cfg, t);
            const real tol = cfg.tol.value_or(defaults::barabanov_tol);
            const auto samples = samples_for<T>(cfg, t.dim());
            const auto rep = cfg.extremal ? verify_extremal(t, norm, rho_hat, samples)
                                          : verify_barabanov(t, norm, rho_hat, samples);
            json out = io::report_to_json(rep, tol);
            out["kind"] = cfg.extremal ? "extremal" : "barabanov";
            out["rho_hat"] = rho_hat;
            out["config"] = config_json(cfg);
            emit(cfg, out);
            return cfg.strict && !rep.passes(tol) ? kExitUnknown : kExitOk;
        },
        tuple);
}

int cmd_sfh(const RunConfig& cfg) {
    const auto tuple = load_tuple(cfg);
    return std::visit(
        [&](const auto& t) {
            using T = typename std::decay_t<decltype(t)>::scalar_type;
            const real rho_hat = resolve_rho_hat(cfg, t);
            std::vector<NormRep> norms;
            for (const auto& path : cfg.norms) norms.push_back(load_norm(path));
            json out;
            if (norms.empty()) {
                if constexpr (is_complex_v<T>) {
                    throw InputError("complex tuples need at least one --norm");
                } else {
                    if (t.dim() != 2) throw InputError("tuples with d != 2 need at least one --norm");
                    const auto approx = approx_barabanov(t, rho_hat, euclidean_norm(), {cfg.mesh, cfg.max_iter});
                    norms.push_back(approx.norm);
                    out["approximated_norm"] = io::approx_to_json(approx);
                }
            }
            SfhOptions opts;
            opts.offender_tol = cfg.tol.value_or(defaults::offender_tol);
            opts.budget = cfg.budget;
            const auto samples = samples_for<T>(cfg, t.dim());
            if (cfg.search_depth > 0) {
                json reports = json::array();
                for (const auto& r : characteristic_word_search(t, cfg.search_depth, norms, rho_hat, samples, opts)) {
                    reports.push_back(io::sfh_to_json(r));
                }
                out["reports"] = reports;
            } else {
                if (cfg.word.empty()) throw InputError("sfh needs --word or --search");
                out["report"] = io::sfh_to_json(sfh_evidence(t, parse_word(cfg.word, t.size()), norms, rho_hat, samples, opts));
            }
            out["config"] = config_json(cfg);
            out["config"]["barabanov_tol"] = opts.barabanov_tol;
            emit(cfg, out);
            return kExitOk;
        },
        tuple);
}

template <Scalar T>
json construct_json(const RunConfig& cfg) {
    if (cfg.example) {
        ExampleParams p;
        p.id = *cfg.example;
        p.lambda1 = parse_param(cfg.l1, "l1");
        p.lambda2 = parse_param(cfg.l2, "l2");
        p.lambda = parse_param(cfg.lambda, "lambda");
        p.xi = cfg.xi;
        const auto fx = example_tuple<T>(p);
        json out = io::tuple_to_json(fx.tuple);
        out["truth"] = io::truth_to_json(fx.truth);
        out["truth"]["example"] = p.id;
        return out;
    }
    const Word omega = parse_word(cfg.word);
    const std::size_t r = cfg.r == 0 ? omega.max_letter() : cfg.r;
    const auto t = characteristic_tuple<T>(r, omega);
    json out = io::tuple_to_json(t);
    GroundTruth g;
    g.barabanov_norms = {max_norm(t.dim())};
    g.irreducible = g.finiteness = g.sfh = g.rank_one = true;
    g.characteristic_word = Word(r, omega.letters());
    g.description = "characteristic-word construction";
    out["truth"] = io::truth_to_json(g);
    return out;
}

int cmd_construct(const RunConfig& cfg) {
    if (cfg.example.has_value() == !cfg.word.empty()) throw InputError("construct needs exactly one of --example or --word");
    json out;
    if (cfg.field == "real") {
        out = construct_json<real>(cfg);
    } else if (cfg.field == "complex") {
        out = construct_json<complex>(cfg);
    } else {
        throw InputError("--field must be real or complex");
    }
    emit(cfg, out);
    return kExitOk;
}

int cmd_words(const RunConfig& cfg, const std::string& mode) {
    std::ostringstream os;
    if (mode == "canonical") {
        const Word w = parse_word(cfg.word);
        os << to_string(canonical_rotation(w)) << (is_primitive(w) ? " primitive" : " non-primitive") << "\n";
    } else {
        if (cfg.r == 0 || cfg.n == 0) throw InputError("words " + mode + " needs --r and --n");
        auto print = [&](const Word& w) { os << to_string(w) << "\n"; };
        if (mode == "all") {
            for_each_word(cfg.r, cfg.n, print, cfg.budget);
        } else if (mode == "necklaces") {
            for_each_necklace(cfg.r, cfg.n, print, cfg.budget);
        } else {
            for_each_necklace(cfg.r, cfg.n, [&](const Word& w) { if (is_primitive(w)) print(w); }, cfg.budget);
        }
    }
    if (cfg.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw InputError("cannot write '" + cfg.output + "'");
        out << os.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jsrkit: joint spectral radius bounds, structure tests and Barabanov norms for matrix tuples"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input,-i", cfg.input, "Tuple JSON file ('-' for stdin)");
        if (needs_input) in->required();
        sub->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", cfg.seed, "Seed for randomized searches and samples");
        sub->add_option("--budget", cfg.budget, "Maximum words enumerated per level");
        sub->add_flag("--strict", cfg.strict, "Exit 1 when the analysis is inconclusive");
    };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--depth,-n", cfg.depth, "Maximum word length")->check(CLI::PositiveNumber);
    };
    auto add_tol = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("--tol", cfg.tol, what)->check(CLI::PositiveNumber);
    };

    auto* bounds_cmd = app.add_subcommand("bounds", "Certified JSR enclosure from products up to --depth");
    add_common(bounds_cmd, true);
    add_depth(bounds_cmd);
    add_tol(bounds_cmd, "Relative closure tolerance for the finiteness check");
    bounds_cmd->add_flag("--no-prune", cfg.no_prune, "Disable prefix pruning in the upper bound");
    bounds_cmd->add_flag("--candidates", cfg.candidates, "List spectral-maximal candidate words");

    auto* rank1_cmd = app.add_subcommand("rank1", "Rank-one property via the exterior square");
    add_common(rank1_cmd, true);
    add_depth(rank1_cmd);
    add_tol(rank1_cmd, "Relative slack in the verdict comparisons");

    auto* irr_cmd = app.add_subcommand("irreducible", "Common invariant subspace test");
    add_common(irr_cmd, true);

    auto* bar_cmd = app.add_subcommand("barabanov", "Barabanov norm approximation and verification");
    bar_cmd->require_subcommand(1);
    auto* approx_cmd = bar_cmd->add_subcommand("approx", "Fixed-point iteration on a circle mesh (real, d = 2)");
    add_common(approx_cmd, true);
    add_depth(approx_cmd);
    add_tol(approx_cmd, "Stop when consecutive iterates are this close in d_N");
    approx_cmd->add_option("--rho-hat", cfg.rho_hat, "JSR estimate (default: bounds midpoint)");
    approx_cmd->add_option("--mesh", cfg.mesh, "Number of mesh directions")->check(CLI::Range(2, 1 << 22));
    approx_cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap");
    approx_cmd->add_option("--init", cfg.init, "Initial norm JSON (default: Euclidean)");
    auto* verify_cmd = bar_cmd->add_subcommand("verify", "Residual of the Barabanov equation for a norm");
    add_common(verify_cmd, true);
    add_depth(verify_cmd);
    add_tol(verify_cmd, "Residual at which the norm passes");
    verify_cmd->add_option("--rho-hat", cfg.rho_hat, "JSR estimate (default: bounds midpoint)");
    verify_cmd->add_option("--norm", cfg.norms, "Norm JSON file")->required();
    verify_cmd->add_option("--mesh", cfg.mesh, "Mesh directions (real d = 2)")->check(CLI::Range(2, 1 << 22));
    verify_cmd->add_flag("--extremal", cfg.extremal, "Check only the extremal inequality");

    auto* sfh_cmd = app.add_subcommand("sfh", "Strong finiteness hypothesis evidence for a word");
    add_common(sfh_cmd, true);
    add_depth(sfh_cmd);
    add_tol(sfh_cmd, "Relative offender threshold");
    sfh_cmd->add_option("--word,-w", cfg.word, "Candidate word, e.g. 1,2");
    sfh_cmd->add_option("--search", cfg.search_depth, "Scan spectral-maximal candidates up to this length");
    sfh_cmd->add_option("--rho-hat", cfg.rho_hat, "JSR estimate (default: bounds midpoint)");
    sfh_cmd->add_option("--norm", cfg.norms, "Barabanov norm JSON file (repeatable)");
    sfh_cmd->add_option("--mesh", cfg.mesh, "Mesh directions (real d = 2)")->check(CLI::Range(2, 1 << 22));
    sfh_cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap for the approximated norm");

    auto* construct_cmd = app.add_subcommand("construct", "Emit a fixture or characteristic-word tuple");
    add_common(construct_cmd, false);
    construct_cmd->add_option("--example", cfg.example, "Example id 1..5")->check(CLI::Range(1, 5));
    construct_cmd->add_option("--word,-w", cfg.word, "Primitive characteristic word");
    construct_cmd->add_option("--r", cfg.r, "Number of matrices (default: largest letter)");
    construct_cmd->add_option("--field", cfg.field, "real or complex");
    construct_cmd->add_option("--l1", cfg.l1, "lambda_1 for example 1 ('re' or 're,im')");
    construct_cmd->add_option("--l2", cfg.l2, "lambda_2 for example 1");
    construct_cmd->add_option("--lambda", cfg.lambda, "lambda for examples 2-4");
    construct_cmd->add_option("--xi", cfg.xi, "xi for example 4");

    auto* words_cmd = app.add_subcommand("words", "Word combinatorics");
    words_cmd->require_subcommand(1);
    std::string words_mode;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"all", "All r^n words"},
             {"necklaces", "One least representative per rotation class"},
             {"primitive", "Primitive necklaces"},
             {"canonical", "Least rotation and primitivity of --word"}}) {
        auto* sub = words_cmd->add_subcommand(name, help);
        add_common(sub, false);
        sub->add_option("--r", cfg.r, "Alphabet size");
        sub->add_option("--n", cfg.n, "Word length");
        sub->add_option("--word,-w", cfg.word, "Word, e.g. 2,1,2");
        sub->callback([&words_mode, name = name] { words_mode = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(cfg);
        if (rank1_cmd->parsed()) return cmd_rank1(cfg);
        if (irr_cmd->parsed()) return cmd_irreducible(cfg);
        if (approx_cmd->parsed()) return cmd_barabanov_approx(cfg);
        if (verify_cmd->parsed()) return cmd_barabanov_verify(cfg);
        if (sfh_cmd->parsed()) return cmd_sfh(cfg);
        if (construct_cmd->parsed()) return cmd_construct(cfg);
        if (words_cmd->parsed()) return cmd_words(cfg, words_mode);
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
    } catch (const DimensionError& e) {
        std::cerr << "error: shape: " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
    } catch (const ConvergenceError& e) {
        std::cerr << "error: convergence: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInput;
}
