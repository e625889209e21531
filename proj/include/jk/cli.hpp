#ifndef JK_CLI_HPP
#define JK_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jk/io.hpp"
#include "jk/lie_invariants.hpp"

namespace jk::cli {

/*
 * Exit codes: 0 success, 1 usage/parse failure, 2 invariant violation in
 * the input, 3 Jacobi violation, 4 sampling instability, 5 verification
 * mismatch.
 */
enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 1,
    exit_invariant = 2,
    exit_jacobi = 3,
    exit_unstable = 4,
    exit_mismatch = 5,
};

namespace detail {

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
}

inline json load_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("invalid JSON argument: ") + e.what());
        }
    }
    return load_json_file(arg);
}

inline std::vector<Rational> parse_vector(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    return out;
}

inline std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

inline std::vector<std::vector<int>> parse_tuples(const std::string& arg) {
    std::vector<std::vector<int>> out;
    if (arg.empty()) return out;
    std::stringstream ss(arg);
    std::string group;
    while (std::getline(ss, group, ';')) out.push_back(parse_int_list(group));
    return out;
}

inline json stability_to_json(const StabilityReport& s) {
    json out;
    out["agreement"] = s.agreement;
    out["trials"] = s.trials;
    out["height_used"] = s.height_used;
    out["stable"] = s.stable;
    return out;
}

inline json analysis_report(const PencilAnalysis& an) {
    json out;
    out["n"] = an.n;
    out["rank"] = an.rank;
    out["witness"] = rational_to_json(an.witness);
    out["core_dim"] = an.core.size();
    out["mantle_dim"] = an.mantle.size();
    out["char_poly"] = poly_to_json(an.char_poly);
    out["kronecker_indices"] = an.kronecker_indices;
    out["type"] = jk_type_to_json(an.type);
    return out;
}

struct SamplingOptions {
    unsigned long seed = 0;
    std::size_t trials = 5;
    long height = 10;
};

// verification loop shared by `construct --verify` and `check-type --verify`
inline int verify_expected(const LieAlgebra& algebra, const AlgebraicType& expected,
                           const SamplingOptions& opts, json& report) {
    const GenericInvariants generic = generic_jk_invariants(algebra, opts.seed, opts.trials, opts.height);
    json verify;
    verify["computed"] = algebraic_type_to_json(generic.algebraic);
    verify["expected"] = algebraic_type_to_json(expected);
    verify["stability"] = stability_to_json(generic.stability);
    const bool match = generic.algebraic == expected;
    verify["match"] = match;
    report["verify"] = std::move(verify);
    if (!generic.stability.stable) return exit_unstable;
    return match ? exit_ok : exit_mismatch;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordan-Kronecker invariants of skew pencils and Lie algebras"};
    app.require_subcommand(1);

    std::string file, type_arg, family, tuple_arg, tuples_arg, pairs_arg, x_arg, a_arg;
    int m = 0, centers = 1, param_k = 2, param_l = 1;
    bool verify = false;
    detail::SamplingOptions opts;

    auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opts.seed, "seed of the deterministic sampler");
        cmd->add_option("--trials", opts.trials, "number of sampled pairs");
        cmd->add_option("--height", opts.height, "coordinate height of integer samples");
    };

    auto* cmd_pencil = app.add_subcommand("pencil", "JK invariants of a constant skew pencil");
    cmd_pencil->add_option("file", file, "JSON file with matrices A and B")->required();

    auto* cmd_lie = app.add_subcommand("lie", "generic JK invariants of a Lie algebra");
    cmd_lie->add_option("file", file, "JSON file with structure constants")->required();
    add_sampling(cmd_lie);

    auto* cmd_construct = app.add_subcommand("construct", "build a realization family");
    cmd_construct->add_option("family", family, "kronecker | jordan | central | kron3 | mixed | vorushilov")
        ->required();
    cmd_construct->add_option("--m", m, "Kronecker parameter (kronecker, mixed)");
    cmd_construct->add_option("--tuple", tuple_arg, "half-size list n1,n2,... (jordan)");
    cmd_construct->add_option("--tuples", tuples_arg, "Jordan tuples as even size lists, e.g. 2,2;4");
    cmd_construct->add_option("--pairs", pairs_arg, "alpha,beta per tuple, e.g. 1,0;0,1 (kron3)");
    cmd_construct->add_option("--centers", centers, "1 or 2 (central)");
    cmd_construct->add_option("--k", param_k, "copies of the standard representation (vorushilov)");
    cmd_construct->add_option("--l", param_l, "kl is the matrix size (vorushilov)");
    cmd_construct->add_flag("--verify", verify, "recompute the invariants and compare");
    add_sampling(cmd_construct);

    auto* cmd_check = app.add_subcommand("check-type", "realizability verdict for a type multiset");
    cmd_check->add_option("type", type_arg, "JSON multiset or a file containing it")->required();
    cmd_check->add_flag("--verify", verify, "execute the plan and compare");
    add_sampling(cmd_check);

    auto* cmd_line = app.add_subcommand("semiinvariant-line", "fundamental semi-invariant on a line");
    cmd_line->add_option("file", file, "JSON file with structure constants")->required();
    cmd_line->add_option("--x", x_arg, "point x as comma-separated rationals")->required();
    cmd_line->add_option("--a", a_arg, "point a as comma-separated rationals")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("jk");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        const int code = app.exit(e, usage, usage);
        (code == 0 ? out : err) << usage.str();
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (cmd_pencil->parsed()) {
            const json input = detail::load_json_file(file);
            SkewPencil pencil = pencil_from_json(input);
            json report = detail::analysis_report(analyze_pencil(pencil));
            report["command"] = "pencil";
            report["digest"] = digest(input.dump());
            out << report.dump(2) << "\n";
            return exit_ok;
        }

        if (cmd_lie->parsed()) {
            const json input = detail::load_json_file(file);
            const LieAlgebra g = lie_from_json(input);
            if (const auto violation = g.jacobi_check()) {
                json report;
                report["command"] = "lie";
                report["jacobi_violation"] = {{"i", violation->i},
                                              {"j", violation->j},
                                              {"k", violation->k},
                                              {"basis", {g.labels()[violation->i], g.labels()[violation->j],
                                                         g.labels()[violation->k]}}};
                out << report.dump(2) << "\n";
                err << "Jacobi identity fails on (" << g.labels()[violation->i] << ", "
                    << g.labels()[violation->j] << ", " << g.labels()[violation->k] << ")\n";
                return exit_jacobi;
            }
            const GenericInvariants generic = generic_jk_invariants(g, opts.seed, opts.trials, opts.height);
            json report;
            report["command"] = "lie";
            report["digest"] = digest(input.dump());
            report["dim"] = g.dim();
            report["seed"] = opts.seed;
            report["rank"] = generic.rank;
            report["type"] = jk_type_to_json(generic.representative);
            report["algebraic"] = algebraic_type_to_json(generic.algebraic);
            report["stability"] = detail::stability_to_json(generic.stability);
            out << report.dump(2) << "\n";
            return generic.stability.stable ? exit_ok : exit_unstable;
        }

        if (cmd_construct->parsed()) {
            std::optional<ExpectedRealization> built;
            if (family == "kronecker") {
                built = kronecker_algebra(m);
            } else if (family == "jordan") {
                built = jordan_tuple_algebra(detail::parse_int_list(tuple_arg));
            } else if (family == "central") {
                built = central_jordan_algebra(detail::parse_tuples(tuples_arg), centers);
            } else if (family == "kron3") {
                std::vector<std::pair<Rational, Rational>> pairs;
                for (const auto& p : detail::parse_tuples(pairs_arg)) {
                    if (p.size() != 2) throw parse_error("--pairs entries must be alpha,beta");
                    pairs.emplace_back(Rational(p[0]), Rational(p[1]));
                }
                built = kron3_algebra(detail::parse_tuples(tuples_arg), pairs);
            } else if (family == "mixed") {
                built = mixed_algebra(m, detail::parse_tuples(tuples_arg));
            } else if (family == "vorushilov") {
                built = vorushilov_algebra(param_k, param_l);
            } else {
                err << "unknown family: " << family << "\n";
                return exit_parse;
            }
            json report;
            report["command"] = "construct";
            report["family"] = family;
            report["dim"] = built->algebra.dim();
            report["expected"] = algebraic_type_to_json(built->expected);
            report["algebra"] = lie_to_json(built->algebra);
            int code = exit_ok;
            if (verify) code = detail::verify_expected(built->algebra, built->expected, opts, report);
            out << report.dump(2) << "\n";
            return code;
        }

        if (cmd_check->parsed()) {
            const json input = detail::load_json_arg(type_arg);
            const AlgebraicType type = algebraic_type_from_json(input);
            const Verdict verdict = realizability_verdict(type);
            json report;
            report["command"] = "check-type";
            report["input"] = algebraic_type_to_json(type);
            report["status"] = verdict.status == Realizability::realizable    ? "realizable"
                               : verdict.status == Realizability::impossible ? "impossible"
                                                                              : "unknown";
            report["reason"] = verdict.reason;
            report["plan"] = plan_to_json(verdict.plan);
            int code = exit_ok;
            if (verify && verdict.status == Realizability::realizable) {
                const ExpectedRealization realized = execute_plan(verdict.plan);
                code = detail::verify_expected(realized.algebra, type, opts, report);
            }
            out << report.dump(2) << "\n";
            return code;
        }

        if (cmd_line->parsed()) {
            const json input = detail::load_json_file(file);
            const LieAlgebra g = lie_from_json(input);
            const auto x = detail::parse_vector(x_arg);
            const auto a = detail::parse_vector(a_arg);
            const LinePolynomialReport lr = fundamental_semiinvariant_on_line(g, x, a);
            json report;
            report["command"] = "semiinvariant-line";
            report["digest"] = digest(input.dump());
            report["q"] = poly_to_json(lr.q);
            report["degree"] = lr.q.degree();
            json factors = json::array();
            for (const auto& [factor, mult] : lr.factors)
                factors.push_back({{"factor", poly_to_json(factor)}, {"multiplicity", mult}});
            report["factors"] = std::move(factors);
            out << report.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invariant;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_parse;
}

}  // namespace jk::cli

#endif
