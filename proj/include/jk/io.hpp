#ifndef JK_IO_HPP
#define JK_IO_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "jk/checkers.hpp"
#include "jk/jk_type.hpp"
#include "jk/lie_algebra.hpp"
#include "jk/pencil.hpp"

namespace jk {

using nlohmann::json;

class parse_error : public std::invalid_argument {
  public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw parse_error("expected an integer or a \"p/q\" string, got: " + j.dump());
}

inline json rational_to_json(const Rational& r) { return json(r.str()); }

inline json poly_to_json(const UniPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

inline UniPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected a coefficient array (lowest degree first)");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return UniPoly(std::move(c));
}

inline RMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("expected a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

inline json matrix_to_json(const RMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline SkewPencil pencil_from_json(const json& j) {
    if (!j.contains("A") || !j.contains("B")) throw parse_error("pencil file must contain \"A\" and \"B\"");
    return SkewPencil(matrix_from_json(j["A"]), matrix_from_json(j["B"]));
}

// {"dim": n, "basis": [labels], "brackets": [{"i": i, "j": j,
//  "coeffs": {"k": "p/q", ...}}]}, indices 0-based, i < j.
inline LieAlgebra lie_from_json(const json& j) {
    if (!j.contains("dim")) throw parse_error("structure constants must contain \"dim\"");
    const std::size_t dim = j["dim"].get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
        if (labels.size() != dim) throw parse_error("\"basis\" length differs from \"dim\"");
    }
    LieAlgebra g(dim, std::move(labels));
    if (j.contains("brackets")) {
        for (const auto& b : j["brackets"]) {
            const std::size_t i = b.at("i").get<std::size_t>();
            const std::size_t jj = b.at("j").get<std::size_t>();
            if (i >= jj) throw parse_error("bracket entries require i < j");
            for (const auto& [key, value] : b.at("coeffs").items()) {
                const std::size_t k = static_cast<std::size_t>(std::stoul(key));
                g.add_term(i, jj, k, rational_from_json(value));
            }
        }
    }
    return g;
}

inline json lie_to_json(const LieAlgebra& g) {
    json out;
    out["dim"] = g.dim();
    out["basis"] = g.labels();
    json brackets = json::array();
    for (const auto& [key, terms] : g.table()) {
        json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        json coeffs;
        for (const auto& [k, c] : terms) coeffs[std::to_string(k)] = rational_to_json(c);
        entry["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(entry));
    }
    out["brackets"] = std::move(brackets);
    return out;
}

inline json jk_type_to_json(const JKType& t) {
    json out;
    json jordan = json::array();
    for (const auto& tuple : t.tuples) {
        json entry;
        entry["sizes"] = tuple.sizes;
        entry["eigen"] = tuple.eigen.is_infinity() ? json("inf") : poly_to_json(tuple.eigen.factor());
        jordan.push_back(std::move(entry));
    }
    out["jordan"] = std::move(jordan);
    out["kronecker"] = t.kronecker_sizes;
    return out;
}

inline json algebraic_type_to_json(const AlgebraicType& t) {
    json out;
    out["jordan"] = t.tuples;
    out["kronecker"] = t.kronecker;
    return out;
}

// {"jordan": [[2,2],[4]], "kronecker": [1,3]}
inline AlgebraicType algebraic_type_from_json(const json& j) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> kron;
    if (j.contains("jordan"))
        for (const auto& t : j["jordan"]) tuples.push_back(t.get<std::vector<int>>());
    if (j.contains("kronecker")) kron = j["kronecker"].get<std::vector<int>>();
    try {
        return AlgebraicType(std::move(tuples), std::move(kron));
    } catch (const domain_error& e) {
        throw parse_error(std::string("malformed type multiset: ") + e.what());
    }
}

inline json plan_to_json(const std::vector<PlanStep>& plan) {
    json out = json::array();
    for (const auto& step : plan) {
        json s;
        switch (step.family) {
            case PlanStep::Family::kronecker:
                s["family"] = "kronecker";
                s["m"] = step.m;
                break;
            case PlanStep::Family::jordan:
                s["family"] = "jordan";
                s["tuple"] = step.tuples.at(0);
                break;
            case PlanStep::Family::central:
                s["family"] = "central";
                s["centers"] = step.centers;
                s["tuples"] = step.tuples;
                break;
            case PlanStep::Family::kron3:
                s["family"] = "kron3";
                s["tuples"] = step.tuples;
                break;
            case PlanStep::Family::mixed:
                s["family"] = "mixed";
                s["m"] = step.m;
                s["tuples"] = step.tuples;
                break;
        }
        out.push_back(std::move(s));
    }
    return out;
}

// FNV-1a digest of a canonical serialization; identifies inputs in reports.
inline std::string digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace jk

#endif
