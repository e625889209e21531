#ifndef JK_LIE_ALGEBRA_HPP
#define JK_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/pencil.hpp"
#include "jk/rational.hpp"

namespace jk {

/*
 * Finite-dimensional Lie algebra as sparse structure constants over Q:
 * [e_i, e_j] = sum_k c^k_ij e_k, stored for i < j only.
 */
class LieAlgebra {
  public:
    using SparseVec = std::map<std::size_t, Rational>;

    explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {})
        : dim_(dim), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e_" + std::to_string(i));
        }
        if (labels_.size() != dim_) throw domain_error("LieAlgebra: label count mismatch");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string& label(std::size_t i) { return labels_.at(i); }

    void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw domain_error("LieAlgebra: index out of range");
        if (i == j) {
            if (!c.is_zero()) throw domain_error("LieAlgebra: [e_i, e_i] must vanish");
            return;
        }
        const bool flip = i > j;
        const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
        Rational& slot = table_[key][k];
        slot += flip ? -c : c;
        if (slot.is_zero()) {
            table_[key].erase(k);
            if (table_[key].empty()) table_.erase(key);
        }
    }

    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        if (i == j) return Rational(0);
        const bool flip = i > j;
        const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
        auto it = table_.find(key);
        if (it == table_.end()) return Rational(0);
        auto kt = it->second.find(k);
        if (kt == it->second.end()) return Rational(0);
        return flip ? -kt->second : kt->second;
    }

    // [e_i, e_j] as a sparse vector.
    SparseVec bracket_basis(std::size_t i, std::size_t j) const {
        SparseVec out;
        if (i == j) return out;
        const bool flip = i > j;
        const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
        auto it = table_.find(key);
        if (it == table_.end()) return out;
        for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
        return out;
    }

    // [u, v] for dense coefficient vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
        if (u.size() != dim_ || v.size() != dim_) throw domain_error("LieAlgebra: vector length mismatch");
        std::vector<Rational> out(dim_, Rational(0));
        for (const auto& [key, terms] : table_) {
            const auto [i, j] = key;
            const Rational coeff = u[i] * v[j] - u[j] * v[i];
            if (coeff.is_zero()) continue;
            for (const auto& [k, c] : terms) out[k] += coeff * c;
        }
        return out;
    }

    const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& table() const { return table_; }

    struct JacobiViolation {
        std::size_t i, j, k;
        std::vector<Rational> residual;
    };

    // Checks the cyclic identity on all basis triples; returns the first
    // violation if one exists.
    std::optional<JacobiViolation> jacobi_check() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                const SparseVec bij = bracket_basis(i, j);
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    std::vector<Rational> residual(dim_, Rational(0));
                    accumulate_bracket_with_basis(bij, k, residual, 1);
                    accumulate_bracket_with_basis(bracket_basis(j, k), i, residual, 1);
                    accumulate_bracket_with_basis(bracket_basis(k, i), j, residual, 1);
                    for (const auto& c : residual)
                        if (!c.is_zero()) return JacobiViolation{i, j, k, residual};
                }
            }
        return std::nullopt;
    }

    // The Poisson matrix (A_x)_ij = sum_k c^k_ij x_k at a point x of the dual.
    RMatrix poisson_matrix(const std::vector<Rational>& x) const {
        if (x.size() != dim_) throw domain_error("LieAlgebra: point has wrong dimension");
        RMatrix m(dim_, dim_);
        for (const auto& [key, terms] : table_) {
            const auto [i, j] = key;
            Rational v(0);
            for (const auto& [k, c] : terms) v += c * x[k];
            m(i, j) = v;
            m(j, i) = -v;
        }
        return m;
    }

    SkewPencil lie_pencil(const std::vector<Rational>& x, const std::vector<Rational>& a) const {
        return SkewPencil(poisson_matrix(x), poisson_matrix(a));
    }

  private:
    void accumulate_bracket_with_basis(const SparseVec& v, std::size_t basis_index,
                                       std::vector<Rational>& out, int sign) const {
        // out += sign * [v, e_basis]
        for (const auto& [m, c] : v) {
            const SparseVec w = bracket_basis(m, basis_index);
            for (const auto& [k, d] : w) out[k] += Rational(sign) * c * d;
        }
    }

    std::size_t dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> table_;
};

}  // namespace jk

#endif
