#ifndef JK_JK_TYPE_HPP
#define JK_JK_TYPE_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "jk/errors.hpp"
#include "jk/poly.hpp"

namespace jk {

/*
 * Eigenvalue data of a Jordan tuple: a monic irreducible polynomial over Q
 * (its roots are the eigenvalues sharing the tuple), or the infinity marker.
 */
class EigenKey {
  public:
    static EigenKey infinity() {
        EigenKey k;
        k.inf_ = true;
        return k;
    }
    static EigenKey of(UniPoly factor) {
        if (factor.degree() < 1) throw domain_error("EigenKey: factor must have positive degree");
        EigenKey k;
        k.factor_ = factor.monic();
        return k;
    }
    static EigenKey rational(const Rational& value) { return of(UniPoly::linear_root(value)); }

    bool is_infinity() const { return inf_; }
    const UniPoly& factor() const {
        if (inf_) throw domain_error("EigenKey: infinity has no factor");
        return factor_;
    }
    int degree() const { return inf_ ? 1 : factor_.degree(); }

    friend int compare(const EigenKey& a, const EigenKey& b) {
        if (a.inf_ != b.inf_) return a.inf_ ? 1 : -1;  // infinity sorts last
        if (a.inf_) return 0;
        return compare_poly(a.factor_, b.factor_);
    }
    friend bool operator==(const EigenKey& a, const EigenKey& b) { return compare(a, b) == 0; }
    friend bool operator!=(const EigenKey& a, const EigenKey& b) { return compare(a, b) != 0; }
    friend bool operator<(const EigenKey& a, const EigenKey& b) { return compare(a, b) < 0; }

    std::string str() const { return inf_ ? "inf" : factor_.str("x"); }

  private:
    EigenKey() = default;
    bool inf_ = false;
    UniPoly factor_;
};

// Jordan blocks sharing one eigenvalue: even sizes, descending.
struct JordanTuple {
    std::vector<int> sizes;
    EigenKey eigen;

    JordanTuple(std::vector<int> s, EigenKey e) : sizes(std::move(s)), eigen(std::move(e)) {
        if (sizes.empty()) throw domain_error("JordanTuple: empty size list");
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        for (int v : sizes)
            if (v <= 0 || v % 2 != 0) throw domain_error("JordanTuple: sizes must be positive even");
    }

    int total_size() const {
        int t = 0;
        for (int v : sizes) t += v;
        return t;
    }

    friend bool operator==(const JordanTuple& a, const JordanTuple& b) {
        return a.sizes == b.sizes && a.eigen == b.eigen;
    }
};

/*
 * Algebraic type: Kronecker sizes plus Jordan size-lists with eigenvalue
 * identities forgotten (each tuple repeated once per root of its eigenvalue
 * factor, so the multiset matches the count over the algebraic closure).
 */
struct AlgebraicType {
    std::vector<int> kronecker;              // ascending
    std::vector<std::vector<int>> tuples;    // each descending; list sorted

    AlgebraicType() = default;
    AlgebraicType(std::vector<std::vector<int>> t, std::vector<int> k)
        : kronecker(std::move(k)), tuples(std::move(t)) {
        canonicalize();
    }

    void canonicalize() {
        std::sort(kronecker.begin(), kronecker.end());
        for (int v : kronecker)
            if (v <= 0 || v % 2 == 0) throw domain_error("AlgebraicType: Kronecker sizes must be odd positive");
        for (auto& t : tuples) {
            if (t.empty()) throw domain_error("AlgebraicType: empty Jordan tuple");
            std::sort(t.begin(), t.end(), std::greater<int>());
            for (int v : t)
                if (v <= 0 || v % 2 != 0) throw domain_error("AlgebraicType: Jordan sizes must be positive even");
        }
        std::sort(tuples.begin(), tuples.end());
    }

    std::size_t dimension() const {
        std::size_t n = 0;
        for (int v : kronecker) n += v;
        for (const auto& t : tuples)
            for (int v : t) n += v;
        return n;
    }

    friend bool operator==(const AlgebraicType& a, const AlgebraicType& b) {
        return a.kronecker == b.kronecker && a.tuples == b.tuples;
    }
    friend bool operator!=(const AlgebraicType& a, const AlgebraicType& b) { return !(a == b); }
    friend bool operator<(const AlgebraicType& a, const AlgebraicType& b) {
        if (a.kronecker != b.kronecker) return a.kronecker < b.kronecker;
        return a.tuples < b.tuples;
    }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& t : tuples) {
            os << (first ? "" : ", ") << "(";
            for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
            os << ")";
            first = false;
        }
        for (int v : kronecker) {
            os << (first ? "" : ", ") << v;
            first = false;
        }
        os << "}";
        return os.str();
    }
};

// Full JK invariants of a pencil: Kronecker sizes and Jordan tuples with
// eigenvalue data.
struct JKType {
    std::vector<int> kronecker_sizes;   // ascending
    std::vector<JordanTuple> tuples;    // ordered by eigenvalue key

    JKType() = default;
    JKType(std::vector<JordanTuple> t, std::vector<int> k)
        : kronecker_sizes(std::move(k)), tuples(std::move(t)) {
        canonicalize();
    }

    void canonicalize() {
        std::sort(kronecker_sizes.begin(), kronecker_sizes.end());
        for (int v : kronecker_sizes)
            if (v <= 0 || v % 2 == 0) throw domain_error("JKType: Kronecker sizes must be odd positive");
        std::sort(tuples.begin(), tuples.end(), [](const JordanTuple& a, const JordanTuple& b) {
            if (a.eigen != b.eigen) return a.eigen < b.eigen;
            return a.sizes > b.sizes;
        });
        for (std::size_t i = 1; i < tuples.size(); ++i)
            if (tuples[i].eigen == tuples[i - 1].eigen)
                throw domain_error("JKType: repeated eigenvalue across distinct tuples");
    }

    std::size_t dimension() const {
        std::size_t n = 0;
        for (int v : kronecker_sizes) n += v;
        for (const auto& t : tuples) n += static_cast<std::size_t>(t.eigen.degree()) * t.total_size();
        return n;
    }

    AlgebraicType algebraic() const {
        AlgebraicType a;
        a.kronecker = kronecker_sizes;
        for (const auto& t : tuples)
            for (int rep = 0; rep < t.eigen.degree(); ++rep) a.tuples.push_back(t.sizes);
        a.canonicalize();
        return a;
    }

    friend bool operator==(const JKType& a, const JKType& b) {
        return a.kronecker_sizes == b.kronecker_sizes && a.tuples == b.tuples;
    }
    friend bool operator!=(const JKType& a, const JKType& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& t : tuples) {
            os << (first ? "" : ", ") << "J[" << t.eigen.str() << "](";
            for (std::size_t i = 0; i < t.sizes.size(); ++i) os << (i ? "," : "") << t.sizes[i];
            os << ")";
            first = false;
        }
        for (int v : kronecker_sizes) {
            os << (first ? "" : ", ") << v;
            first = false;
        }
        os << "}";
        return os.str();
    }
};

}  // namespace jk

#endif
