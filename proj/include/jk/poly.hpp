#ifndef JK_POLY_HPP
#define JK_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/rational.hpp"

namespace jk {

/*
 * Dense univariate polynomial over a field K, coefficients lowest degree
 * first. The zero polynomial is the empty coefficient list; otherwise the
 * leading coefficient is nonzero.
 */
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(const K& c) {
        if (!(c == K(0))) coeffs_.push_back(c);
    }
    Poly(std::initializer_list<K> l) : coeffs_(l) { normalize(); }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    // The monomial x.
    static Poly x() { return Poly({K(0), K(1)}); }
    // c * x^e
    static Poly monomial(const K& c, std::size_t e) {
        if (c == K(0)) return Poly();
        std::vector<K> v(e + 1, K(0));
        v[e] = c;
        return Poly(std::move(v));
    }
    // x - r
    static Poly linear_root(const K& r) { return Poly({-r, K(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == K(1); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<K>& coeffs() const { return coeffs_; }
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
    const K& leading() const {
        if (is_zero()) throw domain_error("Poly: leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == K(1); }

    K operator()(const K& s) const {
        K value(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * s + *it;
        return value;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const K& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const K& s) { a *= s; return a; }
    friend Poly operator*(const K& s, Poly a) { a *= s; return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; requires b nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw domain_error("Poly: division by zero polynomial");
        Poly rem = a;
        Poly quot;
        const int db = b.degree();
        const K inv_lead = K(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            const K factor = rem.leading() * inv_lead;
            quot += monomial(factor, shift);
            // rem -= factor * x^shift * b, with the leading term cancelled exactly
            std::vector<K> rc = rem.coeffs_;
            for (int i = 0; i <= db; ++i) rc[i + shift] -= factor * b.coeffs_[i];
            rc.pop_back();
            rem = Poly(std::move(rc));
        }
        return {quot, rem};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    // Exact division; throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw internal_error("Poly: exact division has nonzero remainder");
        return q;
    }

    bool divides(const Poly& other) const { return divmod(other, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        const K inv_lead = K(1) / leading();
        for (auto& c : r.coeffs_) c *= inv_lead;
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * K(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        Poly acc = one();
        Poly base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // p(x) -> p(-x)
    Poly negate_variable() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    // Monic gcd; gcd(0, 0) is a domain error.
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero() && b.is_zero()) throw domain_error("Poly: gcd(0, 0)");
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Unique interpolating polynomial of degree < points.size() through the
    // given (node, value) pairs; nodes must be pairwise distinct.
    static Poly interpolate(const std::vector<std::pair<K, K>>& points) {
        Poly result;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Poly basis = one();
            K denom(1);
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                basis *= linear_root(points[j].first);
                denom *= points[i].first - points[j].first;
            }
            result += basis * (points[i].second / denom);
        }
        return result;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const K& c = coeffs_[i];
            if (c == K(0)) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << c;
            } else {
                if (!(c == K(1))) os << c << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

using UniPoly = Poly<Rational>;

// Canonical comparison used wherever factor lists must be deterministic:
// degree ascending, then coefficient tuple lexicographic (lowest first).
inline int compare_poly(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
}

}  // namespace jk

#endif
