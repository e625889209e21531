#ifndef JK_RATIONAL_HPP
#define JK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "jk/errors.hpp"

namespace jk {

/*
 * Exact rational scalar. Thin value wrapper around GMP's mpq_class that
 * keeps every value canonical: gcd(num, den) = 1 and den > 0.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_() {
        mpz_class z;
        bool neg = n < 0;
        unsigned long long m = neg ? -static_cast<unsigned long long>(n) : n;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        if (neg) z = -z;
        v_ = mpq_class(z);
    }
    Rational(int n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Parses "p", "p/q" or a plain decimal integer, with optional sign.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw domain_error("Rational: empty string");
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw domain_error("Rational: zero denominator in '" + s + "'");
            q.canonicalize();
            return Rational(q, already_canonical{});
        } catch (const std::invalid_argument&) {
            throw domain_error("Rational: cannot parse '" + s + "'");
        }
    }

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_, already_canonical{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw domain_error("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw domain_error("Rational: negative power of zero");
        Rational base = e < 0 ? Rational(1) / *this : *this;
        unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
        Rational acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

}  // namespace jk

#endif
