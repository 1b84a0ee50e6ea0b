#ifndef PHYLOTORIC_RATIONAL_HPP
#define PHYLOTORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "phylotoric/errors.hpp"

namespace phylotoric {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
// GMP supplies the arbitrary-precision arithmetic; this wrapper pins the
// canonical-form invariant and the text format "num/den".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canonicalize(); }

    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("invalid rational literal '" + text + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    // "3", "-3/7"; integers drop the denominator.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    void canonicalize() {
        if (v_.get_den() == 0) throw DomainError("zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

} // namespace phylotoric

#endif
