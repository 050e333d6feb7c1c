#pragma once

#include <gmpxx.h>

#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

// Exact rational number. GMP keeps the canonical form we require:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, unsigned long d) : v_(n, d) {
        if (d == 0) throw DivisionByZeroError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw SyntaxError(0, "bad rational literal '" + s + "'");
        if (q.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    // Same-ring prototypes; trivial here but required by the generic code.
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    bool same_ring(const Rational&) const { return true; }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace skewlab
