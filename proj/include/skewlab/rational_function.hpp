#pragma once

#include <string>
#include <utility>

#include "skewlab/errors.hpp"
#include "skewlab/polynomial.hpp"
#include "skewlab/rational_poly.hpp"

namespace skewlab {

// Element of the rational function field K(x), stored as num/den with
// gcd(num, den) = 1 and den monic; zero is 0/1.
template <typename K>
class RatFunc {
public:
    RatFunc() : num_(), den_(unit_den(K{})) {}
    explicit RatFunc(const K& c) : num_(Poly<K>::constant(c)), den_(unit_den(c)) {}
    explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(unit_den_from(num_)) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc var(const K& one) { return RatFunc(Poly<K>::monomial(one, 1)); }
    // x^k, k may be negative
    static RatFunc monomial(const K& c, int k) {
        if (k >= 0) return RatFunc(Poly<K>::monomial(c, k));
        return RatFunc(Poly<K>::constant(c), Poly<K>::monomial(c.one_like(), -k));
    }

    // For pairs already known to be coprime (e.g. automorphism images of a
    // normal form); skips the gcd, only rescales the denominator monic.
    static RatFunc from_coprime(Poly<K> num, Poly<K> den) {
        if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (r.num_.is_zero()) {
            r.den_ = Poly<K>::constant(r.den_.leading().one_like());
            return r;
        }
        const K& lc = r.den_.leading();
        if (!lc.is_one()) {
            K inv = lc.inverse();
            r.num_ = r.num_.scale(inv);
            r.den_ = r.den_.scale(inv);
        }
        return r;
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.deg() == 0 && num_.deg() == 0 && num_[0].is_one(); }
    bool is_polynomial() const { return den_.deg() == 0; }

    RatFunc operator-() const { return raw(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        // multiplying by a constant cannot create a common factor
        if (o.is_constant()) return scale_by(o.constant_value());
        if (is_constant()) return o.scale_by(constant_value());
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw DivisionByZeroError("rational function division by zero");
        if (o.is_constant()) return scale_by(o.constant_value().inverse());
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
    K constant_value() const {
        return num_.is_zero() ? den_.leading().zero_like() : num_.leading();
    }
    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc scale_by(const K& c) const {
        if (c.is_zero()) return zero_like();
        return raw(num_.scale(c), den_);
    }

    RatFunc zero_like() const {
        return raw(Poly<K>(), Poly<K>::constant(den_.leading().one_like()));
    }
    RatFunc one_like() const {
        K one = den_.leading().one_like();
        return raw(Poly<K>::constant(one), Poly<K>::constant(one));
    }
    bool same_ring(const RatFunc& o) const { return den_.leading().same_ring(o.den_.leading()); }

    // Degree measure used by pivot selection: max(deg num, deg den), 0 for 0.
    int complexity() const { return is_zero() ? 0 : std::max(num_.deg(), den_.deg()); }

    std::string to_string(const std::string& var = "x") const {
        if (is_polynomial()) return num_.to_string(var);
        std::string n = num_.to_string(var);
        std::string d = den_.to_string(var);
        return "(" + n + ")/(" + d + ")";
    }

private:
    static Poly<K> unit_den(const K& proto) { return Poly<K>::constant(proto.one_like()); }
    static Poly<K> unit_den_from(const Poly<K>& num) {
        return Poly<K>::constant(num.is_zero() ? K{}.one_like() : num.leading().one_like());
    }
    static RatFunc raw(Poly<K> n, Poly<K> d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(den_.leading().one_like());
            return;
        }
        if (den_.deg() == 0) {
            const K& lc = den_.leading();
            if (!lc.is_one()) {
                num_ = num_.scale(lc.inverse());
                den_ = Poly<K>::constant(lc.one_like());
            }
            return;
        }
        RatFuncReduce<K>::run(num_, den_);
    }

    Poly<K> num_;
    Poly<K> den_;
};

}  // namespace skewlab
