#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "skewlab/errors.hpp"
#include "skewlab/skew_laurent.hpp"

namespace skewlab {

// Element of the Ore division ring of fractions of D[t^{\pm 1}; tau], stored
// as a right fraction num * den^{-1}. Normal form: den is a monic polynomial
// with nonzero constant term, num is any Laurent polynomial, and num, den
// have no common right divisor of positive degree. Zero is 0/1. This
// representative is unique, which makes equality structural.
template <typename K>
class OreFraction {
public:
    using Laurent = SkewLaurent<K>;

    explicit OreFraction(SkewRingPtr<K> ring)
        : num_(Laurent::zero(ring)), den_(Laurent::one(ring)) {}
    OreFraction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        num_.check_same_ring(den_);
        normalize();
    }

    static OreFraction zero(SkewRingPtr<K> ring) { return OreFraction(std::move(ring)); }
    static OreFraction one(SkewRingPtr<K> ring) {
        OreFraction f(ring);
        f.num_ = Laurent::one(ring);
        return f;
    }
    // Embedding of the skew Laurent ring: p |-> p/1.
    static OreFraction from_laurent(Laurent p) {
        Laurent one = Laurent::one(p.ring());
        return OreFraction(std::move(p), std::move(one));
    }
    static OreFraction from_coef(SkewRingPtr<K> ring, RatFunc<K> c) {
        return from_laurent(Laurent::from_scalar(std::move(ring), std::move(c)));
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    const SkewRingPtr<K>& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_is_one() && num_ == Laurent::one(num_.ring()); }
    bool is_integral() const { return den_is_one(); }

    OreFraction operator-() const { return raw(-num_, den_); }

    OreFraction operator+(const OreFraction& o) const {
        num_.check_same_ring(o.num_);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return OreFraction(num_ + o.num_, den_);
        auto [a, b, m] = right_lcm(den_, o.den_);
        return OreFraction(num_ * a + o.num_ * b, m);
    }

    OreFraction operator-(const OreFraction& o) const { return *this + (-o); }

    // num1 den1^{-1} num2 den2^{-1}: commute den1^{-1} past num2 with the Ore
    // condition den1 * a = n2 * b (n2 the polynomial part of num2), giving
    // den1^{-1} num2 = a (t^{-j} b)^{-1}.
    OreFraction operator*(const OreFraction& o) const {
        num_.check_same_ring(o.num_);
        if (is_zero() || o.is_zero()) return zero(num_.ring());
        if (den_is_one()) return OreFraction(num_ * o.num_, o.den_);
        auto [j, n2] = laurent_normalize(o.num_);
        auto [a, b, m] = right_lcm(den_, n2);
        return OreFraction(num_ * a, o.den_ * b.lshift(-j));
    }

    OreFraction inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero fraction");
        return OreFraction(den_, num_);
    }

    OreFraction operator/(const OreFraction& o) const { return *this * o.inverse(); }

    bool operator==(const OreFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const OreFraction& o) const { return !(*this == o); }

    OreFraction zero_like() const { return zero(num_.ring()); }
    OreFraction one_like() const { return one(num_.ring()); }
    bool same_ring(const OreFraction& o) const {
        return num_.ring() == o.num_.ring() || *num_.ring() == *o.num_.ring();
    }

    // Pivot-selection measure: total t-degree of num and den.
    int degree_measure() const {
        if (is_zero()) return 0;
        return (num_.hi() - num_.lo()) + den_.deg();
    }
    int complexity() const { return num_.complexity() + den_.complexity(); }

    std::string to_string(const std::string& tvar = "t", const std::string& xvar = "x") const {
        if (den_is_one()) return num_.to_string(tvar, xvar);
        return "(" + num_.to_string(tvar, xvar) + ")/(" + den_.to_string(tvar, xvar) + ")";
    }

private:
    static OreFraction raw(Laurent n, Laurent d) {
        OreFraction f(n.ring());
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    bool den_is_one() const { return den_ == Laurent::one(num_.ring()); }

    void normalize() {
        auto ring = num_.ring();
        if (den_.is_zero()) throw DivisionByZeroError("fraction with zero denominator");
        if (num_.is_zero()) {
            den_ = Laurent::one(ring);
            return;
        }
        // absorb the unit t^k of the denominator into the numerator
        auto [k, dpoly] = laurent_normalize(den_);
        if (k != 0) num_ = num_.shift(-k);
        den_ = std::move(dpoly);
        // cancel the greatest common right divisor
        if (den_.deg() > 0) {
            int lo = num_.lo();
            Laurent npoly = lo == 0 ? num_ : num_.lshift(-lo);
            Laurent g = gcrd(npoly, den_);
            if (g.deg() > 0) {
                auto [nq, nr] = right_divide(npoly, g);
                auto [dq, dr] = right_divide(den_, g);
                if (!nr.is_zero() || !dr.is_zero())
                    throw Error(ErrorClass::Input, "gcrd does not divide exactly");
                num_ = lo == 0 ? nq : nq.lshift(lo);
                den_ = dq;
            }
        }
        // make den monic with a right unit shared by num and den
        if (!den_.leading().is_one()) {
            auto lam = ring->tau_pow(-den_.deg(), den_.leading().inverse());
            num_ = num_.rscale(lam);
            den_ = den_.rscale(lam);
        }
    }

    Laurent num_;
    Laurent den_;
};

// f1 = p1 * q^{-1} and f2 = p2 * q^{-1} over the least common denominator
// q = right_lcm(den(f1), den(f2)).
template <typename K>
std::tuple<SkewLaurent<K>, SkewLaurent<K>, SkewLaurent<K>> common_denominator(
    const OreFraction<K>& f1, const OreFraction<K>& f2) {
    f1.num().check_same_ring(f2.num());
    if (f1.den() == f2.den()) return {f1.num(), f2.num(), f1.den()};
    auto [a, b, m] = right_lcm(f1.den(), f2.den());
    return {f1.num() * a, f2.num() * b, m};
}

// Decidable equality in the localization: f1 == f2 iff f1 - f2 normalizes to
// 0/1. Normal forms are unique, so the structural check is equivalent; both
// are exercised in the test suite.
template <typename K>
bool ore_equals(const OreFraction<K>& f1, const OreFraction<K>& f2) {
    f1.num().check_same_ring(f2.num());
    return f1 == f2;
}

}  // namespace skewlab
