#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

// Dense univariate polynomial over a field K. Invariant: coefficient list has
// no trailing zeros, so the zero polynomial is the empty list and deg() of a
// nonzero polynomial is coeffs.size() - 1. deg(0) is the sentinel -1.
template <typename K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }

    static Poly zero() { return Poly(); }
    static Poly constant(const K& c) { return Poly(c); }
    // c * x^k
    static Poly monomial(const K& c, int k) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(static_cast<std::size_t>(k) + 1, c.zero_like());
        p.c_[static_cast<std::size_t>(k)] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }

    const K& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const { return c_.back(); }
    K constant_term(const K& zero) const { return c_.empty() ? zero : c_.front(); }

    Poly operator-() const {
        Poly r = *this;
        for (K& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), proto_zero(o));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, c_[0].zero_like());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scale(const K& s) const {
        Poly r;
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (K& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    // Euclidean division; d must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
        if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
        if (p.deg() < d.deg()) return {Poly(), p};
        std::vector<K> rem = p.c_;
        std::vector<K> quo(static_cast<std::size_t>(p.deg() - d.deg()) + 1, d.leading().zero_like());
        K lc_inv = d.leading().inverse();
        for (int k = p.deg() - d.deg(); k >= 0; --k) {
            K coef = rem[static_cast<std::size_t>(k + d.deg())] * lc_inv;
            quo[static_cast<std::size_t>(k)] = coef;
            if (coef.is_zero()) continue;
            for (int i = 0; i <= d.deg(); ++i) {
                auto idx = static_cast<std::size_t>(k + i);
                rem[idx] = rem[idx] - coef * d.c_[static_cast<std::size_t>(i)];
            }
        }
        Poly q(std::move(quo)), r(std::move(rem));
        if (r.deg() >= d.deg()) throw Error(ErrorClass::Input, "polynomial division failed");
        return {q, r};
    }

    Poly monic() const {
        if (is_zero() || leading().is_one()) return *this;
        return scale(leading().inverse());
    }

    static Poly gcd(Poly a, Poly b) {
        // Remainders kept monic to tame coefficient growth.
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly pow(unsigned e) const {
        Poly base = *this;
        Poly r = Poly::constant(proto_one());
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Horner evaluation in any commutative ring F reachable from K through
    // `embed` (used for Moebius substitution, where F is a rational function).
    template <typename F, typename Embed>
    F eval(const F& x, Embed embed) const {
        F acc = x.zero_like();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const K& c = c_[i];
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            if (i == 0) {
                out += cs;
            } else {
                std::string xpow = (i == 1) ? var : var + "^" + std::to_string(i);
                if (cs == "1")
                    out += xpow;
                else
                    out += cs + "*" + xpow;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    K proto_zero(const Poly& o) const {
        if (!c_.empty()) return c_[0].zero_like();
        if (!o.c_.empty()) return o.c_[0].zero_like();
        return K{};
    }
    K proto_one() const { return c_.empty() ? K{}.one_like() : c_[0].one_like(); }

    std::vector<K> c_;
};

}  // namespace skewlab
