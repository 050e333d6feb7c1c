#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>

#include "skewlab/errors.hpp"
#include "skewlab/mobius.hpp"
#include "skewlab/rational_function.hpp"

namespace skewlab {

// Ring descriptor for D[t^{\pm 1}; tau] with D = K(x) and tau a Moebius
// automorphism of D fixing K. Shared by every element of the ring.
template <typename K>
struct SkewRing {
    Mobius<K> tau;
    int degree_cap = 512;
    K one;  // prototype scalar, fixes the base ring (e.g. the F_p modulus)

    SkewRing(Mobius<K> t, const K& proto_one, int cap = 512)
        : tau(std::move(t)), degree_cap(cap), one(proto_one) {}

    bool operator==(const SkewRing& o) const { return tau == o.tau && one.same_ring(o.one); }

    RatFunc<K> tau_pow(long i, const RatFunc<K>& f) const {
        if (i == 0 || tau.is_identity() || f.is_zero() || f.complexity() == 0) return f;
        return tau.power(i).apply(f);
    }
};

template <typename K>
using SkewRingPtr = std::shared_ptr<const SkewRing<K>>;

template <typename K>
SkewRingPtr<K> make_skew_ring(Mobius<K> tau, const K& one, int cap = 512) {
    return std::make_shared<const SkewRing<K>>(std::move(tau), one, cap);
}

// Skew Laurent polynomial sum_i c_i t^i with left coefficients c_i in K(x)
// and twisted multiplication (a t^i)(b t^j) = a tau^i(b) t^{i+j}; the subring
// of elements with lo() >= 0 plays the role of the skew polynomial ring.
// Invariant: stored coefficients are nonzero.
template <typename K>
class SkewLaurent {
public:
    using Coef = RatFunc<K>;

    explicit SkewLaurent(SkewRingPtr<K> ring) : ring_(std::move(ring)) {}
    SkewLaurent(SkewRingPtr<K> ring, std::map<int, Coef> terms)
        : ring_(std::move(ring)), c_(std::move(terms)) {
        prune();
        check_cap();
    }

    static SkewLaurent zero(SkewRingPtr<K> ring) { return SkewLaurent(std::move(ring)); }
    static SkewLaurent one(SkewRingPtr<K> ring) {
        return monomial(ring, RatFunc<K>(ring->one), 0);
    }
    static SkewLaurent monomial(SkewRingPtr<K> ring, Coef c, int i) {
        SkewLaurent p(std::move(ring));
        if (!c.is_zero()) p.c_.emplace(i, std::move(c));
        return p;
    }
    static SkewLaurent from_scalar(SkewRingPtr<K> ring, Coef c) {
        return monomial(std::move(ring), std::move(c), 0);
    }

    const SkewRingPtr<K>& ring() const { return ring_; }
    const std::map<int, Coef>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
    // A unit of the Laurent ring: a single term c * t^i.
    bool is_unit() const { return c_.size() == 1; }

    int lo() const { return c_.begin()->first; }
    int hi() const { return c_.rbegin()->first; }
    // Degree of a skew polynomial; -1 for zero (sentinel).
    int deg() const { return c_.empty() ? -1 : hi(); }

    Coef coeff(int i) const {
        auto it = c_.find(i);
        return it == c_.end() ? zero_coef() : it->second;
    }
    const Coef& leading() const { return c_.rbegin()->second; }

    void check_same_ring(const SkewLaurent& o) const {
        if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
            throw RingMismatchError("skew Laurent operands from different rings");
    }

    SkewLaurent operator-() const {
        SkewLaurent r(ring_);
        for (const auto& [i, c] : c_) r.c_.emplace(i, -c);
        return r;
    }

    SkewLaurent operator+(const SkewLaurent& o) const {
        check_same_ring(o);
        SkewLaurent r(ring_);
        r.c_ = c_;
        for (const auto& [i, c] : o.c_) {
            auto it = r.c_.find(i);
            if (it == r.c_.end()) {
                r.c_.emplace(i, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
        return r;
    }

    SkewLaurent operator-(const SkewLaurent& o) const { return *this + (-o); }

    // (a t^i)(b t^j) = a tau^i(b) t^{i+j}, extended bilinearly.
    SkewLaurent operator*(const SkewLaurent& o) const {
        check_same_ring(o);
        SkewLaurent r(ring_);
        for (const auto& [i, a] : c_) {
            for (const auto& [j, b] : o.c_) {
                Coef t = a * ring_->tau_pow(i, b);
                if (t.is_zero()) continue;
                auto it = r.c_.find(i + j);
                if (it == r.c_.end()) {
                    r.c_.emplace(i + j, std::move(t));
                } else {
                    it->second = it->second + t;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        }
        r.check_cap();
        return r;
    }

    // Left scalar: c * p.
    SkewLaurent lscale(const Coef& s) const {
        SkewLaurent r(ring_);
        if (s.is_zero()) return r;
        for (const auto& [i, c] : c_) r.c_.emplace(i, s * c);
        return r;
    }

    // Right scalar: p * c = sum_i c_i tau^i(c) t^i.
    SkewLaurent rscale(const Coef& s) const {
        SkewLaurent r(ring_);
        if (s.is_zero()) return r;
        for (const auto& [i, c] : c_) r.c_.emplace(i, c * ring_->tau_pow(i, s));
        return r;
    }

    // p * t^k.
    SkewLaurent shift(int k) const {
        SkewLaurent r(ring_);
        for (const auto& [i, c] : c_) r.c_.emplace(i + k, c);
        r.check_cap();
        return r;
    }

    // t^k * p = sum tau^k(c_i) t^{i+k}.
    SkewLaurent lshift(int k) const {
        SkewLaurent r(ring_);
        for (const auto& [i, c] : c_) r.c_.emplace(i + k, ring_->tau_pow(k, c));
        r.check_cap();
        return r;
    }

    bool operator==(const SkewLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const SkewLaurent& o) const { return !(*this == o); }

    SkewLaurent zero_like() const { return SkewLaurent(ring_); }
    SkewLaurent one_like() const { return one(ring_); }

    Coef zero_coef() const { return RatFunc<K>(ring_->one).zero_like(); }
    Coef one_coef() const { return RatFunc<K>(ring_->one); }

    // Span + coefficient size; used by pivot selection.
    int complexity() const {
        if (is_zero()) return 0;
        int c = hi() - lo();
        for (const auto& [i, f] : c_) c += f.complexity();
        return c;
    }

    // Common left scalar factor of the coefficients: gcd of numerators over
    // lcm of denominators. lscale by its inverse keeps coefficients slim.
    Coef left_content() const {
        Poly<K> gn, ld = Poly<K>::constant(ring_->one);
        for (const auto& [i, c] : c_) {
            gn = Poly<K>::gcd(gn, c.num());
            Poly<K> g = Poly<K>::gcd(ld, c.den());
            ld = Poly<K>::divmod(ld * c.den(), g).first;
        }
        return Coef(gn, ld);
    }

    // Common right scalar factor: p = p' * gamma, i.e. c_i = c_i' * tau^i(gamma).
    Coef right_content() const {
        Poly<K> gn, ld = Poly<K>::constant(ring_->one);
        for (const auto& [i, c] : c_) {
            Coef g_i = ring_->tau_pow(-i, c);
            gn = Poly<K>::gcd(gn, g_i.num());
            Poly<K> g = Poly<K>::gcd(ld, g_i.den());
            ld = Poly<K>::divmod(ld * g_i.den(), g).first;
        }
        return Coef(gn, ld);
    }

    std::string to_string(const std::string& tvar = "t", const std::string& xvar = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [i, c] : c_) {
            std::string cs = c.to_string(xvar);
            bool composite = cs.find(' ') != std::string::npos;
            std::string piece;
            if (i == 0) {
                piece = composite ? "(" + cs + ")" : cs;
            } else {
                std::string tp = tvar + (i == 1 ? "" : "^" + std::to_string(i));
                if (cs == "1")
                    piece = tp;
                else if (cs == "-1")
                    piece = "-" + tp;
                else
                    piece = (composite ? "(" + cs + ")" : cs) + "*" + tp;
            }
            if (out.empty()) {
                out = piece;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

private:
    void prune() {
        for (auto it = c_.begin(); it != c_.end();)
            it = it->second.is_zero() ? c_.erase(it) : std::next(it);
    }
    void check_cap() const {
        if (!c_.empty() && hi() - lo() > ring_->degree_cap)
            throw DegreeOverflowError("skew Laurent span " + std::to_string(hi() - lo()) +
                                      " exceeds cap " + std::to_string(ring_->degree_cap));
    }

    SkewRingPtr<K> ring_;
    std::map<int, Coef> c_;
};

// --- Euclidean structure on the polynomial part D[t; tau] -------------------

namespace detail {
template <typename K>
void require_polynomial(const SkewLaurent<K>& p, const char* who) {
    if (!p.is_polynomial())
        throw Error(ErrorClass::Input, std::string(who) + ": operand has negative exponents");
}
}  // namespace detail

// p = q*d + r with deg r < deg d.
template <typename K>
std::pair<SkewLaurent<K>, SkewLaurent<K>> right_divide(const SkewLaurent<K>& p,
                                                       const SkewLaurent<K>& d) {
    p.check_same_ring(d);
    if (d.is_zero()) throw DivisionByZeroError("right_divide by zero");
    detail::require_polynomial(p, "right_divide");
    detail::require_polynomial(d, "right_divide");
    auto ring = p.ring();
    SkewLaurent<K> q = SkewLaurent<K>::zero(ring);
    SkewLaurent<K> r = p;
    int dd = d.deg();
    const auto& b = d.leading();
    while (!r.is_zero() && r.deg() >= dd) {
        int k = r.deg() - dd;
        // (c t^k)(b t^dd) = c tau^k(b) t^{deg r}  =>  c = lead(r) / tau^k(b)
        auto c = r.leading() / ring->tau_pow(k, b);
        auto mono = SkewLaurent<K>::monomial(ring, c, k);
        q = q + mono;
        r = r - mono * d;
    }
    return {q, r};
}

// p = d*q + r with deg r < deg d.
template <typename K>
std::pair<SkewLaurent<K>, SkewLaurent<K>> left_divide(const SkewLaurent<K>& p,
                                                      const SkewLaurent<K>& d) {
    p.check_same_ring(d);
    if (d.is_zero()) throw DivisionByZeroError("left_divide by zero");
    detail::require_polynomial(p, "left_divide");
    detail::require_polynomial(d, "left_divide");
    auto ring = p.ring();
    SkewLaurent<K> q = SkewLaurent<K>::zero(ring);
    SkewLaurent<K> r = p;
    int dd = d.deg();
    const auto& b = d.leading();
    while (!r.is_zero() && r.deg() >= dd) {
        int k = r.deg() - dd;
        // (b t^dd)(c t^k) = b tau^dd(c) t^{deg r}  =>  c = tau^{-dd}(b^{-1} lead(r))
        auto c = ring->tau_pow(-dd, b.inverse() * r.leading());
        auto mono = SkewLaurent<K>::monomial(ring, c, k);
        q = q + mono;
        r = r - d * mono;
    }
    return {q, r};
}

// Greatest common right divisor in D[t; tau]: R*p + R*q = R*g, returned
// monic. Remainders are replaced by left-unit associates each step, which
// keeps the generated left ideal and tames coefficient growth.
template <typename K>
SkewLaurent<K> gcrd(SkewLaurent<K> a, SkewLaurent<K> b) {
    // Pseudo-division steps (cross-multiplied leading coefficients) followed
    // by a content strip; membership in R*a + R*b is preserved by left unit
    // scalars and coefficients never pass through an inversion.
    auto ring = a.ring();
    while (!b.is_zero()) {
        if (a.deg() < b.deg()) {
            std::swap(a, b);
            continue;
        }
        int k = a.deg() - b.deg();
        auto lam = ring->tau_pow(k, b.leading());
        auto mono = SkewLaurent<K>::monomial(ring, a.leading(), k);
        a = a.lscale(lam) - mono * b;
        if (!a.is_zero()) a = a.lscale(a.left_content().inverse());
    }
    if (a.is_zero()) return a;
    if (!a.leading().is_one()) a = a.lscale(a.leading().inverse());
    return a;
}

// Greatest common left divisor in D[t; tau] via left division; made monic by
// a right scalar so left divisibility is preserved.
template <typename K>
SkewLaurent<K> gcld(SkewLaurent<K> a, SkewLaurent<K> b) {
    // Mirror of gcrd with right multipliers: a <- a*lam - b*(c t^k) keeps
    // common left divisors.
    auto ring = a.ring();
    while (!b.is_zero()) {
        if (a.deg() < b.deg()) {
            std::swap(a, b);
            continue;
        }
        int k = a.deg() - b.deg();
        auto lam = ring->tau_pow(-a.deg(), b.leading());
        auto c = ring->tau_pow(-b.deg(), a.leading());
        a = a.rscale(lam) - b * SkewLaurent<K>::monomial(ring, c, k);
        if (!a.is_zero()) a = a.rscale(a.right_content().inverse());
    }
    if (a.is_zero()) return a;
    if (!a.leading().is_one()) {
        auto lam = a.ring()->tau_pow(-a.deg(), a.leading().inverse());
        a = a.rscale(lam);
    }
    return a;
}

// Least common right multiple: m = q1*a = q2*b with deg m minimal and m
// monic. Extended Euclid with left division keeps the cofactors on the right:
// r_{k+1} = r_{k-1} - r_k * s_k preserves r = q1*u + q2*v.
template <typename K>
std::tuple<SkewLaurent<K>, SkewLaurent<K>, SkewLaurent<K>> right_lcm(const SkewLaurent<K>& q1,
                                                                     const SkewLaurent<K>& q2) {
    q1.check_same_ring(q2);
    if (q1.is_zero() || q2.is_zero()) throw DivisionByZeroError("right_lcm of zero");
    detail::require_polynomial(q1, "right_lcm");
    detail::require_polynomial(q2, "right_lcm");
    auto ring = q1.ring();

    // Extended Euclid on pseudo-division steps: rA <- rA*lam - rB*(c t^k)
    // with lam, c cross-multiplied leading coefficients, so no coefficient is
    // ever inverted. The invariant r = q1*u + q2*v survives because every
    // update multiplies on the right. A shared content strip keeps all three
    // rows slim without breaking the invariant.
    SkewLaurent<K> rA = q1, rB = q2;
    SkewLaurent<K> uA = SkewLaurent<K>::one(ring), uB = SkewLaurent<K>::zero(ring);
    SkewLaurent<K> vA = SkewLaurent<K>::zero(ring), vB = SkewLaurent<K>::one(ring);
    while (!rA.is_zero()) {
        if (rA.deg() < rB.deg()) {
            std::swap(rA, rB);
            std::swap(uA, uB);
            std::swap(vA, vB);
            continue;
        }
        int k = rA.deg() - rB.deg();
        auto lam = ring->tau_pow(-rA.deg(), rB.leading());
        auto c = ring->tau_pow(-rB.deg(), rA.leading());
        auto mono = SkewLaurent<K>::monomial(ring, c, k);
        rA = rA.rscale(lam) - rB * mono;
        uA = uA.rscale(lam) - uB * mono;
        vA = vA.rscale(lam) - vB * mono;
        if (!rA.is_zero()) {
            auto ca = rA.right_content(), cu = uA.right_content(), cv = vA.right_content();
            Poly<K> gn = Poly<K>::gcd(Poly<K>::gcd(ca.num(), cu.num()), cv.num());
            Poly<K> l1 = ca.den() * cu.den();
            l1 = Poly<K>::divmod(l1, Poly<K>::gcd(ca.den(), cu.den())).first;
            Poly<K> l2 = l1 * cv.den();
            l2 = Poly<K>::divmod(l2, Poly<K>::gcd(l1, cv.den())).first;
            auto gamma = RatFunc<K>(gn, l2);
            if (!gamma.is_one()) {
                auto gi = gamma.inverse();
                rA = rA.rscale(gi);
                uA = uA.rscale(gi);
                vA = vA.rscale(gi);
            }
        }
    }
    // 0 = q1*uA + q2*vA, so m = q1*uA = q2*(-vA).
    SkewLaurent<K> a = uA, b = -vA;
    SkewLaurent<K> m = q1 * a;
    if (m.is_zero()) throw Error(ErrorClass::Input, "right_lcm internal failure");
    // Normalize the leading coefficient to 1 by a right scalar, which keeps
    // both factorizations intact: (m s) = q1 (a s) = q2 (b s).
    auto lam = ring->tau_pow(-m.deg(), m.leading().inverse());
    m = m.rscale(lam);
    a = a.rscale(lam);
    b = b.rscale(lam);
    return {a, b, m};
}

// Least common left multiple: m = a*q1 = b*q2 with deg m minimal. Mirror of
// right_lcm with left cofactors; the invariant r = u*q1 + v*q2 survives
// left multiplication.
template <typename K>
std::tuple<SkewLaurent<K>, SkewLaurent<K>, SkewLaurent<K>> left_lcm(const SkewLaurent<K>& q1,
                                                                    const SkewLaurent<K>& q2) {
    q1.check_same_ring(q2);
    if (q1.is_zero() || q2.is_zero()) throw DivisionByZeroError("left_lcm of zero");
    detail::require_polynomial(q1, "left_lcm");
    detail::require_polynomial(q2, "left_lcm");
    auto ring = q1.ring();

    SkewLaurent<K> rA = q1, rB = q2;
    SkewLaurent<K> uA = SkewLaurent<K>::one(ring), uB = SkewLaurent<K>::zero(ring);
    SkewLaurent<K> vA = SkewLaurent<K>::zero(ring), vB = SkewLaurent<K>::one(ring);
    while (!rA.is_zero()) {
        if (rA.deg() < rB.deg()) {
            std::swap(rA, rB);
            std::swap(uA, uB);
            std::swap(vA, vB);
            continue;
        }
        int k = rA.deg() - rB.deg();
        auto lam = ring->tau_pow(k, rB.leading());
        auto mono = SkewLaurent<K>::monomial(ring, rA.leading(), k);
        rA = rA.lscale(lam) - mono * rB;
        uA = uA.lscale(lam) - mono * uB;
        vA = vA.lscale(lam) - mono * vB;
        if (!rA.is_zero()) {
            auto ca = rA.left_content(), cu = uA.left_content(), cv = vA.left_content();
            Poly<K> gn = Poly<K>::gcd(Poly<K>::gcd(ca.num(), cu.num()), cv.num());
            Poly<K> l1 = ca.den() * cu.den();
            l1 = Poly<K>::divmod(l1, Poly<K>::gcd(ca.den(), cu.den())).first;
            Poly<K> l2 = l1 * cv.den();
            l2 = Poly<K>::divmod(l2, Poly<K>::gcd(l1, cv.den())).first;
            auto gamma = RatFunc<K>(gn, l2);
            if (!gamma.is_one()) {
                auto gi = gamma.inverse();
                rA = rA.lscale(gi);
                uA = uA.lscale(gi);
                vA = vA.lscale(gi);
            }
        }
    }
    // 0 = uA*q1 + vA*q2, so m = uA*q1 = (-vA)*q2.
    SkewLaurent<K> a = uA, b = -vA;
    SkewLaurent<K> m = a * q1;
    if (m.is_zero()) throw Error(ErrorClass::Input, "left_lcm internal failure");
    if (!m.leading().is_one()) {
        auto lam = m.leading().inverse();
        m = m.lscale(lam);
        a = a.lscale(lam);
        b = b.lscale(lam);
    }
    return {a, b, m};
}

// p = poly * t^k with poly having a nonzero constant term; k = lo(p).
// Zero maps to (0, zero).
template <typename K>
std::pair<int, SkewLaurent<K>> laurent_normalize(const SkewLaurent<K>& p) {
    if (p.is_zero()) return {0, p};
    return {p.lo(), p.shift(-p.lo())};
}

}  // namespace skewlab
