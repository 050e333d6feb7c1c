#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlab/ore_fraction.hpp"
#include "test_support.hpp"

using namespace skewlab;
using testing::Rng;

namespace {

using SL = SkewLaurent<Rational>;
using RF = RatFunc<Rational>;
using OF = OreFraction<Rational>;

SkewRingPtr<Rational> ring_id() {
    return make_skew_ring<Rational>(Mobius<Rational>::identity(Rational(1)), Rational(1));
}
SkewRingPtr<Rational> ring_shift() {
    return make_skew_ring<Rational>(Mobius<Rational>::shift(Rational(1)), Rational(1));
}
SkewRingPtr<Rational> ring_inv() {
    return make_skew_ring<Rational>(Mobius<Rational>::inversion(Rational(1)), Rational(1));
}

RF x_fn() { return RatFunc<Rational>::var(Rational(1)); }
SL t(const SkewRingPtr<Rational>& r, int i = 1) { return SL::monomial(r, RF(Rational(1)), i); }
SL lone(const SkewRingPtr<Rational>& r) { return SL::one(r); }

OF frac(SL n, SL d) { return OF(std::move(n), std::move(d)); }
OF of(SL n) { return OF::from_laurent(std::move(n)); }

// Small supports; exact Ore arithmetic compounds coefficient sizes quickly,
// so random inputs stay at desk scale.
SL random_laurent(Rng& rng, const SkewRingPtr<Rational>& r, int lo, int hi, bool nonzero = false) {
    for (;;) {
        std::map<int, RF> terms;
        for (int i = lo; i <= hi; ++i) {
            if (rng.next_int(0, 2) == 0) continue;
            std::vector<Rational> cs;
            for (int j = 0; j <= 1; ++j) cs.push_back(Rational(rng.next_int(-2, 2)));
            RF f = RF(Poly<Rational>(cs));
            if (!f.is_zero()) terms.emplace(i, f);
        }
        SL p(r, std::move(terms));
        if (!nonzero || !p.is_zero()) return p;
    }
}

OF random_fraction(Rng& rng, const SkewRingPtr<Rational>& r, bool nonzero = false) {
    for (;;) {
        SL n = random_laurent(rng, r, 0, 1).shift(static_cast<int>(rng.next_int(-1, 1)));
        SL d = random_laurent(rng, r, 0, 1, true);
        OF f = frac(n, d);
        if (!nonzero || !f.is_zero()) return f;
    }
}

// Independent commutative oracle: Q(x)(t) as pairs of polynomials in t over
// Q(x), kept unnormalized; equality by cross-multiplication. Avoids the
// nested-fraction gcd entirely.
using KX = RatFunc<Rational>;

struct CFrac {
    Poly<KX> num, den;

    CFrac operator+(const CFrac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    CFrac operator-(const CFrac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    CFrac operator*(const CFrac& o) const { return {num * o.num, den * o.den}; }
    CFrac operator/(const CFrac& o) const { return {num * o.den, den * o.num}; }
    bool operator==(const CFrac& o) const { return num * o.den == o.num * den; }

    // canonical form for the bit-for-bit comparison
    RatFunc<KX> normalized() const { return RatFunc<KX>(num, den); }
};

CFrac to_commutative(const OF& f) {
    KX zero = KX(Rational(0)), one = KX(Rational(1));
    auto lift = [&](const SL& p, int offset) {
        std::vector<KX> cs;
        if (!p.is_zero()) {
            cs.assign(static_cast<std::size_t>(p.hi() - offset) + 1, zero);
            for (const auto& [i, c] : p.terms()) cs[static_cast<std::size_t>(i - offset)] = c;
        }
        return Poly<KX>(cs);
    };
    if (f.is_zero()) return {Poly<KX>(), Poly<KX>::constant(one)};
    int lo = std::min(f.num().lo(), 0);
    Poly<KX> nn = lift(f.num(), lo);
    Poly<KX> dd = lift(f.den(), 0);
    if (lo < 0) dd = dd * Poly<KX>::monomial(one, -lo);
    return {nn, dd};
}

}  // namespace

TEST_CASE("unit fractions and cancellation") {
    auto r = ring_id();
    // t^-1 * t = 1
    CHECK((of(t(r, -1)) * of(t(r))).is_one());
    // (t^2 - 1)(t - 1)^{-1} = t + 1
    CHECK(frac(t(r, 2) - lone(r), t(r) - lone(r)) == of(t(r) + lone(r)));
    // t vs t^-1
    CHECK(of(t(r)) != of(t(r, -1)));
    // x*t*t^{-1} = x
    auto x = SL::from_scalar(r, x_fn());
    CHECK(of(x) * of(t(r)) * of(t(r)).inverse() == of(x));
}

TEST_CASE("klein bottle relations: t^-1 x t = x^-1 and friends") {
    auto r = ring_inv();
    auto x = of(SL::from_scalar(r, x_fn()));
    auto xinv = of(SL::from_scalar(r, x_fn().inverse()));
    auto T = of(t(r));

    CHECK(T.inverse() * x * T == xinv);
    CHECK(T * x == xinv * T);
    CHECK(x * T == T * xinv);
}

TEST_CASE("ore_add named example: 1/(t-1) + 1/(t+1) = 2t (t^2-1)^{-1}") {
    auto r = ring_id();
    auto f1 = frac(lone(r), t(r) - lone(r));
    auto f2 = frac(lone(r), t(r) + lone(r));
    auto sum = f1 + f2;
    auto expect = frac(SL::monomial(r, RF(Rational(2)), 1), t(r, 2) - lone(r));
    CHECK(sum == expect);
}

TEST_CASE("common_denominator examples") {
    auto r = ring_id();
    auto f1 = frac(lone(r), t(r) - lone(r));
    auto f2 = frac(lone(r), t(r) + lone(r));
    auto [p1, p2, q] = common_denominator(f1, f2);
    CHECK(q == t(r, 2) - lone(r));
    CHECK(p1 == t(r) + lone(r));
    CHECK(p2 == t(r) - lone(r));
    CHECK(frac(p1, q) == f1);
    CHECK(frac(p2, q) == f2);

    // equal denominators
    auto g1 = frac(t(r), t(r) - lone(r));
    auto g2 = frac(lone(r), t(r) - lone(r));
    auto [q1, q2, qq] = common_denominator(g1, g2);
    CHECK(qq == t(r) - lone(r));
    CHECK(q1 == g1.num());
    CHECK(q2 == g2.num());

    // integral second argument re-expands exactly
    auto h2 = of(t(r) + lone(r));
    auto [h1p, h2p, hq] = common_denominator(g1, h2);
    CHECK(frac(h2p, hq) == h2);
    CHECK(frac(h1p, hq) == g1);
}

TEST_CASE("normal form: denominator monic polynomial, nonzero constant term, reduced") {
    Rng rng(21);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 40; ++i) {
            auto f = random_fraction(rng, ring);
            if (f.is_zero()) {
                CHECK(f.den() == lone(ring));
                continue;
            }
            CHECK(f.den().is_polynomial());
            CHECK(f.den().lo() == 0);
            CHECK(f.den().leading().is_one());
            auto g = gcrd(f.num().lo() == 0 ? f.num() : f.num().lshift(-f.num().lo()), f.den());
            CHECK(g.deg() == 0);
            // idempotence
            CHECK(frac(f.num(), f.den()) == f);
        }
    }
}

TEST_CASE("field axioms on random fractions, all three automorphisms") {
    Rng rng(22);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        auto zero = OF::zero(ring);
        auto one = OF::one(ring);
        for (int i = 0; i < 25; ++i) {
            auto f = random_fraction(rng, ring);
            auto g = random_fraction(rng, ring);
            auto h = random_fraction(rng, ring);
            CHECK((f + g) + h == f + (g + h));
            CHECK(f + g == g + f);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + g) * h == f * h + g * h);
            CHECK(f + zero == f);
            CHECK(f * one == f);
            CHECK(one * f == f);
            CHECK((f - f).is_zero());
            if (!f.is_zero()) {
                CHECK((f * f.inverse()).is_one());
                CHECK((f.inverse() * f).is_one());
            }
        }
    }
}

TEST_CASE("equality via subtraction agrees with structural equality") {
    Rng rng(23);
    for (auto ring : {ring_id(), ring_inv()}) {
        for (int i = 0; i < 30; ++i) {
            auto f = random_fraction(rng, ring);
            auto g = random_fraction(rng, ring);
            CHECK(((f - g).is_zero()) == (f == g));
            // the same value built through different arithmetic routes
            auto h = random_fraction(rng, ring, true);
            auto lhs = (f * h) * h.inverse();
            CHECK(lhs == f);
            CHECK((lhs - f).is_zero());
        }
    }
}

TEST_CASE("round trip: clearing the denominator recovers the numerator") {
    Rng rng(24);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 30; ++i) {
            auto f = random_fraction(rng, ring);
            auto cleared = f * of(f.den());
            CHECK(cleared == of(f.num()));
        }
    }
}

TEST_CASE("tau = id: all operations match the commutative field Q(x)(t)") {
    Rng rng(25);
    auto ring = ring_id();
    for (int i = 0; i < 60; ++i) {
        auto f = random_fraction(rng, ring);
        auto g = random_fraction(rng, ring);
        CHECK(to_commutative(f + g) == to_commutative(f) + to_commutative(g));
        CHECK(to_commutative(f - g) == to_commutative(f) - to_commutative(g));
        CHECK(to_commutative(f * g) == to_commutative(f) * to_commutative(g));
        if (!g.is_zero()) CHECK(to_commutative(f / g) == to_commutative(f) / to_commutative(g));
    }
    // canonical-form comparison on a smaller sample
    for (int i = 0; i < 10; ++i) {
        auto f = random_fraction(rng, ring);
        auto g = random_fraction(rng, ring);
        CHECK(to_commutative(f * g).normalized() ==
              (to_commutative(f) * to_commutative(g)).normalized());
        CHECK(to_commutative(f + g).normalized() ==
              (to_commutative(f) + to_commutative(g)).normalized());
    }
}

TEST_CASE("errors: zero inverses and ring mismatch") {
    auto r = ring_id();
    CHECK_THROWS_AS(OF::zero(r).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(frac(lone(r), SL::zero(r)), DivisionByZeroError);
    auto rs = ring_shift();
    CHECK_THROWS_AS(of(t(r)) + of(t(rs)), RingMismatchError);
}
