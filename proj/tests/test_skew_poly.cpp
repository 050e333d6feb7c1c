#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlab/skew_laurent.hpp"
#include "test_support.hpp"

using namespace skewlab;
using testing::Rng;

namespace {

using SL = SkewLaurent<Rational>;
using RF = RatFunc<Rational>;

SkewRingPtr<Rational> ring_with(const Mobius<Rational>& tau) {
    return make_skew_ring<Rational>(tau, Rational(1));
}

SkewRingPtr<Rational> ring_id() { return ring_with(Mobius<Rational>::identity(Rational(1))); }
SkewRingPtr<Rational> ring_shift() { return ring_with(Mobius<Rational>::shift(Rational(1))); }
SkewRingPtr<Rational> ring_inv() { return ring_with(Mobius<Rational>::inversion(Rational(1))); }

RF x_fn() { return RatFunc<Rational>::var(Rational(1)); }
RF c(long n) { return RF(Rational(n)); }

SL t(const SkewRingPtr<Rational>& r, int i = 1) { return SL::monomial(r, c(1), i); }
SL scal(const SkewRingPtr<Rational>& r, RF f) { return SL::from_scalar(r, std::move(f)); }

SL random_laurent(Rng& rng, const SkewRingPtr<Rational>& r, int lo, int hi, bool nonzero = false) {
    for (;;) {
        std::map<int, RF> terms;
        for (int i = lo; i <= hi; ++i) {
            if (rng.next_int(0, 2) == 0) continue;
            RF f = testing::random_ratfunc(rng, 1, 3);
            if (!f.is_zero()) terms.emplace(i, f);
        }
        SL p(r, std::move(terms));
        if (!nonzero || !p.is_zero()) return p;
    }
}

SL random_poly(Rng& rng, const SkewRingPtr<Rational>& r, int max_deg, bool nonzero = false) {
    return random_laurent(rng, r, 0, max_deg, nonzero);
}

}  // namespace

TEST_CASE("twisted multiplication rule t*x = tau(x)*t") {
    auto rs = ring_shift();
    auto x = scal(rs, x_fn());
    auto lhs = t(rs) * x;
    // (x+1)*t
    auto rhs = SL::monomial(rs, RF(Poly<Rational>({Rational(1), Rational(1)})), 1);
    CHECK(lhs == rhs);

    // Klein bottle: t*x = x^{-1}*t
    auto ri = ring_inv();
    CHECK(t(ri) * scal(ri, x_fn()) == SL::monomial(ri, x_fn().inverse(), 1));
}

TEST_CASE("(t - x)(t + x) = t^2 + t - x^2 under tau = shift") {
    auto rs = ring_shift();
    auto x = scal(rs, x_fn());
    auto p = (t(rs) - x) * (t(rs) + x);
    auto expect = t(rs, 2) + t(rs) - x * x;
    CHECK(p == expect);

    // commutative case: (t-1)(t+1) = t^2 - 1
    auto rd = ring_id();
    auto onep = SL::one(rd);
    CHECK((t(rd) - onep) * (t(rd) + onep) == t(rd, 2) - onep);
}

TEST_CASE("degree bounds multiply: lo/hi add, no cancellation at extremes") {
    Rng rng(11);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 50; ++i) {
            auto p = random_laurent(rng, ring, -2, 2, true);
            auto q = random_laurent(rng, ring, -2, 2, true);
            auto pq = p * q;
            REQUIRE(!pq.is_zero());
            CHECK(pq.lo() == p.lo() + q.lo());
            CHECK(pq.hi() == p.hi() + q.hi());
        }
    }
}

TEST_CASE("associativity and distributivity of skew multiplication") {
    Rng rng(12);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 40; ++i) {
            auto p = random_laurent(rng, ring, -2, 2);
            auto q = random_laurent(rng, ring, -2, 2);
            auto r = random_laurent(rng, ring, -2, 2);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            CHECK((p + q) * r == p * r + q * r);
        }
    }
}

TEST_CASE("right division: named examples") {
    auto rd = ring_id();
    auto one = SL::one(rd);
    // t^2 = (t+1)(t-1) + 1
    auto [q, r] = right_divide(t(rd, 2), t(rd) - one);
    CHECK(q == t(rd) + one);
    CHECK(r == one);

    // tau = shift: t*x = (x+1)t, divided by t: q = x+1, r = 0
    auto rs = ring_shift();
    auto p = t(rs) * scal(rs, x_fn());
    auto [q2, r2] = right_divide(p, t(rs));
    CHECK(q2 == scal(rs, RF(Poly<Rational>({Rational(1), Rational(1)}))));
    CHECK(r2.is_zero());

    // tau = inv: re-multiplication check
    auto ri = ring_inv();
    auto pp = t(ri, 2) + scal(ri, x_fn()) * t(ri);
    auto dd = t(ri) + SL::one(ri);
    auto [q3, r3] = right_divide(pp, dd);
    CHECK(pp == q3 * dd + r3);
    CHECK(r3.deg() < dd.deg());
}

TEST_CASE("left division: named examples") {
    auto rd = ring_id();
    auto one = SL::one(rd);
    auto [q, r] = left_divide(t(rd, 2), t(rd) - one);
    CHECK(q == t(rd) + one);
    CHECK(r == one);

    // tau = shift: x*t = t*(x-1): q = x-1, r = 0
    auto rs = ring_shift();
    auto p = scal(rs, x_fn()) * t(rs);
    auto [q2, r2] = left_divide(p, t(rs));
    CHECK(q2 == scal(rs, RF(Poly<Rational>({Rational(-1), Rational(1)}))));
    CHECK(r2.is_zero());

    // p = d
    auto d3 = t(rs, 2) + scal(rs, x_fn());
    auto [q3, r3] = left_divide(d3, d3);
    CHECK(q3 == SL::one(rs));
    CHECK(r3.is_zero());
}

TEST_CASE("re-multiplication identities on random pairs") {
    Rng rng(13);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 60; ++i) {
            auto p = random_poly(rng, ring, 4);
            auto d = random_poly(rng, ring, 2, true);
            auto [q, r] = right_divide(p, d);
            CHECK(p == q * d + r);
            CHECK(r.deg() < d.deg());
            auto [ql, rl] = left_divide(p, d);
            CHECK(p == d * ql + rl);
            CHECK(rl.deg() < d.deg());
        }
    }
}

TEST_CASE("right_lcm: named examples and contracts") {
    auto rd = ring_id();
    auto one = SL::one(rd);

    // q1 = t, q2 = t-1: m = t^2 - t = q1(t-1) = q2*t
    auto [a, b, m] = right_lcm(t(rd), t(rd) - one);
    CHECK(m == t(rd, 2) - t(rd));
    CHECK(t(rd) * a == m);
    CHECK((t(rd) - one) * b == m);
    CHECK(a == t(rd) - one);
    CHECK(b == t(rd));

    // equal inputs: m = q1 normalized, a = b = unit
    auto q = scal(rd, c(3)) * (t(rd) + one);
    auto [a2, b2, m2] = right_lcm(q, q);
    CHECK(m2 == t(rd) + one);
    CHECK(a2 == b2);
    CHECK(q * a2 == m2);

    // unit input: m = the other input normalized
    auto [a3, b3, m3] = right_lcm(t(rd) + one, scal(rd, x_fn()));
    CHECK(m3 == t(rd) + one);
    CHECK((t(rd) + one) * a3 == m3);
    CHECK(scal(rd, x_fn()) * b3 == m3);
}

TEST_CASE("right_lcm: degree identity and divisibility on random pairs") {
    Rng rng(14);
    for (auto ring : {ring_id(), ring_shift(), ring_inv()}) {
        for (int i = 0; i < 40; ++i) {
            auto q1 = random_poly(rng, ring, 3, true);
            auto q2 = random_poly(rng, ring, 3, true);
            auto [a, b, m] = right_lcm(q1, q2);
            CHECK(q1 * a == m);
            CHECK(q2 * b == m);
            CHECK(m.leading().is_one());
            auto g = gcld(q1, q2);
            CHECK(m.deg() == q1.deg() + q2.deg() - g.deg());
            // every random common multiple is a left multiple of m
            auto w = random_poly(rng, ring, 2, true);
            auto n = m.is_zero() ? m : (w * m);
            auto [wq, wr] = right_divide(n, m);
            CHECK(wr.is_zero());
            CHECK(n.deg() >= m.deg());
        }
    }
}

TEST_CASE("commutative case: right_lcm agrees with the ordinary lcm") {
    Rng rng(15);
    auto rd = ring_id();
    for (int i = 0; i < 30; ++i) {
        auto q1 = random_poly(rng, rd, 3, true);
        auto q2 = random_poly(rng, rd, 3, true);
        auto [a, b, m] = right_lcm(q1, q2);
        auto g = gcrd(q1, q2);
        CHECK(m.deg() == q1.deg() + q2.deg() - g.deg());
    }
}

TEST_CASE("laurent_normalize") {
    auto rd = ring_id();
    auto one = SL::one(rd);

    auto [k1, p1] = laurent_normalize(t(rd, -1) + one);
    CHECK(k1 == -1);
    CHECK(p1 == one + t(rd));

    auto [k2, p2] = laurent_normalize(t(rd, 3));
    CHECK(k2 == 3);
    CHECK(p2 == one);

    auto rs = ring_shift();
    auto p = scal(rs, x_fn()) * t(rs, -2) + t(rs, -1);
    auto [k3, p3] = laurent_normalize(p);
    CHECK(k3 == -2);
    CHECK(p3 * t(rs, -2) == p);
    CHECK(p3 == scal(rs, x_fn()) + t(rs));

    auto [k4, p4] = laurent_normalize(SL::zero(rd));
    CHECK(k4 == 0);
    CHECK(p4.is_zero());
}

TEST_CASE("ring mismatch and degree cap errors") {
    auto rd = ring_id();
    auto rs = ring_shift();
    CHECK_THROWS_AS(t(rd) * t(rs), RingMismatchError);

    auto tiny = make_skew_ring<Rational>(Mobius<Rational>::identity(Rational(1)), Rational(1), 4);
    auto big = SL::one(tiny) + SL::monomial(tiny, c(1), 3);
    CHECK_THROWS_AS(big * big, DegreeOverflowError);
    CHECK_THROWS_AS(right_divide(t(rd), SL::zero(rd)), DivisionByZeroError);
}
