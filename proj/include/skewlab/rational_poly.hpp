#pragma once

#include <gmpxx.h>

#include <vector>

#include "skewlab/polynomial.hpp"
#include "skewlab/rational.hpp"

namespace skewlab {

namespace detail {

using IntPoly = std::vector<mpz_class>;

inline void trim_int_poly(IntPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void strip_content(IntPoly& v) {
    mpz_class content = 0;
    for (const mpz_class& z : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content > 1)
        for (mpz_class& z : v) z /= content;
}

// Clear denominators and strip content: p = scale * result with scale > 0 and
// result a primitive integer polynomial.
inline IntPoly primitive_int_poly(const Poly<Rational>& p, mpq_class* scale = nullptr) {
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntPoly v;
    v.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const Rational& c : p.coeffs()) {
        mpz_class z = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        v.push_back(std::move(z));
    }
    if (content > 1)
        for (mpz_class& z : v) z /= content;
    if (scale) {
        if (content == 0) content = 1;
        mpq_class s(content, den_lcm);
        s.canonicalize();
        *scale = s;
    }
    return v;
}

// Integer remainder sequence step: repeatedly a <- lc(b)*a - lc(a)*x^k*b
// until deg a < deg b. Content is stripped by the caller, so exact
// subresultant scaling is unnecessary.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const mpz_class& lcb = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t k = a.size() - 1 - db;
        mpz_class top = a.back();
        for (mpz_class& c : a) c *= lcb;
        for (std::size_t i = 0; i <= db; ++i) a[k + i] -= top * b[i];
        trim_int_poly(a);
    }
    return a;
}

// Primitive PRS gcd of primitive integer polynomials.
inline IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
    if (a.size() < b.size()) a.swap(b);
    while (!b.empty()) {
        if (b.size() == 1) return {mpz_class(1)};
        IntPoly r = pseudo_rem(a, b);
        strip_content(r);
        a.swap(b);
        b.swap(r);
    }
    if (!a.empty() && a.back() < 0)
        for (mpz_class& z : a) z = -z;
    return a;
}

// Exact quotient of primitive integer polynomials (Gauss: the quotient of
// primitive by a primitive divisor is integral).
inline IntPoly int_poly_exact_div(IntPoly a, const IntPoly& d) {
    if (d.size() == 1) {
        if (d[0] != 1)
            for (mpz_class& z : a) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), d[0].get_mpz_t());
        return a;
    }
    IntPoly q(a.size() - d.size() + 1, mpz_class(0));
    const mpz_class& lcd = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), a[k + d.size() - 1].get_mpz_t(), lcd.get_mpz_t());
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < d.size(); ++i) a[k + i] -= c * d[i];
    }
    return q;
}

inline Poly<Rational> rat_poly_from_int(const IntPoly& v, const mpq_class& scale) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const mpz_class& z : v) out.push_back(Rational(mpq_class(z * scale)));
    return Poly<Rational>(std::move(out));
}

}  // namespace detail

// gcd of rational polynomials through the primitive PRS over Z; returns the
// monic gcd. Orders of magnitude faster than the fraction Euclid once
// coefficients grow.
template <>
inline Poly<Rational> Poly<Rational>::gcd(Poly<Rational> a, Poly<Rational> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    detail::IntPoly g = detail::int_poly_gcd(detail::primitive_int_poly(a),
                                             detail::primitive_int_poly(b));
    return detail::rat_poly_from_int(g, mpq_class(1, g.back()));
}

// Fraction reduction hook used by RatFunc<K>::normalize. The Rational
// instance cancels and monicizes entirely over Z.
template <typename K>
struct RatFuncReduce {
    static void run(Poly<K>& num, Poly<K>& den) {
        Poly<K> g = Poly<K>::gcd(num, den);
        if (g.deg() > 0) {
            num = Poly<K>::divmod(num, g).first;
            den = Poly<K>::divmod(den, g).first;
        }
        const K lc = den.leading();
        if (!lc.is_one()) {
            K inv = lc.inverse();
            num = num.scale(inv);
            den = den.scale(inv);
        }
    }
};

template <>
struct RatFuncReduce<Rational> {
    static void run(Poly<Rational>& num, Poly<Rational>& den) {
        using namespace detail;
        mpq_class sn, sd;
        IntPoly n = primitive_int_poly(num, &sn);  // num = sn * n, sn > 0
        IntPoly d = primitive_int_poly(den, &sd);  // den = sd * d, sd > 0
        IntPoly g = int_poly_gcd(n, d);
        if (g.size() > 1) {
            n = int_poly_exact_div(std::move(n), g);
            d = int_poly_exact_div(std::move(d), g);
        }
        // num/den = (sn/sd) * n/d; divide through by lc(d) to make den monic.
        mpq_class lcd(d.back());
        mpq_class nscale = sn / (sd * lcd);
        nscale.canonicalize();
        mpq_class dscale = 1 / lcd;
        num = rat_poly_from_int(n, nscale);
        den = rat_poly_from_int(d, dscale);
    }
};

}  // namespace skewlab
