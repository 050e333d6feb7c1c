#pragma once

#include <string>

#include "skewlab/errors.hpp"
#include "skewlab/rational_function.hpp"

namespace skewlab {

// Automorphism of K(x) fixing K, acting by x |-> (a*x + b)/(c*x + d) with
// a*d - b*c != 0. Every such field automorphism is of this form, and the
// group-induced twists needed here (identity, x |-> 1/x, x |-> x + 1) all are.
//
// Composition convention, pinned by compose(): the map of compose(s, r) is
// m_s o m_r, i.e. matrix product M_s * M_r; powers are unambiguous.
template <typename K>
class Mobius {
public:
    Mobius() : a_(K{}.one_like()), b_(K{}.zero_like()), c_(K{}.zero_like()), d_(K{}.one_like()) {}
    Mobius(K a, K b, K c, K d) : a_(a), b_(b), c_(c), d_(d) {
        if ((a_ * d_ - b_ * c_).is_zero())
            throw InvalidAutomorphismError("mobius(a,b,c,d) requires a*d - b*c != 0");
        canonicalize();
    }

    static Mobius identity(const K& one) { return Mobius(one, one.zero_like(), one.zero_like(), one); }
    // x |-> 1/x
    static Mobius inversion(const K& one) { return Mobius(one.zero_like(), one, one, one.zero_like()); }
    // x |-> x + 1
    static Mobius shift(const K& one) { return Mobius(one, one, one.zero_like(), one); }

    const K& a() const { return a_; }
    const K& b() const { return b_; }
    const K& c() const { return c_; }
    const K& d() const { return d_; }

    bool is_identity() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    bool operator==(const Mobius& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Mobius& o) const { return !(*this == o); }

    // f((a*x+b)/(c*x+d)), fully normalized. Substitution is done on the
    // homogenized numerator and denominator so only polynomial products and
    // one final normalization are needed. Affine maps and pure inversions
    // (the hot cases) take dedicated paths.
    RatFunc<K> apply(const RatFunc<K>& f) const {
        if (is_identity() || f.is_zero() || (f.num().is_constant() && f.den().is_constant()))
            return f;
        if (c_.is_zero()) {
            // x -> (a/d) x + (b/d): the image of a reduced fraction stays
            // reduced, no gcd needed
            K s = a_ / d_, t = b_ / d_;
            return RatFunc<K>::from_coprime(affine_sub(f.num(), s, t), affine_sub(f.den(), s, t));
        }
        if (a_.is_zero() && d_.is_zero()) {
            // x -> (b/c)/x: reverse coefficients with beta powers; reversed
            // parts have nonzero constant terms, so the pair stays reduced
            K beta = b_ / c_;
            int L = f.num().deg();
            int M = f.den().deg();
            Poly<K> top = reverse_scaled(f.num(), beta);
            Poly<K> bot = reverse_scaled(f.den(), beta);
            if (M > L)
                top = top * Poly<K>::monomial(beta.one_like(), M - L);
            else if (L > M)
                bot = bot * Poly<K>::monomial(beta.one_like(), L - M);
            return RatFunc<K>::from_coprime(top, bot);
        }
        Poly<K> n({b_, a_});
        Poly<K> d({d_, c_});
        int L = f.num().deg();
        int M = f.den().deg();
        int D = std::max(L, M);
        Poly<K> top = substitute_homogeneous(f.num(), n, d, D);
        Poly<K> bot = substitute_homogeneous(f.den(), n, d, D);
        return RatFunc<K>(top, bot);
    }

    Mobius compose(const Mobius& o) const {
        return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                      c_ * o.b_ + d_ * o.d_);
    }

    Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }

    Mobius power(long e) const {
        if (e < 0) return inverse().power(-e);
        Mobius base = *this;
        Mobius r = identity(a_.one_like());
        while (e) {
            if (e & 1) r = r.compose(base);
            base = base.compose(base);
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_identity()) return "id";
        return "mobius(" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() + "," +
               d_.to_string() + ")";
    }

private:
    // Sum_i p_i * N^i * D^(deg_total - i) with shared power tables.
    static Poly<K> substitute_homogeneous(const Poly<K>& p, const Poly<K>& n, const Poly<K>& d,
                                          int deg_total) {
        if (p.is_zero()) return p;
        std::vector<Poly<K>> npow(static_cast<std::size_t>(deg_total) + 1);
        std::vector<Poly<K>> dpow(static_cast<std::size_t>(deg_total) + 1);
        npow[0] = Poly<K>::constant(n.leading().one_like());
        dpow[0] = npow[0];
        for (int i = 1; i <= deg_total; ++i) {
            npow[i] = npow[i - 1] * n;
            dpow[i] = dpow[i - 1] * d;
        }
        Poly<K> acc;
        for (int i = 0; i <= p.deg(); ++i) {
            const K& c = p[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            acc = acc + (npow[i] * dpow[deg_total - i]).scale(c);
        }
        return acc;
    }

    // p(s*x + t) by Horner.
    static Poly<K> affine_sub(const Poly<K>& p, const K& s, const K& t) {
        if (p.is_zero()) return p;
        Poly<K> lin({t, s});
        Poly<K> acc;
        for (int i = p.deg(); i >= 0; --i)
            acc = acc * lin + Poly<K>::constant(p[static_cast<std::size_t>(i)]);
        return acc;
    }

    // x^deg(p) * p(beta/x) = sum_i p_i beta^i x^(deg p - i).
    static Poly<K> reverse_scaled(const Poly<K>& p, const K& beta) {
        if (p.is_zero()) return p;
        int L = p.deg();
        std::vector<K> out(static_cast<std::size_t>(L) + 1, beta.zero_like());
        K bp = beta.one_like();
        for (int i = 0; i <= L; ++i) {
            out[static_cast<std::size_t>(L - i)] = p[static_cast<std::size_t>(i)] * bp;
            if (i < L) bp = bp * beta;
        }
        return Poly<K>(std::move(out));
    }

    // Scale so the first nonzero of (a, b, c, d) is 1; makes == structural.
    void canonicalize() {
        const K* lead = nullptr;
        for (const K* x : {&a_, &b_, &c_, &d_})
            if (!x->is_zero()) {
                lead = x;
                break;
            }
        K inv = lead->inverse();
        a_ = a_ * inv;
        b_ = b_ * inv;
        c_ = c_ * inv;
        d_ = d_ * inv;
    }

    K a_, b_, c_, d_;
};

}  // namespace skewlab
