#pragma once

#include <cstdint>
#include <mutex>
#include <set>
#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

// Element of F_p for a runtime prime p < 2^63. Primality is checked once per
// modulus (cached), which removes the silent wrong-modulus corruption class
// without paying Miller-Rabin on every element.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(0), p_(p) {
        validate_modulus(p);
        v_ = v % p;
    }
    static Fp from_int(long long v, std::uint64_t p) {
        validate_modulus(p);
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p, 0);
    }

    static void validate_modulus(std::uint64_t p) {
        static std::set<std::uint64_t> seen;
        static std::mutex mu;
        {
            std::lock_guard<std::mutex> lk(mu);
            if (seen.count(p)) return;
        }
        if (p >= (1ull << 63) || !detail::is_prime_u64(p))
            throw InvalidAutomorphismError("modulus " + std::to_string(p) +
                                           " is not a prime below 2^63");
        std::lock_guard<std::mutex> lk(mu);
        seen.insert(p);
    }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    bool same_ring(const Fp& o) const { return p_ == o.p_; }
    void check(const Fp& o) const {
        if (!same_ring(o)) throw RingMismatchError("F_p moduli differ");
    }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, 0);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_, 0);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(detail::mulmod_u64(v_, o.v_, p_), p_, 0);
    }
    Fp inverse() const {
        if (v_ == 0) throw DivisionByZeroError("inverse of zero in F_p");
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_, 0);
    }
    Fp operator/(const Fp& o) const {
        check(o);
        return *this * o.inverse();
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp zero_like() const { return Fp(0, p_, 0); }
    Fp one_like() const { return Fp(1 % p_, p_, 0); }

    std::string to_string() const { return std::to_string(v_); }

private:
    Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}
    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace skewlab
