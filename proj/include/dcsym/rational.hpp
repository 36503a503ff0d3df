#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcsym {

struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& m) : std::runtime_error(m) {}
};

// Exact rational on 64-bit components, always reduced, denominator > 0.
// Intermediates go through __int128 and are range-checked; overflow throws
// instead of silently wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw arithmetic_error("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return from_i128(-(__int128)num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw arithmetic_error("rational: division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    // Integer exponent power, exact.
    Rational pow_int(long long e) const {
        if (e == 0) return Rational(1);
        if (num_ == 0) {
            if (e < 0) throw arithmetic_error("rational: zero to negative power");
            return Rational(0);
        }
        Rational base = *this;
        if (e < 0) { base = Rational(den_, num_); e = -e; }
        Rational acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return acc;
    }

    // Exact q-th root if one exists (q >= 1). Negative bases allowed for odd q.
    bool nth_root(long long q, Rational& out) const {
        if (q <= 0) return false;
        if (q == 1) { out = *this; return true; }
        if (num_ < 0 && q % 2 == 0) return false;
        long long rn, rd;
        if (!iroot(num_, q, rn) || !iroot(den_, q, rd)) return false;
        out = Rational(rn, rd);
        return true;
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    std::size_t hash() const {
        std::size_t h = std::hash<long long>{}(num_);
        h ^= std::hash<long long>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    long long num_, den_;

    void assign(long long n, long long d) {
        Rational r = from_i128(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw arithmetic_error("rational: 64-bit overflow");
        return static_cast<long long>(v);
    }

    // Exact integer q-th root of v (v >= 0, or v < 0 with odd q).
    static bool iroot(long long v, long long q, long long& out) {
        bool neg = v < 0;
        unsigned long long a = neg ? -(unsigned long long)v : (unsigned long long)v;
        if (a <= 1) { out = neg ? -(long long)a : (long long)a; return true; }
        long long guess = (long long)(std::pow((double)a, 1.0 / (double)q));
        for (long long c = guess - 2; c <= guess + 2; ++c) {
            if (c < 1) continue;
            __int128 p = 1;
            bool over = false;
            for (long long i = 0; i < q; ++i) {
                p *= c;
                if (p > (__int128)a) { over = true; break; }
            }
            if (!over && p == (__int128)a) { out = neg ? -c : c; return true; }
        }
        return false;
    }
};

} // namespace dcsym
