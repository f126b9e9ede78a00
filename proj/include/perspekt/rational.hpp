#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace perspekt {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow_checked(int128 v, const char* what) {
    constexpr int128 lo = std::numeric_limits<long long>::min();
    constexpr int128 hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return static_cast<long long>(v);
}

// floor(a/b) for b > 0
inline int128 floordiv128(int128 a, int128 b) {
    int128 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

// Exact rational over 64-bit integers with 128-bit intermediates.
// Always reduced, denominator positive, zero represented as 0/1.
// Overflow of a *normalized* result throws instead of wrapping.
class Rational {
    long long num_;
    long long den_;

    static Rational make(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        detail::int128 g = detail::gcd128(n, d);
        return Rational(detail::narrow_checked(n / g, "Rational"),
                        detail::narrow_checked(d / g, "Rational"), 0);
    }

    // already-normalized fast path
    Rational(long long n, long long d, int) : num_(n), den_(d) {}

  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(0), den_(1) { *this = make(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_, 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::int128;
        return make(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                    int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::int128;
        return make(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        using detail::int128;
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
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
        using detail::int128;
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    long long floor() const {
        return detail::narrow_checked(detail::floordiv128(num_, den_), "Rational::floor");
    }

    // representative in [0,1)
    Rational mod1() const { return *this - Rational(floor()); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
};

inline Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd of p/q and r/s is gcd(p*s, r*q)/(q*s)
    using detail::int128;
    int128 n = detail::gcd128(int128(a.num()) * b.den(), int128(b.num()) * a.den());
    int128 d = int128(a.den()) * b.den();
    if (n == 0) return Rational(0);
    int128 g = detail::gcd128(n, d);
    return Rational(detail::narrow_checked(n / g, "rational_gcd"),
                    detail::narrow_checked(d / g, "rational_gcd"));
}

}  // namespace perspekt
