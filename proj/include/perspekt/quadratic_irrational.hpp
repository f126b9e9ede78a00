#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "perspekt/rational.hpp"

namespace perspekt {

/**
 * Exact real of the form (p + q*sqrt(d)) / r with integer p, q, r and
 * square-free d.  q may be zero, in which case the value is rational and d
 * normalizes to 1.  The representation is canonical: d square-free, r > 0,
 * gcd(p, q, r) = 1, and square factors of d are folded into q.
 *
 * Arithmetic is closed for operands sharing the same d (or with a rational
 * operand).  Mixing two distinct irrational fields is rejected: the toolkit
 * never needs degree-4 extensions.
 */
class QuadraticIrrational {
    long long p_ = 0;
    long long q_ = 0;
    long long d_ = 1;
    long long r_ = 1;

    using int128 = detail::int128;

    static long long squarefree_reduce(long long d, int128& q) {
        // pull square factors of d into q
        for (long long f = 2; f * f <= d; ++f) {
            while (d % (f * f) == 0) {
                d /= f * f;
                q *= f;
            }
        }
        return d;
    }

    static QuadraticIrrational make(int128 p, int128 q, long long d, int128 r) {
        if (r == 0) throw std::domain_error("QuadraticIrrational: zero denominator");
        if (q != 0) {
            if (d <= 0) throw std::invalid_argument("QuadraticIrrational: d must be positive");
            d = squarefree_reduce(d, q);
            if (d == 1) {
                p += q;
                q = 0;
            }
        }
        if (q == 0) d = 1;
        if (r < 0) {
            p = -p;
            q = -q;
            r = -r;
        }
        int128 g = detail::gcd128(detail::gcd128(p, q), r);
        if (g == 0) g = 1;
        QuadraticIrrational x;
        x.p_ = detail::narrow_checked(p / g, "QuadraticIrrational");
        x.q_ = detail::narrow_checked(q / g, "QuadraticIrrational");
        x.r_ = detail::narrow_checked(r / g, "QuadraticIrrational");
        x.d_ = (x.q_ == 0) ? 1 : d;
        return x;
    }

    static long long join_d(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        if (a.q_ == 0) return b.d_;
        if (b.q_ == 0) return a.d_;
        if (a.d_ != b.d_)
            throw std::invalid_argument(
                "QuadraticIrrational: mixed radicands (sqrt(" + std::to_string(a.d_) +
                ") vs sqrt(" + std::to_string(b.d_) + ")) are not supported");
        return a.d_;
    }

  public:
    QuadraticIrrational() = default;
    QuadraticIrrational(long long p, long long q, long long d, long long r) {
        *this = make(p, q, d, int128(r));
    }
    QuadraticIrrational(const Rational& x) { *this = make(x.num(), 0, 1, x.den()); }
    QuadraticIrrational(long long n) : p_(n), q_(0), d_(1), r_(1) {}

    static QuadraticIrrational sqrt_of(long long d) { return QuadraticIrrational(0, 1, d, 1); }
    static QuadraticIrrational golden_ratio() { return QuadraticIrrational(1, 1, 5, 2); }

    long long p() const { return p_; }
    long long q() const { return q_; }
    long long d() const { return d_; }
    long long r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    Rational as_rational() const {
        if (!is_rational())
            throw std::domain_error("QuadraticIrrational: not a rational value");
        return Rational(p_, r_);
    }

    double to_double() const {
        long double s = q_ == 0 ? 0.0L : static_cast<long double>(q_) * sqrtl((long double)d_);
        return static_cast<double>((static_cast<long double>(p_) + s) / static_cast<long double>(r_));
    }

    // exact sign of (p + q*sqrt(d)); r > 0 so this is the sign of the value
    int sign() const {
        if (q_ == 0) return p_ > 0 ? 1 : (p_ < 0 ? -1 : 0);
        if (p_ == 0) return q_ > 0 ? 1 : -1;
        if (p_ > 0 && q_ > 0) return 1;
        if (p_ < 0 && q_ < 0) return -1;
        int128 pp = int128(p_) * p_;
        int128 qq = int128(q_) * q_ * d_;
        if (p_ > 0) return pp > qq ? 1 : -1;  // q < 0
        return qq > pp ? 1 : -1;              // p < 0, q > 0
    }

    bool is_zero() const { return p_ == 0 && q_ == 0; }

    QuadraticIrrational operator-() const {
        QuadraticIrrational x = *this;
        x.p_ = -x.p_;
        x.q_ = -x.q_;
        return x;
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& a,
                                         const QuadraticIrrational& b) {
        long long d = join_d(a, b);
        int128 p = int128(a.p_) * b.r_ + int128(b.p_) * a.r_;
        int128 q = int128(a.q_) * b.r_ + int128(b.q_) * a.r_;
        return make(p, q, d, int128(a.r_) * b.r_);
    }
    friend QuadraticIrrational operator-(const QuadraticIrrational& a,
                                         const QuadraticIrrational& b) {
        return a + (-b);
    }
    friend QuadraticIrrational operator*(const QuadraticIrrational& a,
                                         const QuadraticIrrational& b) {
        long long d = join_d(a, b);
        int128 p = int128(a.p_) * b.p_ + int128(a.q_) * b.q_ * d;
        int128 q = int128(a.p_) * b.q_ + int128(a.q_) * b.p_;
        return make(p, q, d, int128(a.r_) * b.r_);
    }

    QuadraticIrrational inverse() const {
        if (is_zero()) throw std::domain_error("QuadraticIrrational: inverse of zero");
        // 1/x = r*(p - q*sqrt(d)) / (p^2 - q^2 d)
        int128 den = int128(p_) * p_ - int128(q_) * q_ * d_;
        return make(int128(p_) * r_, -int128(q_) * r_, d_, den);
    }

    friend QuadraticIrrational operator/(const QuadraticIrrational& a,
                                         const QuadraticIrrational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
    }
    friend bool operator!=(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        return !(a == b);
    }

    // exact order comparison; requires compatible radicands
    int compare(const QuadraticIrrational& o) const { return (*this - o).sign(); }
    friend bool operator<(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        return a.compare(b) < 0;
    }

    long long floor() const {
        long long k = static_cast<long long>(std::floor(to_double()));
        // exact adjustment around the float estimate
        while ((*this - QuadraticIrrational(k)).sign() < 0) --k;
        while ((*this - QuadraticIrrational(k + 1)).sign() >= 0) ++k;
        return k;
    }

    QuadraticIrrational frac() const { return *this - QuadraticIrrational(floor()); }

    QuadraticIrrational conjugate() const {
        QuadraticIrrational x = *this;
        x.q_ = -x.q_;
        return x;
    }

    QuadraticIrrational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        std::string s = "(" + std::to_string(p_);
        if (q_ != 0)
            s += (q_ > 0 ? "+" : "-") + std::to_string(q_ < 0 ? -q_ : q_) + "*sqrt(" +
                 std::to_string(d_) + ")";
        s += ")/" + std::to_string(r_);
        return s;
    }
};

}  // namespace perspekt
