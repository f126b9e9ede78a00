#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "perspekt/quadratic_irrational.hpp"

namespace perspekt {

/**
 * Element a + b*sqrt(d) of a real quadratic field with unbounded rational
 * coefficients.  This is the workhorse behind constructions whose certified
 * tolerances sit far below double precision; unlike QuadraticIrrational it
 * carries no normalized integer representation and never overflows.
 */
struct QuadExt {
    mpq_class a, b;
    long long d = 1;

    QuadExt() = default;
    QuadExt(mpq_class a_, mpq_class b_, long long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
    explicit QuadExt(const mpq_class& rational) : a(rational), b(0), d(1) {}
    explicit QuadExt(const QuadraticIrrational& x)
        : a(mpq_class(mpz_class(x.p()), mpz_class(x.r()))),
          b(mpq_class(mpz_class(x.q()), mpz_class(x.r()))),
          d(x.d()) {
        a.canonicalize();
        b.canonicalize();
    }

    bool is_rational() const { return b == 0; }

    static long long join_d(const QuadExt& x, const QuadExt& y) {
        if (x.b == 0) return y.d;
        if (y.b == 0) return x.d;
        if (x.d != y.d) throw std::invalid_argument("QuadExt: mixed radicands");
        return x.d;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b, join_d(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b, join_d(x, y));
    }
    QuadExt operator-() const { return QuadExt(-a, -b, d); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long long d = join_d(x, y);
        return QuadExt(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
    }
    QuadExt inverse() const {
        mpq_class den = a * a - b * b * d;
        if (den == 0) throw std::domain_error("QuadExt: inverse of zero");
        return QuadExt(a / den, -b / den, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        mpq_class aa = a * a, bb = b * b * d;
        if (sa > 0) return aa > bb ? 1 : -1;
        return bb > aa ? 1 : -1;
    }

    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return (x - y).sign() == 0;
    }

    double to_double() const {
        return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d));
    }

    long long floor() const {
        long long k = static_cast<long long>(std::floor(to_double()));
        while ((*this - QuadExt(mpq_class(k))).sign() < 0) --k;
        while ((*this - QuadExt(mpq_class(k + 1))).sign() >= 0) ++k;
        return k;
    }

    QuadExt frac() const { return *this - QuadExt(mpq_class(floor())); }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }
};

}  // namespace perspekt
