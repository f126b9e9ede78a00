#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "perspekt/rational.hpp"

namespace perspekt {

// Square integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<long long> e;

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {
        if (n_ < 1) throw std::invalid_argument("IntMatrix: dimension must be >= 1");
    }
    IntMatrix(int n_, std::vector<long long> entries) : n(n_), e(std::move(entries)) {
        if (n_ < 1) throw std::invalid_argument("IntMatrix: dimension must be >= 1");
        if (e.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("IntMatrix: entry count does not match dimension");
    }

    long long& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix make2(long long a, long long b, long long c, long long d) {
        return IntMatrix(2, {a, b, c, d});
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n != b.n) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(a.n);
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j) {
                detail::int128 s = 0;
                for (int k = 0; k < a.n; ++k)
                    s += detail::int128(a.at(i, k)) * b.at(k, j);
                r.at(i, j) = detail::narrow_checked(s, "IntMatrix::mul");
            }
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n == b.n && a.e == b.e;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> r(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += static_cast<double>(at(i, j)) * v[j];
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += Rational(at(i, j)) * v[j];
        return r;
    }
};

// Exact determinant by Bareiss fraction-free elimination.
inline long long det(const IntMatrix& m) {
    using detail::int128;
    const int n = m.n;
    if (n == 1) return m.e[0];
    if (n == 2)
        return detail::narrow_checked(int128(m.at(0, 0)) * m.at(1, 1) -
                                          int128(m.at(0, 1)) * m.at(1, 0),
                                      "det");
    std::vector<int128> a(m.e.begin(), m.e.end());
    auto at = [&](int i, int j) -> int128& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return detail::narrow_checked(sign * at(n - 1, n - 1), "det");
}

struct RationalMatrix {
    int n = 0;
    std::vector<Rational> e;

    RationalMatrix() = default;
    explicit RationalMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_) {}

    Rational& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> r(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += at(i, j).to_double() * v[j];
        return r;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        RationalMatrix r(a.n);
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                for (int k = 0; k < a.n; ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
        return r;
    }
};

// Exact rational inverse via Gauss-Jordan elimination.
inline RationalMatrix inverse_rational(const IntMatrix& m) {
    const int n = m.n;
    RationalMatrix a(n), inv(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = Rational(m.at(i, j));
        inv.at(i, i) = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("inverse_rational: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Integer adjugate: adj(m) = det(m) * m^{-1}.
inline IntMatrix adjugate(const IntMatrix& m) {
    long long dm = det(m);
    if (dm == 0) throw std::domain_error("adjugate: singular matrix");
    RationalMatrix inv = inverse_rational(m);
    IntMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            Rational v = inv.at(i, j) * Rational(dm);
            if (!v.is_integer()) throw std::logic_error("adjugate: non-integer entry");
            r.at(i, j) = v.num();
        }
    return r;
}

}  // namespace perspekt
