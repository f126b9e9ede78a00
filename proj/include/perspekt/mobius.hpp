#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "perspekt/continued_fraction.hpp"
#include "perspekt/quadratic_irrational.hpp"

namespace perspekt {

// Unimodular fractional-linear map x -> (a x + b) / (c x + d), ad - bc = +-1.
struct Mobius {
    long long a = 1, b = 0, c = 0, d = 1;

    Mobius() = default;
    Mobius(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (determinant() != 1 && determinant() != -1)
            throw std::invalid_argument("Mobius: determinant must be +-1");
    }

    long long determinant() const {
        return detail::narrow_checked(detail::int128(a) * d - detail::int128(b) * c,
                                      "Mobius::determinant");
    }

    static Mobius identity() { return Mobius(); }

    Mobius inverse() const {
        long long det = determinant();
        // adj/det with det = +-1
        return Mobius(d * det, -b * det, -c * det, a * det);
    }

    friend Mobius operator*(const Mobius& m, const Mobius& n) {
        using detail::int128;
        return Mobius(detail::narrow_checked(int128(m.a) * n.a + int128(m.b) * n.c, "Mobius::mul"),
                      detail::narrow_checked(int128(m.a) * n.b + int128(m.b) * n.d, "Mobius::mul"),
                      detail::narrow_checked(int128(m.c) * n.a + int128(m.d) * n.c, "Mobius::mul"),
                      detail::narrow_checked(int128(m.c) * n.b + int128(m.d) * n.d, "Mobius::mul"));
    }

    friend bool operator==(const Mobius& m, const Mobius& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

inline QuadraticIrrational mobius_apply(const Mobius& m, const QuadraticIrrational& x) {
    QuadraticIrrational den = QuadraticIrrational(m.c) * x + QuadraticIrrational(m.d);
    if (den.is_zero()) throw std::domain_error("mobius_apply: pole (cx + d = 0)");
    return (QuadraticIrrational(m.a) * x + QuadraticIrrational(m.b)) / den;
}

inline double mobius_apply(const Mobius& m, double x) {
    double den = m.c * x + m.d;
    if (den == 0.0) throw std::domain_error("mobius_apply: pole (cx + d = 0)");
    return (m.a * x + m.b) / den;
}

namespace detail {

// deterministic scan order for integer entries: 0, 1, -1, 2, -2, ...
inline long long zigzag(long long i) { return (i % 2 == 1) ? (i + 1) / 2 : -i / 2; }

}  // namespace detail

/**
 * Exhaustive witness search over integer matrices with entries in
 * [-bound, bound] and determinant +-1, in a fixed deterministic order
 * (entry values enumerated as 0, 1, -1, 2, -2, ..., tuples (a,b,c,d)
 * lexicographic in that order).  Returns the first matrix mapping x onto y.
 *
 * For exact inputs a fast floating-point prefilter discards non-candidates
 * and every candidate is confirmed in exact arithmetic, so the result is
 * exact; `tol` only governs the float overload.
 */
inline std::optional<Mobius> gl2z_brute_witness(const QuadraticIrrational& x,
                                                const QuadraticIrrational& y, long long bound,
                                                double /*tol*/ = 1e-9) {
    if (bound < 1) throw std::invalid_argument("gl2z_brute_witness: bound must be >= 1");
    const double xf = x.to_double(), yf = y.to_double();
    const double scale = std::max({1.0, std::abs(xf), std::abs(yf)});
    const long long span = 2 * bound + 1;
    for (long long ia = 0; ia < span; ++ia) {
        long long a = detail::zigzag(ia);
        for (long long ib = 0; ib < span; ++ib) {
            long long b = detail::zigzag(ib);
            for (long long ic = 0; ic < span; ++ic) {
                long long c = detail::zigzag(ic);
                for (long long id = 0; id < span; ++id) {
                    long long d = detail::zigzag(id);
                    long long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    double den = c * xf + d;
                    if (std::abs(den) < 1e-12 ||
                        std::abs((a * xf + b) / den - yf) > 1e-6 * scale)
                        continue;
                    Mobius m(a, b, c, d);
                    QuadraticIrrational exact_den =
                        QuadraticIrrational(c) * x + QuadraticIrrational(d);
                    if (exact_den.is_zero()) continue;
                    if (mobius_apply(m, x) == y) return m;
                }
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Mobius> gl2z_brute_witness(double x, double y, long long bound,
                                                double tol = 1e-9) {
    if (bound < 1) throw std::invalid_argument("gl2z_brute_witness: bound must be >= 1");
    const long long span = 2 * bound + 1;
    for (long long ia = 0; ia < span; ++ia) {
        long long a = detail::zigzag(ia);
        for (long long ib = 0; ib < span; ++ib) {
            long long b = detail::zigzag(ib);
            for (long long ic = 0; ic < span; ++ic) {
                long long c = detail::zigzag(ic);
                for (long long id = 0; id < span; ++id) {
                    long long d = detail::zigzag(id);
                    long long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    double den = c * x + d;
                    if (std::abs(den) < 1e-300) continue;
                    if (std::abs((a * x + b) / den - y) < tol) return Mobius(a, b, c, d);
                }
            }
        }
    }
    return std::nullopt;
}

/**
 * GL(2,Z)-equivalence of two quadratic irrationals, decided through the
 * common-tail criterion on their exact expansions.
 */
inline bool gl2z_equivalent(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    if (x.is_rational() || y.is_rational())
        throw std::invalid_argument("gl2z_equivalent: both inputs must be irrational");
    return common_tail(cf_quadratic_exact(x), cf_quadratic_exact(y)).match;
}

namespace detail {

// x = C(t_0) C(t_1) ... C(t_{k-1}) applied to the k-th complete quotient,
// with C(t) = [[t,1],[1,0]]; the prefix product is always unimodular.
inline Mobius cf_prefix_matrix(const ContinuedFraction& cf, std::size_t k) {
    Mobius m = Mobius::identity();
    for (std::size_t i = 0; i < k; ++i) m = m * Mobius(cf.term(i), 1, 1, 0);
    return m;
}

}  // namespace detail

/**
 * Constructs an exact witness from matching expansion tails: if the tails of
 * x and y agree from offsets i and j, the complete quotients there coincide,
 * so y = V U^{-1} x with U, V the prefix matrices up to i and j.  The result
 * is verified before being returned.
 */
inline std::optional<Mobius> gl2z_tail_witness(const QuadraticIrrational& x,
                                               const QuadraticIrrational& y) {
    if (x.is_rational() || y.is_rational())
        throw std::invalid_argument("gl2z_tail_witness: both inputs must be irrational");
    ContinuedFraction cx = cf_quadratic_exact(x);
    ContinuedFraction cy = cf_quadratic_exact(y);
    TailMatch t = common_tail(cx, cy);
    if (!t.match) return std::nullopt;
    Mobius u = detail::cf_prefix_matrix(cx, t.offset_u);
    Mobius v = detail::cf_prefix_matrix(cy, t.offset_v);
    Mobius w = v * u.inverse();
    if (mobius_apply(w, x) != y)
        throw std::logic_error("gl2z_tail_witness: constructed witness failed verification");
    return w;
}

/**
 * Witness search that escalates the brute-force bound (1, 2, 4, ..16) and,
 * failing that, falls back to the tail construction.  Whenever the inputs
 * are equivalent this terminates with a verified witness.
 */
inline std::optional<Mobius> gl2z_witness(const QuadraticIrrational& x,
                                          const QuadraticIrrational& y) {
    if (!gl2z_equivalent(x, y)) return std::nullopt;
    for (long long bound : {1, 2, 4, 8, 16}) {
        if (auto w = gl2z_brute_witness(x, y, bound)) return w;
    }
    return gl2z_tail_witness(x, y);
}

}  // namespace perspekt
