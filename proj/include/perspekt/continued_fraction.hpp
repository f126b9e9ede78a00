#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "perspekt/quadratic_irrational.hpp"
#include "perspekt/rational.hpp"

namespace perspekt {

/**
 * Regular continued fraction [a0; a1, a2, ...] split into a preperiod and a
 * (possibly empty) repeating period.  Conventions:
 *
 *  - a0 is an arbitrary integer, all later terms are >= 1;
 *  - the leading term always lives in the preperiod, so the preperiod is
 *    never empty and the period, when present, starts at index >= 1;
 *  - exact finite expansions are canonical (no trailing 1 except for the
 *    single-term expansion [a0]);
 *  - a nonempty period occurs exactly for exact quadratic irrationals.
 *
 * exact=false marks a depth-truncated expansion of a floating-point input.
 */
struct ContinuedFraction {
    std::vector<long long> preperiod;
    std::vector<long long> period;
    bool exact = false;

    bool is_periodic() const { return !period.empty(); }
    bool is_finite() const { return period.empty(); }

    // number of directly available terms; periodic expansions are infinite
    std::size_t finite_size() const { return preperiod.size(); }

    // i-th term, unrolling the period on demand
    long long term(std::size_t i) const {
        if (i < preperiod.size()) return preperiod[i];
        if (period.empty())
            throw std::out_of_range("ContinuedFraction: term index past end of finite expansion");
        return period[(i - preperiod.size()) % period.size()];
    }
};

/**
 * Floor-algorithm expansion of a real number, truncated to `depth` terms.
 * If the remainder vanishes the expansion terminated on its own and is
 * exact; a truncated expansion is marked exact=false.  Remainders below
 * 1e-12 stop the iteration early (beyond that point the quotients are
 * floating-point noise) without claiming exactness.
 */
inline ContinuedFraction cf_expand(double x, int depth) {
    if (!std::isfinite(x)) throw std::domain_error("cf_expand: input must be finite");
    if (depth < 1) throw std::invalid_argument("cf_expand: depth must be >= 1");

    ContinuedFraction cf;
    double y = x;
    for (int i = 0; i < depth; ++i) {
        double f = std::floor(y);
        if (f > 9.0e18 || f < -9.0e18)
            throw std::overflow_error("cf_expand: partial quotient exceeds 64 bits");
        cf.preperiod.push_back(static_cast<long long>(f));
        double rem = y - f;
        if (rem == 0.0) {
            cf.exact = true;
            break;
        }
        if (rem < 1e-12) break;  // noise guard: truncate, not exact
        y = 1.0 / rem;
    }
    // canonical form for exact finite expansions: [..., a, 1] -> [..., a+1]
    if (cf.exact && cf.preperiod.size() >= 2 && cf.preperiod.back() == 1) {
        cf.preperiod.pop_back();
        cf.preperiod.back() += 1;
    }
    return cf;
}

// exact expansion of a rational number (Euclid's algorithm), canonical form
inline ContinuedFraction cf_rational(const Rational& x) {
    ContinuedFraction cf;
    cf.exact = true;
    long long n = x.num(), d = x.den();
    while (true) {
        long long a = Rational(n, d).floor();
        cf.preperiod.push_back(a);
        long long rem = n - a * d;
        if (rem == 0) break;
        n = d;
        d = rem;
    }
    if (cf.preperiod.size() >= 2 && cf.preperiod.back() == 1) {
        cf.preperiod.pop_back();
        cf.preperiod.back() += 1;
    }
    return cf;
}

namespace detail {

inline int128 isqrt128(int128 v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    int128 s = static_cast<int128>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace detail

/**
 * Exact eventually-periodic expansion of a quadratic irrational via the
 * integer-only surd algorithm on states (P, Q) with x_i = (P_i + sqrt(D))/Q_i.
 * The period is detected by state repetition, which yields the least period
 * and the shortest preperiod compatible with the leading-term convention.
 */
inline ContinuedFraction cf_quadratic_exact(const QuadraticIrrational& x) {
    if (x.is_rational())
        throw std::invalid_argument(
            "cf_quadratic_exact: rational input; use cf_expand or cf_rational");

    using detail::int128;
    // bring (p + q*sqrt(d))/r into (P + sqrt(D))/Q with Q | D - P^2
    int128 P, Q, D;
    if (x.q() > 0) {
        P = x.p();
        Q = x.r();
        D = int128(x.q()) * x.q() * x.d();
    } else {
        P = -int128(x.p());
        Q = -int128(x.r());
        D = int128(x.q()) * x.q() * x.d();
    }
    if ((D - P * P) % Q != 0) {
        int128 aq = Q < 0 ? -Q : Q;
        P *= aq;
        D *= aq * aq;
        Q *= aq;
    }

    ContinuedFraction cf;
    cf.exact = true;
    int128 s = detail::isqrt128(D);

    std::map<std::pair<long long, long long>, std::size_t> seen;
    std::vector<long long> terms;
    const std::size_t kMaxIter = 1000000;
    for (std::size_t i = 0; i <= kMaxIter; ++i) {
        if (i >= 1) {
            auto key = std::make_pair(detail::narrow_checked(P, "cf_quadratic_exact state"),
                                      detail::narrow_checked(Q, "cf_quadratic_exact state"));
            auto it = seen.find(key);
            if (it != seen.end()) {
                cf.preperiod.assign(terms.begin(), terms.begin() + it->second);
                cf.period.assign(terms.begin() + it->second, terms.end());
                return cf;
            }
            seen.emplace(key, i);
        }
        int128 a;
        if (Q > 0)
            a = detail::floordiv128(P + s, Q);
        else
            a = -detail::floordiv128(P + s, -Q) - 1;
        terms.push_back(detail::narrow_checked(a, "cf_quadratic_exact term"));
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw std::logic_error("cf_quadratic_exact: period not found within iteration cap");
}

/**
 * k-th convergent p_k/q_k from the standard recurrence.  For finite exact
 * expansions an index past the last term is a range error; periodic
 * expansions unroll as far as requested.
 */
inline std::pair<long long, long long> convergent(const ContinuedFraction& cf, std::size_t k) {
    using detail::int128;
    int128 pk1 = 1, pk2 = 0;  // p_{-1}, p_{-2}
    int128 qk1 = 0, qk2 = 1;  // q_{-1}, q_{-2}
    for (std::size_t i = 0; i <= k; ++i) {
        int128 a = cf.term(i);
        int128 p = a * pk1 + pk2;
        int128 q = a * qk1 + qk2;
        pk2 = pk1;
        pk1 = p;
        qk2 = qk1;
        qk1 = q;
    }
    return {detail::narrow_checked(pk1, "convergent"), detail::narrow_checked(qk1, "convergent")};
}

namespace detail {

// least period of a word: shortest divisor-length prefix whose repetition
// reproduces the word
inline std::vector<long long> least_period(const std::vector<long long>& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i)
            if (w[i] != w[i % len]) ok = false;
        if (ok) return std::vector<long long>(w.begin(), w.begin() + len);
    }
    return w;
}

// offset s such that rotating `a` left by s gives `b`, or nullopt
inline std::optional<std::size_t> cyclic_shift(const std::vector<long long>& a,
                                               const std::vector<long long>& b) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (a[(s + i) % n] != b[i]) ok = false;
        if (ok) return s;
    }
    return std::nullopt;
}

}  // namespace detail

struct TailMatch {
    bool match = false;
    // on success, the tails of u from offset_u and of v from offset_v coincide
    std::size_t offset_u = 0;
    std::size_t offset_v = 0;
};

/**
 * Decides whether two exact eventually-periodic expansions share a tail.
 * Preperiods are irrelevant: the tails agree from some offsets if and only
 * if the least periods are cyclic rotations of each other.  On success the
 * returned offsets are a concrete witness alignment.
 */
inline TailMatch common_tail(const ContinuedFraction& u, const ContinuedFraction& v) {
    if (!u.exact || !v.exact)
        throw std::invalid_argument("common_tail: undefined for truncated expansions");
    if (!u.is_periodic() || !v.is_periodic())
        throw std::invalid_argument("common_tail: both expansions must be eventually periodic");

    std::vector<long long> a = detail::least_period(u.period);
    std::vector<long long> b = detail::least_period(v.period);
    auto s = detail::cyclic_shift(a, b);
    if (!s) return {};

    TailMatch m;
    m.match = true;
    m.offset_u = u.preperiod.size() + *s;
    m.offset_v = v.preperiod.size();
    return m;
}

}  // namespace perspekt
