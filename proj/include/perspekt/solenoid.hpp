#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "perspekt/errors.hpp"
#include "perspekt/int_matrix.hpp"
#include "perspekt/rational.hpp"

namespace perspekt {

/**
 * Finite-depth presentation of an inverse limit of n-tori along integer
 * bonding matrices with nonzero determinant.  The matrix sequence is given
 * explicitly or as a repeating pattern; all computation happens at the
 * stated truncation depth, and stages are indexed 1..depth with bonding
 * matrix j connecting stage j+1 down to stage j.
 */
struct SolenoidSpec {
    int n = 2;
    std::vector<IntMatrix> matrices;
    bool repeat = true;
    int depth = 1;

    SolenoidSpec() = default;
    SolenoidSpec(int n_, std::vector<IntMatrix> ms, bool repeat_, int depth_)
        : n(n_), matrices(std::move(ms)), repeat(repeat_), depth(depth_) {
        if (n < 2) throw std::invalid_argument("SolenoidSpec: dimension must be >= 2");
        if (depth < 1) throw std::invalid_argument("SolenoidSpec: depth must be >= 1");
        if (depth > 1 && matrices.empty())
            throw std::invalid_argument("SolenoidSpec: no bonding matrices supplied");
        if (!repeat && static_cast<int>(matrices.size()) < depth - 1)
            throw std::invalid_argument(
                "SolenoidSpec: need depth-1 matrices when the pattern does not repeat");
        for (const auto& m : matrices) {
            if (m.n != n) throw std::invalid_argument("SolenoidSpec: matrix dimension mismatch");
            if (det(m) == 0)
                throw std::invalid_argument("SolenoidSpec: bonding matrices must have det != 0");
        }
    }

    static SolenoidSpec torus(int n_ = 2, int depth_ = 1) {
        return SolenoidSpec(n_, {IntMatrix::identity(n_)}, true, depth_);
    }

    // bonding matrix M_j for 1 <= j <= depth-1
    const IntMatrix& bonding(int j) const {
        return matrices[static_cast<std::size_t>(j - 1) % matrices.size()];
    }
};

/**
 * Point of the depth-k presentation: one torus coordinate vector per stage,
 * consistent along the bonding maps.  The scalar is Rational in exact mode
 * and double in float mode; the two modes are distinct types and never mix.
 */
template <class S>
struct SolenoidPoint {
    std::vector<std::vector<S>> stages;

    int depth() const { return static_cast<int>(stages.size()); }
    int dim() const { return stages.empty() ? 0 : static_cast<int>(stages.front().size()); }
};

using ExactPoint = SolenoidPoint<Rational>;
using FloatPoint = SolenoidPoint<double>;

namespace detail {

inline Rational mod1(const Rational& x) { return x.mod1(); }
inline double mod1(double x) {
    double f = x - std::floor(x);
    return f == 1.0 ? 0.0 : f;
}

// circle distance of a residue in [0,1)
inline double circle_dist(double f) { return std::min(f, 1.0 - f); }

template <class S>
std::vector<S> mod1_vec(std::vector<S> v) {
    for (auto& x : v) x = mod1(x);
    return v;
}

}  // namespace detail

/**
 * The covering projection applied to s in R^n: stage 1 reduces s itself and
 * stage j+1 reduces M_j^{-1} ... M_1^{-1} s, so bonding consistency holds by
 * construction.
 */
template <class S>
SolenoidPoint<S> covering_point(const SolenoidSpec& spec, const std::vector<S>& s) {
    if (static_cast<int>(s.size()) != spec.n)
        throw std::invalid_argument("covering_point: vector dimension mismatch");
    SolenoidPoint<S> p;
    p.stages.reserve(spec.depth);
    std::vector<S> w = s;
    p.stages.push_back(detail::mod1_vec(w));
    for (int j = 1; j < spec.depth; ++j) {
        RationalMatrix inv = inverse_rational(spec.bonding(j));
        w = inv.apply(w);
        p.stages.push_back(detail::mod1_vec(w));
    }
    return p;
}

// identity element: every stage zero
template <class S>
SolenoidPoint<S> identity_point(const SolenoidSpec& spec) {
    SolenoidPoint<S> p;
    p.stages.assign(spec.depth, std::vector<S>(spec.n, S(0)));
    return p;
}

template <class S>
SolenoidPoint<S> add_points(const SolenoidPoint<S>& a, const SolenoidPoint<S>& b) {
    if (a.depth() != b.depth() || a.dim() != b.dim())
        throw std::invalid_argument("add_points: points belong to different presentations");
    SolenoidPoint<S> r;
    r.stages.resize(a.stages.size());
    for (std::size_t j = 0; j < a.stages.size(); ++j) {
        r.stages[j].resize(a.stages[j].size());
        for (std::size_t i = 0; i < a.stages[j].size(); ++i)
            r.stages[j][i] = detail::mod1(a.stages[j][i] + b.stages[j][i]);
    }
    return r;
}

template <class S>
SolenoidPoint<S> negate_point(const SolenoidPoint<S>& a) {
    SolenoidPoint<S> r = a;
    for (auto& st : r.stages)
        for (auto& x : st) x = detail::mod1(-x);
    return r;
}

struct BondingReport {
    bool consistent = false;
    double max_defect = 0.0;
};

/**
 * Checks f_j(x_{j+1}) = x_j at every stage.  Exact points must have defect
 * exactly zero; float points report the largest torus distance found.
 */
inline BondingReport validate_point(const SolenoidSpec& spec, const ExactPoint& p) {
    BondingReport rep;
    rep.consistent = true;
    for (int j = 1; j < p.depth(); ++j) {
        auto mapped = spec.bonding(j).apply(p.stages[j]);
        for (int i = 0; i < spec.n; ++i) {
            Rational diff = (mapped[i] - p.stages[j - 1][i]).mod1();
            if (!diff.is_zero()) {
                rep.consistent = false;
                rep.max_defect =
                    std::max(rep.max_defect, detail::circle_dist(diff.to_double()));
            }
        }
    }
    return rep;
}

inline BondingReport validate_point(const SolenoidSpec& spec, const FloatPoint& p,
                                    double tol = 1e-9) {
    BondingReport rep;
    for (int j = 1; j < p.depth(); ++j) {
        auto mapped = spec.bonding(j).apply(p.stages[j]);
        for (int i = 0; i < spec.n; ++i) {
            double diff = detail::mod1(mapped[i] - p.stages[j - 1][i]);
            rep.max_defect = std::max(rep.max_defect, detail::circle_dist(diff));
        }
    }
    rep.consistent = rep.max_defect <= tol;
    return rep;
}

namespace detail {

inline bool lex_less(const ExactPoint& a, const ExactPoint& b) {
    for (std::size_t j = 0; j < a.stages.size(); ++j)
        for (std::size_t i = 0; i < a.stages[j].size(); ++i) {
            if (a.stages[j][i] < b.stages[j][i]) return true;
            if (b.stages[j][i] < a.stages[j][i]) return false;
        }
    return false;
}

inline bool lex_equal(const ExactPoint& a, const ExactPoint& b) {
    for (std::size_t j = 0; j < a.stages.size(); ++j)
        for (std::size_t i = 0; i < a.stages[j].size(); ++i)
            if (!(a.stages[j][i] == b.stages[j][i])) return false;
    return true;
}

}  // namespace detail

/**
 * All depth-k elements of the fiber over the identity of the first stage.
 * Stage j+1 preimages of a stage-j solution x are M_j^{-1}(x + k) mod 1 with
 * k ranging over integer offsets; offsets in the box [0, |det|)^n cover all
 * residue classes because det * Z^n lies inside M * Z^n.  The element count
 * is the product of the |det M_j|, which is checked against `cap` up front.
 */
inline std::vector<ExactPoint> fiber_enumerate(const SolenoidSpec& spec,
                                               long long cap = 1000000) {
    detail::int128 expected = 1;
    for (int j = 1; j < spec.depth; ++j) {
        long long dj = det(spec.bonding(j));
        expected *= dj < 0 ? -dj : dj;
        if (expected > cap)
            throw CapExceeded("fiber_enumerate: fiber size exceeds cap of " +
                              std::to_string(cap));
    }

    std::vector<ExactPoint> fiber;
    ExactPoint e;
    e.stages.push_back(std::vector<Rational>(spec.n, Rational(0)));
    fiber.push_back(e);

    for (int j = 1; j < spec.depth; ++j) {
        const IntMatrix& m = spec.bonding(j);
        long long dj = det(m);
        long long box = dj < 0 ? -dj : dj;
        RationalMatrix inv = inverse_rational(m);

        std::vector<ExactPoint> next;
        next.reserve(fiber.size() * static_cast<std::size_t>(box));
        for (const auto& base : fiber) {
            std::vector<std::vector<Rational>> sols;
            std::vector<long long> offset(spec.n, 0);
            while (true) {
                std::vector<Rational> target(spec.n);
                for (int i = 0; i < spec.n; ++i)
                    target[i] = base.stages[j - 1][i] + Rational(offset[i]);
                auto cand = detail::mod1_vec(inv.apply(target));
                if (std::find(sols.begin(), sols.end(), cand) == sols.end())
                    sols.push_back(std::move(cand));
                int i = 0;
                while (i < spec.n && ++offset[i] == box) offset[i++] = 0;
                if (i == spec.n) break;
            }
            for (auto& sol : sols) {
                ExactPoint q = base;
                q.stages.push_back(std::move(sol));
                next.push_back(std::move(q));
            }
        }
        fiber = std::move(next);
    }

    std::sort(fiber.begin(), fiber.end(), detail::lex_less);
    if (static_cast<detail::int128>(fiber.size()) != expected)
        throw std::logic_error("fiber_enumerate: element count does not match det product");
    return fiber;
}

inline detail::int128 fiber_size(const SolenoidSpec& spec) {
    detail::int128 expected = 1;
    for (int j = 1; j < spec.depth; ++j) {
        long long dj = det(spec.bonding(j));
        expected *= dj < 0 ? -dj : dj;
    }
    return expected;
}

// float shadow of an exact point, for simulation work
inline FloatPoint to_float_point(const ExactPoint& p) {
    FloatPoint f;
    f.stages.resize(p.stages.size());
    for (std::size_t j = 0; j < p.stages.size(); ++j) {
        f.stages[j].reserve(p.stages[j].size());
        for (const auto& x : p.stages[j]) f.stages[j].push_back(x.to_double());
    }
    return f;
}

}  // namespace perspekt
