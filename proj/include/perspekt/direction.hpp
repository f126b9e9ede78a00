#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "perspekt/int_matrix.hpp"

namespace perspekt {

/**
 * Unit vector on S^{n-1}, optionally taken projectively (v and -v identified,
 * with the canonical representative having its first nonzero coordinate
 * positive).  Construction normalizes, so the unit-norm invariant holds by
 * construction.
 */
struct Direction {
    std::vector<double> v;
    bool projective = false;

    Direction() = default;
    Direction(std::vector<double> raw, bool projective_) : projective(projective_) {
        double s = 0;
        for (double x : raw) s += x * x;
        s = std::sqrt(s);
        if (!(s > 1e-300)) throw std::invalid_argument("Direction: zero vector");
        for (double& x : raw) x /= s;
        v = std::move(raw);
        canonicalize();
    }

    static Direction sphere(std::vector<double> raw) { return Direction(std::move(raw), false); }
    static Direction projective_dir(std::vector<double> raw) {
        return Direction(std::move(raw), true);
    }

    int dim() const { return static_cast<int>(v.size()); }

    void canonicalize() {
        if (!projective) return;
        for (double x : v) {
            if (std::abs(x) > 1e-12) {
                if (x < 0)
                    for (double& y : v) y = -y;
                return;
            }
        }
    }

    double norm() const {
        double s = 0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }

    // angular distance via the chord length, which stays well conditioned
    // near zero where acos(dot) loses half the significand; projective
    // pairs take the nearer of the two antipodal representatives
    double angle_to(const Direction& o) const {
        if (v.size() != o.v.size() || projective != o.projective)
            throw std::invalid_argument("Direction: incomparable directions");
        double dm = 0, dp = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            dm += (v[i] - o.v[i]) * (v[i] - o.v[i]);
            dp += (v[i] + o.v[i]) * (v[i] + o.v[i]);
        }
        double chord = std::sqrt(projective ? std::min(dm, dp) : dm);
        return 2.0 * std::asin(std::clamp(chord / 2.0, 0.0, 1.0));
    }

    bool approx_equal(const Direction& o, double tol = 1e-9) const {
        return angle_to(o) <= tol;
    }
};

// Induced sphere map of an invertible matrix: x -> A x / ||A x||.
inline Direction hat_action(const IntMatrix& a, const Direction& x) {
    if (a.n != x.dim()) throw std::invalid_argument("hat_action: dimension mismatch");
    return Direction(a.apply(x.v), x.projective);
}

// hat action of A^{-1} without leaving integer arithmetic: adj(A) differs
// from A^{-1} by the factor det(A), so only the sign needs fixing.
inline Direction hat_action_inverse(const IntMatrix& a, const Direction& x) {
    IntMatrix adj = adjugate(a);
    std::vector<double> w = adj.apply(x.v);
    if (det(a) < 0)
        for (double& y : w) y = -y;
    return Direction(std::move(w), x.projective);
}

}  // namespace perspekt
