#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "perspekt/direction.hpp"
#include "perspekt/int_matrix.hpp"
#include "perspekt/mobius.hpp"

using namespace perspekt;

namespace {

IntMatrix random_unimodular2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> e(-4, 4);
    while (true) {
        long long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        long long dt = a * d - b * c;
        if (dt == 1 || dt == -1) return IntMatrix::make2(a, b, c, d);
    }
}

}  // namespace

TEST_CASE("det examples") {
    REQUIRE(det(IntMatrix::identity(2)) == 1);
    REQUIRE(det(IntMatrix::make2(2, 0, 0, 2)) == 4);
    REQUIRE(det(IntMatrix::make2(3, 1, 2, 1)) == 1);
    REQUIRE(det(IntMatrix(3, {1, 2, 3, 4, 5, 6, 7, 8, 10})) == -3);
    REQUIRE(det(IntMatrix(3, {1, 2, 3, 2, 4, 6, 7, 8, 10})) == 0);
    // pivot-swap path
    REQUIRE(det(IntMatrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
    REQUIRE(det(IntMatrix(4, {0, 2, 0, 0, 3, 0, 0, 0, 0, 0, 1, 5, 0, 0, 0, 2})) == -12);
}

TEST_CASE("inverse_rational examples") {
    auto id = inverse_rational(IntMatrix::identity(2));
    REQUIRE(id.at(0, 0) == Rational(1));
    REQUIRE(id.at(0, 1) == Rational(0));

    auto d23 = inverse_rational(IntMatrix::make2(2, 0, 0, 3));
    REQUIRE(d23.at(0, 0) == Rational(1, 2));
    REQUIRE(d23.at(1, 1) == Rational(1, 3));

    auto sh = inverse_rational(IntMatrix::make2(1, 1, 0, 1));
    REQUIRE(sh.at(0, 0) == Rational(1));
    REQUIRE(sh.at(0, 1) == Rational(-1));
    REQUIRE(sh.at(1, 1) == Rational(1));

    REQUIRE_THROWS_AS(inverse_rational(IntMatrix::make2(1, 2, 2, 4)), std::domain_error);
}

TEST_CASE("m * m^{-1} is exactly the identity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> e(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m(3);
        do {
            for (auto& x : m.e) x = e(rng);
        } while (det(m) == 0);
        auto inv = inverse_rational(m);
        RationalMatrix mr(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) mr.at(i, j) = Rational(m.at(i, j));
        auto prod = mr * inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(prod.at(i, j) == (i == j ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long long> e(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a(3), b(3);
        for (auto& x : a.e) x = e(rng);
        for (auto& x : b.e) x = e(rng);
        REQUIRE(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("hat_action examples") {
    auto e1 = Direction::sphere({1, 0});
    REQUIRE(hat_action(IntMatrix::identity(2), e1).approx_equal(e1, 1e-12));

    auto rot = IntMatrix::make2(0, -1, 1, 0);
    REQUIRE(hat_action(rot, e1).approx_equal(Direction::sphere({0, 1}), 1e-12));

    auto sheared = hat_action(IntMatrix::make2(1, 1, 0, 1), Direction::sphere({0, 1}));
    REQUIRE(sheared.approx_equal(Direction::sphere({1, 1}), 1e-12));
    REQUIRE(sheared.v[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-14));
}

TEST_CASE("projective canonicalization") {
    auto a = Direction::projective_dir({-1, -2});
    auto b = Direction::projective_dir({1, 2});
    REQUIRE(a.approx_equal(b, 1e-12));
    REQUIRE(a.v[0] > 0);
    // idempotent
    auto c = a;
    c.canonicalize();
    REQUIRE(c.v == a.v);
    // first nonzero coordinate positive even when leading coordinate vanishes
    auto d = Direction::projective_dir({0, -1});
    REQUIRE(d.v[1] == Catch::Approx(1.0));
    REQUIRE_THROWS_AS(Direction::sphere({0, 0}), std::invalid_argument);
}

TEST_CASE("hat_action composes") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_unimodular2(rng), b = random_unimodular2(rng);
        Direction x = Direction::sphere({u(rng) + 1.5, u(rng)});
        auto lhs = hat_action(a * b, x);
        auto rhs = hat_action(a, hat_action(b, x));
        REQUIRE(lhs.angle_to(rhs) < 1e-12);
        // inverse action really inverts
        auto back = hat_action_inverse(a, hat_action(a, x));
        REQUIRE(back.angle_to(x) < 1e-12);
    }
}

TEST_CASE("hat_action matches the slope Mobius action") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long long> e(-3, 3);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        long long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        long long dt = a * d - b * c;
        if (dt != 1 && dt != -1) continue;
        double s = u(rng);
        double den = c * s + d;
        if (std::abs(den) < 1e-6) continue;
        double expected = mobius_apply(Mobius(a, b, c, d), s);
        // vector matrix ((d, c), (b, a)) realizes the slope action
        auto dir = hat_action(IntMatrix::make2(d, c, b, a), Direction::sphere({1, s}));
        if (std::abs(dir.v[0]) < 1e-9) continue;
        REQUIRE(dir.v[1] / dir.v[0] == Catch::Approx(expected).margin(1e-10));
    }
}

TEST_CASE("adjugate matches det * inverse") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long long> e(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(2);
        do {
            for (auto& x : m.e) x = e(rng);
        } while (det(m) == 0);
        auto adj = adjugate(m);
        auto prod = m * adj;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                REQUIRE(prod.at(i, j) == (i == j ? det(m) : 0));
    }
}
