#include <doctest.h>

#include <prymsv/arith.hpp>
#include <prymsv/error.hpp>
#include <prymsv/rational.hpp>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace prymsv;

using testutil::kind_of;
using testutil::q;

TEST_CASE("rational basics")
{
    CHECK(Rational::parse("6/4") == q(3, 2));
    CHECK(Rational::parse("-5") == q(-5));
    CHECK(q(3, 2).to_string() == "3/2");
    CHECK(q(-4, 2).to_string() == "-2");
    CHECK(q(2, 3).to_decimal(4) == "0.6667");
    CHECK(q(-1, 8).to_decimal(2) == "-0.13");
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(1, 3) * q(3, 5) == q(1, 5));
    CHECK(q(1, 3) < q(1, 2));
    CHECK(kind_of([] { (void)(q(1) / q(0)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { (void)Rational(1, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { (void)Rational::parse("1/x"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rational string round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 2000; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("sigma reference values")
{
    CHECK(sigma(1, 6) == q(12));
    CHECK(sigma(1, 0) == q(-1, 24));
    CHECK(sigma(1, -3) == q(0));
    CHECK(sigma(1, 4) == q(7));
    CHECK(zeta_negative(1) == q(-1, 12));
    CHECK(zeta_negative(3) == q(1, 120));
    CHECK(sigma(3, 0) == q(1, 240));
    CHECK(sigma(3, 2) == q(9));
}

TEST_CASE("sigma_1 against brute-force divisor enumeration")
{
    const DivisorSumTable table(3000);
    for (std::int64_t n = 1; n <= 3000; ++n) {
        const auto expected = oracle::sigma1(n);
        REQUIRE(sigma1_int(n) == expected);
        REQUIRE(table.integer_at(n) == expected);
    }
    CHECK(table.at(0) == q(-1, 24));
    CHECK(table.at(-2) == q(0));
}

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        REQUIRE(mobius(n) == oracle::mobius(n));
    }
    // sum_{d | n} mu(d) = [n = 1]
    for (std::int64_t n = 1; n <= 2000; ++n) {
        int s = 0;
        for (auto d : divisors(n)) {
            s += mobius(d);
        }
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("kronecker symbol")
{
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(6, 3) == 0);
    CHECK(kronecker(17, 2) == 1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(5, 0) == 0);
    for (std::int64_t a = -60; a <= 60; ++a) {
        for (std::int64_t b = 1; b <= 120; ++b) {
            REQUIRE(kronecker(a, b) == oracle::kronecker(a, b));
        }
    }
}

TEST_CASE("kronecker multiplicativity in the bottom argument")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> top(-500, 500);
    std::uniform_int_distribution<std::int64_t> bottom(1, 300);
    for (int i = 0; i < 5000; ++i) {
        const auto a = top(rng);
        const auto m = bottom(rng);
        const auto n = bottom(rng);
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("psi_gamma0")
{
    CHECK(psi_gamma0(1) == q(-1, 6));
    CHECK(psi_gamma0(4) == q(-1));
    CHECK(psi_gamma0(6) == q(-2));
    for (std::int64_t m = 1; m <= 500; ++m) {
        REQUIRE(psi_gamma0(m) == testutil::from_mpq(oracle::psi(m)));
    }
}

TEST_CASE("psi sum identity")
{
    // n prod_{p | n} (1 + 1/p) = sum_{d | n} mu(d)^2 n/d
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t s = 0;
        for (auto d : divisors(n)) {
            const int mu = mobius(d);
            s += mu * mu * (n / d);
        }
        REQUIRE(psi_gamma0(n) == Rational(-s, 6));
    }
}

TEST_CASE("euler phi and divisors")
{
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t count = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            count += std::gcd(k, n) == 1 ? 1 : 0;
        }
        REQUIRE(euler_phi(n) == count);
        std::int64_t total = 0;
        for (auto d : divisors(n)) {
            total += euler_phi(d);
        }
        REQUIRE(total == n);
    }
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("gcd, isqrt, perfect squares")
{
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd({4, 6, 10}) == 2);
    CHECK(gcd({0, -3}) == 3);
    for (std::int64_t n = 0; n <= 5000; ++n) {
        const auto r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
        REQUIRE(is_perfect_square(n) == (r * r == n));
    }
    CHECK(isqrt(4000000000000000000LL) == 2000000000LL);
}

TEST_CASE("discriminant classification reference values")
{
    const auto d32 = classify_discriminant(32);
    CHECK(d32.conductor() == 2);
    CHECK(d32.fundamental() == 8);
    CHECK(d32.two_power() == 1);
    CHECK(d32.odd_conductor() == 1);

    const auto d17 = classify_discriminant(17);
    CHECK(d17.is_fundamental());
    CHECK(d17.is_12_primitive());

    CHECK(classify_discriminant(12).is_12_primitive());
    CHECK_FALSE(classify_discriminant(68).is_12_primitive());
    CHECK(classify_discriminant(16).is_square());

    CHECK(kind_of([] { (void)classify_discriminant(7); }) == ErrorKind::InvalidDiscriminant);
    CHECK(kind_of([] { (void)classify_discriminant(0); }) == ErrorKind::InvalidDiscriminant);
    CHECK(kind_of([] { (void)classify_discriminant(-3); }) == ErrorKind::InvalidDiscriminant);
}

TEST_CASE("discriminant decomposition invariants")
{
    for (std::int64_t d = 5; d <= 5000; ++d) {
        if (!is_discriminant(d)) {
            continue;
        }
        const auto disc = classify_discriminant(d);
        if (disc.is_square()) {
            continue;
        }
        const auto f = disc.conductor();
        const auto d0 = disc.fundamental();
        REQUIRE(f * f * d0 == d);
        REQUIRE(is_discriminant(d0));
        // D0 fundamental: no g > 1 with D0/g^2 a discriminant.
        for (std::int64_t g = 2; g * g <= d0; ++g) {
            if (d0 % (g * g) == 0) {
                REQUIRE_FALSE(is_discriminant(d0 / (g * g)));
            }
        }
        std::int64_t four_s = 1;
        for (int i = 0; i < disc.two_power(); ++i) {
            four_s *= 4;
        }
        REQUIRE(four_s * disc.odd_conductor() * disc.odd_conductor() * d0 == d);
        REQUIRE(disc.odd_conductor() % 2 == 1);

        // (1,2)-primitivity by direct definition
        const auto mod8_ok = [](std::int64_t x) {
            const auto r = x % 8;
            return r == 0 || r == 1 || r == 4;
        };
        bool primitive = d > 9 && mod8_ok(d);
        for (std::int64_t g = 2; primitive && g * g <= d; ++g) {
            if (d % (g * g) == 0 && mod8_ok(d / (g * g))) {
                primitive = false;
            }
        }
        REQUIRE(disc.is_12_primitive() == primitive);
    }
}
