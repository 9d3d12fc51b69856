#include <prymsv/error.hpp>
#include <prymsv/hilbert.hpp>

#include <string>

namespace prymsv
{

namespace
{

void require_nonsquare(const Discriminant &d)
{
    if (d.is_square()) {
        throw Error(ErrorKind::SquareDiscriminant, "D = " + std::to_string(d.value()) + " is a square");
    }
}

void require_above_nine(const Discriminant &d)
{
    require_nonsquare(d);
    if (d.value() <= 9) {
        throw Error(ErrorKind::OutOfRange, "D = " + std::to_string(d.value()) + " must exceed 9");
    }
}

void require_four_divides(const Discriminant &d)
{
    if (d.value() % 4 != 0) {
        throw Error(ErrorKind::NotApplicable, "D = " + std::to_string(d.value()) + " is not divisible by 4");
    }
}

} // namespace

Rational siegel_sum(std::int64_t d)
{
    if (!is_discriminant(d) || is_perfect_square(d)) {
        throw Error(ErrorKind::InvalidArgument, "Siegel sum needs a non-square discriminant");
    }
    const std::int64_t parity = d % 2;
    const std::int64_t root = isqrt(d);
    std::int64_t total = 0;
    for (std::int64_t e = -root; e <= root; ++e) {
        if ((e % 2 + 2) % 2 != parity) {
            continue;
        }
        total += sigma1_int((d - e * e) / 4);
    }
    return Rational(static_cast<long>(total));
}

Rational zeta_K_minus1(std::int64_t d0)
{
    const auto disc = classify_discriminant(d0);
    if (disc.is_square() || !disc.is_fundamental() || d0 <= 1) {
        throw Error(ErrorKind::InvalidDiscriminant,
                    "zeta_K(-1) needs a non-square fundamental discriminant, got " + std::to_string(d0));
    }
    return siegel_sum(d0) / Rational(60);
}

Rational chi_X(const Discriminant &d)
{
    require_nonsquare(d);
    const std::int64_t f = d.conductor();
    const std::int64_t d0 = d.fundamental();
    Rational moebius_sum;
    for (auto r : divisors(f)) {
        const int mu = mobius(r);
        if (mu == 0) {
            continue;
        }
        const int k = kronecker(d0, r);
        if (k == 0) {
            continue;
        }
        moebius_sum += Rational(static_cast<long>(k * mu), static_cast<long>(r * r));
    }
    return Rational(2 * static_cast<long>(f * f * f)) * zeta_K_minus1(d0) * moebius_sum;
}

Rational SiegelSumRoute::chi_X(const Discriminant &d)
{
    require_nonsquare(d);
    if (auto it = cache_.find(d.value()); it != cache_.end()) {
        return it->second;
    }
    Rational value = siegel_sum(d.value()) / Rational(30);
    const std::int64_t f = d.conductor();
    for (auto r : divisors(f)) {
        if (r == f) {
            continue;
        }
        value -= chi_X(classify_discriminant(r * r * d.fundamental()));
    }
    cache_.emplace(d.value(), value);
    return value;
}

Rational chi_X_via_siegel_sums(const Discriminant &d)
{
    SiegelSumRoute route;
    return route.chi_X(d);
}

std::optional<Rational> chi_X_prime(const Discriminant &d)
{
    require_above_nine(d);
    if (d.residue_mod_8() == 5) {
        return std::nullopt;
    }
    const auto chi = chi_X(d);
    if (d.conductor() % 2 == 0) {
        return Rational(3L, 2L) * chi;
    }
    return chi;
}

std::optional<int> b_coefficient(const Discriminant &d)
{
    if (d.value() % 4 != 0) {
        return std::nullopt;
    }
    const std::int64_t quarter = d.value() / 4;
    if (quarter % 4 == 2 || quarter % 4 == 3) {
        return 0;
    }
    if (quarter % 4 == 0) {
        return 4;
    }
    return quarter % 8 == 1 ? 3 : 5;
}

EulerCharacteristics full_table(const Discriminant &d)
{
    require_above_nine(d);
    EulerCharacteristics t{d, chi_X(d), {}, {}, {}, {}, {}, {}, {}, {}, b_coefficient(d)};
    t.chi_P = Rational(-5L, 2L) * t.chi_X;
    t.chi_Q = Rational(-5) * t.chi_X;
    t.chi_W2 = Rational(-9L, 2L) * t.chi_X;

    t.chi_X_prime = chi_X_prime(d);
    if (!t.chi_X_prime) {
        return t;
    }
    const Rational &xp = *t.chi_X_prime;
    const bool four_divides = d.value() % 4 == 0;
    t.chi_P_prime = four_divides ? -xp / Rational(2) : -xp;
    t.chi_Q_prime = Rational(2) * *t.chi_P_prime;
    t.chi_W4 = four_divides ? Rational(-5L, 2L) * xp : Rational(-5) * xp;
    // W_D(0^3) is isomorphic to Q'_D.
    t.chi_W0cubed = t.chi_Q_prime;
    return t;
}

int expected_ratio(const Discriminant &d)
{
    require_four_divides(d);
    const std::int64_t quarter = d.value() / 4;
    if (!is_discriminant(quarter)) {
        throw Error(ErrorKind::NotApplicable, "D/4 = " + std::to_string(quarter) + " is not a discriminant");
    }
    if (quarter % 8 == 1) {
        return 6;
    }
    if (quarter % 8 == 5) {
        return 10;
    }
    return 8;
}

bool verify_ratio_prop(const Discriminant &d)
{
    require_above_nine(d);
    const int expected = expected_ratio(d);
    const auto quarter = classify_discriminant(d.value() / 4);
    return chi_X(d) / chi_X(quarter) == Rational(expected);
}

bool verify_w2_combination(const Discriminant &d)
{
    require_above_nine(d);
    require_four_divides(d);
    const auto table = full_table(d);
    Rational lhs = table.chi_W2;
    const int b = *table.b_D;
    if (b != 0) {
        const auto quarter = classify_discriminant(d.value() / 4);
        lhs += Rational(b) * Rational(-9L, 2L) * chi_X(quarter);
    }
    return lhs == Rational(-9L, 2L) * *table.chi_X_prime;
}

} // namespace prymsv
