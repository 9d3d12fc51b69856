#include <prymsv/error.hpp>
#include <prymsv/prototypes.hpp>

#include <string>

namespace prymsv
{

namespace
{

void require_discriminant(std::int64_t d, std::int64_t minimum)
{
    if (!is_discriminant(d)) {
        throw Error(ErrorKind::InvalidDiscriminant, "D = " + std::to_string(d) + " is not a discriminant");
    }
    if (d < minimum) {
        throw Error(ErrorKind::OutOfRange,
                    "D = " + std::to_string(d) + " is below the minimum " + std::to_string(minimum));
    }
}

void require_nonsquare(std::int64_t d)
{
    if (is_perfect_square(d)) {
        throw Error(ErrorKind::SquareDiscriminant, "D = " + std::to_string(d) + " is a square");
    }
}

// Calls visit(e, n) for every e with e^2 < D and e^2 = D mod 8, n = (D - e^2)/8.
template <typename Visit>
void for_each_admissible_e(std::int64_t d, Visit &&visit)
{
    const std::int64_t root = isqrt(d);
    for (std::int64_t e = -root; e <= root; ++e) {
        const std::int64_t rest = d - e * e;
        if (rest > 0 && rest % 8 == 0) {
            visit(e, rest / 8);
        }
    }
}

} // namespace

bool satisfies_invariants(const SCPrototype &p, std::int64_t discriminant, bool restricted)
{
    const bool shape = p.a > 0 && p.d > 0 && p.b >= 0 && p.b < p.a && p.e * p.e + 8 * p.a * p.d == discriminant;
    return shape && (!restricted || gcd({p.a, p.b, p.d, p.e}) == 1);
}

bool satisfies_invariants(const TorusProductPrototype &p, std::int64_t discriminant)
{
    return p.ell > 0 && p.m > 0 && p.e * p.e + 4 * p.ell * p.ell * p.m == discriminant && gcd(p.e, p.ell) == 1;
}

void for_each_sc_prototype(std::int64_t discriminant, bool restricted,
                           const std::function<void(const SCPrototype &)> &visit)
{
    require_discriminant(discriminant, 9);
    for_each_admissible_e(discriminant, [&](std::int64_t e, std::int64_t n) {
        for (auto a : divisors(n)) {
            const std::int64_t d = n / a;
            const std::int64_t g = gcd({a, d, e});
            for (std::int64_t b = 0; b < a; ++b) {
                if (restricted && gcd(g, b) != 1) {
                    continue;
                }
                visit(SCPrototype{a, b, d, e});
            }
        }
    });
}

std::vector<SCPrototype> enumerate_P(std::int64_t discriminant, bool restricted)
{
    std::vector<SCPrototype> out;
    for_each_sc_prototype(discriminant, restricted, [&out](const SCPrototype &p) { out.push_back(p); });
    return out;
}

std::int64_t count_P(std::int64_t discriminant, bool restricted)
{
    require_discriminant(discriminant, 9);
    std::int64_t count = 0;
    for_each_admissible_e(discriminant, [&](std::int64_t e, std::int64_t n) {
        for (auto a : divisors(n)) {
            if (!restricted) {
                count += a;
                continue;
            }
            const std::int64_t g = gcd({a, n / a, e});
            count += (a / g) * euler_phi(g);
        }
    });
    return count;
}

std::int64_t count_P_tilde_by_sigma(std::int64_t discriminant)
{
    require_discriminant(discriminant, 9);
    require_nonsquare(discriminant);
    std::int64_t count = 0;
    for_each_admissible_e(discriminant, [&count](std::int64_t, std::int64_t n) { count += sigma1_int(n); });
    return count;
}

bool verify_gcd_stratification(const Discriminant &d0, std::int64_t f)
{
    if (!d0.is_12_primitive()) {
        throw Error(ErrorKind::InvalidArgument,
                    "D0 = " + std::to_string(d0.value()) + " is not a (1,2)-primitive discriminant");
    }
    if (f < 1) {
        throw Error(ErrorKind::InvalidArgument, "f must be >= 1");
    }
    const std::int64_t unrestricted = count_P(f * f * d0.value(), false);
    std::int64_t stratified = 0;
    for (auto r : divisors(f)) {
        stratified += count_P(r * r * d0.value(), true);
    }
    return unrestricted == stratified;
}

std::vector<TorusProductPrototype> enumerate_torus_products(std::int64_t discriminant)
{
    require_discriminant(discriminant, 5);
    require_nonsquare(discriminant);
    std::vector<TorusProductPrototype> out;
    const std::int64_t root = isqrt(discriminant);
    for (std::int64_t e = -root; e <= root; ++e) {
        const std::int64_t rest = discriminant - e * e;
        if (rest <= 0 || rest % 4 != 0) {
            continue;
        }
        const std::int64_t quarter = rest / 4;
        for (std::int64_t ell = 1; ell * ell <= quarter; ++ell) {
            if (quarter % (ell * ell) == 0 && gcd(e, ell) == 1) {
                out.push_back(TorusProductPrototype{e, ell, quarter / (ell * ell)});
            }
        }
    }
    return out;
}

Rational chi_Q_via_prototypes(std::int64_t discriminant)
{
    Rational chi;
    for (const auto &p : enumerate_torus_products(discriminant)) {
        chi += psi_gamma0(p.m);
    }
    return chi;
}

Rational chi_Q_prime_via_prototypes(std::int64_t discriminant)
{
    require_discriminant(discriminant, 10);
    require_nonsquare(discriminant);
    if (discriminant % 8 == 5) {
        throw Error(ErrorKind::EmptyLocus,
                    "Q'_D is empty for D = 5 mod 8 (D = " + std::to_string(discriminant) + ")");
    }
    std::int64_t count = 0;
    for_each_sc_prototype(discriminant, true, [&count](const SCPrototype &) { ++count; });
    return Rational(-static_cast<long>(count), 6L);
}

} // namespace prymsv
