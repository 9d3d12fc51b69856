#ifndef PRYMSV_PROTOTYPES_HPP
#define PRYMSV_PROTOTYPES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <prymsv/arith.hpp>
#include <prymsv/rational.hpp>

namespace prymsv
{

/// (a, b, d, e) with D = e^2 + 8ad, a > 0, d > 0, 0 <= b < a.
struct SCPrototype {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 0;
    std::int64_t e = 0;

    friend bool operator==(const SCPrototype &, const SCPrototype &) = default;
};

/// (e, ell, m) with D = e^2 + 4 ell^2 m, ell, m > 0, gcd(e, ell) = 1.
struct TorusProductPrototype {
    std::int64_t e = 0;
    std::int64_t ell = 0;
    std::int64_t m = 0;

    friend bool operator==(const TorusProductPrototype &, const TorusProductPrototype &) = default;
};

bool satisfies_invariants(const SCPrototype &p, std::int64_t discriminant, bool restricted);
bool satisfies_invariants(const TorusProductPrototype &p, std::int64_t discriminant);

/// Visits every tuple of the prototype set, ordered by e, then a, then b.
/// With restricted = true only tuples with gcd(a, b, d, e) = 1 are visited.
void for_each_sc_prototype(std::int64_t discriminant, bool restricted,
                           const std::function<void(const SCPrototype &)> &visit);

std::vector<SCPrototype> enumerate_P(std::int64_t discriminant, bool restricted);

/// |P_D| (restricted) or |P~_D| without materializing the tuples: for fixed
/// (a, d, e) with g = gcd(a, d, e), the admissible b in [0, a) number (a/g) phi(g).
std::int64_t count_P(std::int64_t discriminant, bool restricted);

/// sum_{e^2 < D, e^2 = D mod 8} sigma_1((D - e^2)/8).
std::int64_t count_P_tilde_by_sigma(std::int64_t discriminant);

/// |P~_{f^2 D0}| = sum_{r | f} |P_{r^2 D0}| for a (1,2)-primitive D0, both sides
/// by count_P.
bool verify_gcd_stratification(const Discriminant &d0, std::int64_t f);

std::vector<TorusProductPrototype> enumerate_torus_products(std::int64_t discriminant);

/// chi(Q_D) as sum of psi_gamma0(m) over torus-product prototypes.
Rational chi_Q_via_prototypes(std::int64_t discriminant);
/// chi(Q'_D) = -(1/6) |P_D|.
Rational chi_Q_prime_via_prototypes(std::int64_t discriminant);

} // namespace prymsv

#endif
