#ifndef PRYMSV_HILBERT_HPP
#define PRYMSV_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>

#include <prymsv/arith.hpp>
#include <prymsv/rational.hpp>

namespace prymsv
{

/// Euler characteristics of the Hilbert modular surfaces of discriminant D
/// and of the loci living on them. An empty optional is an empty locus
/// (D = 5 mod 8 for the (1,2)-polarized side), never a zero value.
struct EulerCharacteristics {
    Discriminant disc;
    Rational chi_X;
    std::optional<Rational> chi_X_prime;
    Rational chi_P;
    std::optional<Rational> chi_P_prime;
    Rational chi_Q;
    std::optional<Rational> chi_Q_prime;
    Rational chi_W2;
    std::optional<Rational> chi_W4;
    std::optional<Rational> chi_W0cubed;
    std::optional<int> b_D;
};

/// zeta_K(-1) for K = Q(sqrt(D0)), D0 > 1 a fundamental discriminant, from
/// the finite Siegel sum (1/60) sum_{e = D0 mod 2} sigma_1((D0 - e^2)/4).
Rational zeta_K_minus1(std::int64_t d0);

/// Siegel sum S(D) = sum_{e = D mod 2, e^2 < D} sigma_1((D - e^2)/4).
Rational siegel_sum(std::int64_t d);

/// chi(X_D) = 2 f^3 zeta_{K_D0}(-1) sum_{r | f} (D0/r) mu(r) / r^2.
Rational chi_X(const Discriminant &d);

/// chi(X_D) by Moebius-style recursion on sum_{r | f} chi(X_{r^2 D0}) = S(D)/30.
/// Independent of chi_X.
class SiegelSumRoute
{
public:
    Rational chi_X(const Discriminant &d);

    std::size_t cache_size() const noexcept
    {
        return cache_.size();
    }

private:
    std::unordered_map<std::int64_t, Rational> cache_;
};

Rational chi_X_via_siegel_sums(const Discriminant &d);

/// Empty when D = 5 mod 8; chi(X_D) for odd conductor, (3/2) chi(X_D) for even.
std::optional<Rational> chi_X_prime(const Discriminant &d);

/// The coefficient b_D of chi(W_{D/4}(2)), read off D/4; empty unless 4 | D.
std::optional<int> b_coefficient(const Discriminant &d);

EulerCharacteristics full_table(const Discriminant &d);

/// chi(X_D) / chi(X_{D/4}) against 6, 10 or 8.
bool verify_ratio_prop(const Discriminant &d);
/// chi(W_D(2)) + b_D chi(W_{D/4}(2)) = -(9/2) chi(X'_D).
bool verify_w2_combination(const Discriminant &d);

/// Expected value of chi(X_D)/chi(X_{D/4}) given D/4 mod 8; throws NotApplicable
/// unless D/4 is a discriminant.
int expected_ratio(const Discriminant &d);

} // namespace prymsv

#endif
