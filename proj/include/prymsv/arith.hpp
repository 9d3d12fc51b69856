#ifndef PRYMSV_ARITH_HPP
#define PRYMSV_ARITH_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <prymsv/rational.hpp>

namespace prymsv
{

/// Greatest common divisor with gcd(x, 0) = |x| and gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t gcd(std::initializer_list<std::int64_t> values) noexcept;

/// Floor of the square root of n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_perfect_square(std::int64_t n);

/// Divisor-power sum with the modular-forms conventions:
/// sigma_m(0) = zeta(-m)/2 and sigma_m(n) = 0 for n < 0.
Rational sigma(int m, std::int64_t n);

/// Integer divisor sum sigma_1(n) for n >= 1 by trial division.
std::int64_t sigma1_int(std::int64_t n);

/// Value of the Riemann zeta function at the negative integer -m (m >= 1).
Rational zeta_negative(int m);

int mobius(std::int64_t n);

/// Kronecker symbol (a/b). Undefined for (0, 0).
int kronecker(std::int64_t a, std::int64_t b);

/// Euler characteristic of H/Gamma_0(m): -(m/6) prod_{p | m} (1 + 1/p).
Rational psi_gamma0(std::int64_t m);

std::int64_t euler_phi(std::int64_t n);

/// Ascending list of positive divisors.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Sieved table of sigma_1(n), 0 <= n <= limit, for range sweeps where
/// trial division per lookup would dominate.
class DivisorSumTable
{
public:
    explicit DivisorSumTable(std::int64_t limit);

    std::int64_t limit() const noexcept
    {
        return static_cast<std::int64_t>(values_.size()) - 1;
    }

    /// sigma_1(n) for 1 <= n <= limit; 0 for n < 0. n = 0 has no integer value.
    std::int64_t integer_at(std::int64_t n) const;

    /// sigma_1(n) with the sigma_1(0) = -1/24 convention.
    Rational at(std::int64_t n) const;

private:
    std::vector<std::int64_t> values_;
};

/// A real quadratic discriminant D = f^2 D0 = 4^s f_odd^2 D0 with D0 fundamental.
class Discriminant
{
public:
    std::int64_t value() const noexcept
    {
        return d_;
    }
    int residue_mod_8() const noexcept
    {
        return static_cast<int>(d_ % 8);
    }
    bool is_square() const noexcept
    {
        return square_;
    }

    /// Conductor f with D = f^2 D0.
    std::int64_t conductor() const noexcept
    {
        return f_;
    }
    std::int64_t fundamental() const noexcept
    {
        return d0_;
    }
    int two_power() const noexcept
    {
        return s_;
    }
    std::int64_t odd_conductor() const noexcept
    {
        return f_odd_;
    }

    bool is_fundamental() const noexcept
    {
        return f_ == 1;
    }
    /// D > 9, D = 0,1,4 mod 8 and no f > 1 with D/f^2 = 0,1,4 mod 8.
    bool is_12_primitive() const noexcept
    {
        return primitive_12_;
    }

    friend Discriminant classify_discriminant(std::int64_t d);

private:
    std::int64_t d_ = 0;
    bool square_ = false;
    std::int64_t f_ = 1;
    std::int64_t d0_ = 0;
    int s_ = 0;
    std::int64_t f_odd_ = 1;
    bool primitive_12_ = false;
};

/// Throws Error(InvalidDiscriminant) unless D >= 1 and D = 0,1 mod 4.
Discriminant classify_discriminant(std::int64_t d);

bool is_discriminant(std::int64_t d) noexcept;

} // namespace prymsv

#endif
