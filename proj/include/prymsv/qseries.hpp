#ifndef PRYMSV_QSERIES_HPP
#define PRYMSV_QSERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <prymsv/arith.hpp>
#include <prymsv/rational.hpp>

namespace prymsv
{

/// Formal power series in q over Rational, known exactly through q^order.
class QSeries
{
public:
    /// The zero series through q^order.
    explicit QSeries(std::int64_t order);
    /// Takes ownership of c_0..c_N; the order is coeffs.size() - 1.
    explicit QSeries(std::vector<Rational> coeffs);

    std::int64_t order() const noexcept
    {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    const Rational &operator[](std::int64_t n) const;
    Rational &operator[](std::int64_t n);

    const std::vector<Rational> &coefficients() const noexcept
    {
        return coeffs_;
    }

    /// Drops every coefficient above q^order (order must not exceed the current one).
    QSeries truncated(std::int64_t order) const;

    bool is_zero() const;

    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    std::vector<Rational> coeffs_;
};

QSeries series_add(const QSeries &a, const QSeries &b);
QSeries series_sub(const QSeries &a, const QSeries &b);
QSeries series_scale(const Rational &r, const QSeries &a);
/// Truncated Cauchy product.
QSeries series_mul(const QSeries &a, const QSeries &b);

/// q -> q^m. The input is known through q^N, so the image is known exactly
/// through q^(m(N+1)-1): every exponent not divisible by m is zero.
QSeries dilate(const QSeries &a, std::int64_t m);

inline QSeries operator+(const QSeries &a, const QSeries &b)
{
    return series_add(a, b);
}
inline QSeries operator-(const QSeries &a, const QSeries &b)
{
    return series_sub(a, b);
}
inline QSeries operator*(const Rational &r, const QSeries &a)
{
    return series_scale(r, a);
}
inline QSeries operator*(const QSeries &a, const QSeries &b)
{
    return series_mul(a, b);
}

// Building blocks of the weight 5/2 forms.

/// G_2 = -1/24 + sum sigma_1(n) q^n.
QSeries build_g2(std::int64_t order);
/// theta = sum_{n in Z} q^{n^2}.
QSeries build_theta(std::int64_t order);
/// theta'/(2 pi i) = sum_{n in Z} n^2 q^{n^2}.
QSeries build_theta2(std::int64_t order);

/// f_m = G_2(mz) theta + theta2/m for m in {1, 2, 4, 8}.
QSeries build_f(int m, std::int64_t order);

/// Closed-form coefficient a_m(D) as a finite e-sum of sigma_1 values,
/// including the correction term at squares.
Rational coeff_closed_form(int m, std::int64_t n);
/// Same, with sigma_1 taken from a sieved table (table.limit() >= n / m).
Rational coeff_closed_form(int m, std::int64_t n, const DivisorSumTable &table);

/// g_1 = f_4 - f_1(4z).
QSeries build_g1(std::int64_t order);
/// Twist by the conductor-8 character: keep n = 1 mod 8, negate n = 5 mod 8,
/// zero everything else.
QSeries twist_mod8(const QSeries &a);
/// g = (g_1 + g_1 twisted) / 2.
QSeries build_g(std::int64_t order);
/// h = f_8 - f_2(4z).
QSeries build_h(std::int64_t order);

/// Names accepted by build_form: f1, f2, f4, f8, g1, g, h, g2, theta, theta2.
QSeries build_form(const std::string &name, std::int64_t order);

/// Outcome of one coefficient-wise identity check.
struct IdentityCheck {
    std::string name;
    std::int64_t checked_through = 0;
    std::optional<std::int64_t> first_failure;

    bool passed() const noexcept
    {
        return !first_failure.has_value();
    }
};

struct IdentityReport {
    std::int64_t order = 0;
    std::vector<IdentityCheck> checks;

    bool passed() const noexcept;
    /// The failing check with the smallest exponent, if any.
    std::optional<IdentityCheck> first_failure() const;
};

/// Certifies, coefficient by coefficient through q^order:
///   f1 - 5 f2 + 4 f4 = 0, a1(n) = a4(4n), a2(n) = a8(4n), h = (2/5) g,
///   the supports of g1, g and h, and series vs closed-form coefficients
///   for f1, f2, f4, f8.
IdentityReport certify_identities(std::int64_t order);

/// Both sides of the divisor-sum identity for a non-square discriminant with
/// D = 0 mod 4 or D = 1 mod 8.
struct SigmaIdentitySides {
    Rational lhs;
    Rational rhs;
};

SigmaIdentitySides sigma_identity_sides(const Discriminant &d);
SigmaIdentitySides sigma_identity_sides(const Discriminant &d, const DivisorSumTable &table);

bool verify_sigma_identity(const Discriminant &d);
bool verify_sigma_identity(const Discriminant &d, const DivisorSumTable &table);

/// True when the divisor-sum identity applies to D (non-square, D = 0 mod 4 or 1 mod 8).
bool sigma_identity_applies(std::int64_t d) noexcept;

} // namespace prymsv

#endif
