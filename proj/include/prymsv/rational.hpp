#ifndef PRYMSV_RATIONAL_HPP
#define PRYMSV_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prymsv
{

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. The wrapper exists to pin the
/// invariants (canonical form after every operation, division by zero raises
/// prymsv::Error instead of aborting) and to fix the textual format "p/q" /
/// "p" used by every table the project emits.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    Rational(long long value);
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class &integer) : value_(integer) {}
    Rational(const mpz_class &numerator, const mpz_class &denominator);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    mpz_class numerator() const
    {
        return value_.get_num();
    }
    mpz_class denominator() const
    {
        return value_.get_den();
    }

    int sign() const
    {
        return sgn(value_);
    }
    bool is_zero() const
    {
        return sign() == 0;
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }

    double to_double() const
    {
        return value_.get_d();
    }
    std::string to_string() const;
    /// Fixed decimal rendering for human-readable columns.
    std::string to_decimal(int digits = 12) const;

    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    Rational operator-() const;

    friend Rational operator+(Rational lhs, const Rational &rhs)
    {
        return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, const Rational &rhs)
    {
        return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, const Rational &rhs)
    {
        return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, const Rational &rhs)
    {
        return lhs /= rhs;
    }

    friend bool operator==(const Rational &lhs, const Rational &rhs)
    {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class &raw() const
    {
        return value_;
    }

private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &value);

} // namespace prymsv

#endif
