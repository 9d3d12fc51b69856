#include <prymsv/error.hpp>
#include <prymsv/rational.hpp>

#include <climits>
#include <string>

namespace prymsv
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::InvalidDiscriminant:
            return "InvalidDiscriminant";
        case ErrorKind::SquareDiscriminant:
            return "SquareDiscriminant";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::EmptyLocus:
            return "EmptyLocus";
        case ErrorKind::NotApplicable:
            return "NotApplicable";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
    }
    return "Unknown";
}

static_assert(sizeof(long) == sizeof(long long), "Rational(long long) assumes an LP64 platform");

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw Error(ErrorKind::DivisionByZero, "Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpz_class &numerator, const mpz_class &denominator)
{
    if (denominator == 0) {
        throw Error(ErrorKind::DivisionByZero, "Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(mpz_class(std::string(text)));
        }
        return Rational(mpz_class(std::string(text.substr(0, slash))),
                        mpz_class(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument &) {
        throw Error(ErrorKind::InvalidArgument, "Rational: cannot parse '" + std::string(text) + "'");
    }
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const
{
    // Round |x|·10^digits to the nearest integer, then place the point.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(value_.get_num()) * scale * 2 + value_.get_den();
    mpz_class den = value_.get_den() * 2;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = q.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) {
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    if (digits > 0) {
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational &Rational::operator+=(const Rational &other)
{
    value_ += other.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    value_ -= other.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    value_ *= other.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "Rational: division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &value)
{
    return os << value.to_string();
}

} // namespace prymsv
