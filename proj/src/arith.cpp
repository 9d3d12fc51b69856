#include <prymsv/arith.hpp>
#include <prymsv/error.hpp>

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace prymsv
{

namespace
{

// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<Rational> bernoulli_numbers(int upto)
{
    // sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
    std::vector<Rational> b(static_cast<std::size_t>(upto) + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= upto; ++n) {
        Rational acc;
        mpz_class binom = 1; // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            acc += Rational(binom) * b[static_cast<std::size_t>(k)];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        // binom is now C(n+1, n) = n+1
        b[static_cast<std::size_t>(n)] = -acc / Rational(binom);
    }
    return b;
}

int jacobi_odd(std::int64_t a, std::int64_t n)
{
    // n odd, n > 0, 0 <= a < n
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::int64_t gcd(std::initializer_list<std::int64_t> values) noexcept
{
    std::int64_t g = 0;
    for (auto v : values) {
        g = gcd(g, v);
    }
    return g;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "isqrt of negative number");
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_perfect_square(std::int64_t n)
{
    if (n < 0) {
        return false;
    }
    const auto r = isqrt(n);
    return r * r == n;
}

Rational zeta_negative(int m)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "zeta_negative: m must be >= 1");
    }
    // zeta(-m) = -B_{m+1} / (m+1)
    const auto b = bernoulli_numbers(m + 1);
    return -b[static_cast<std::size_t>(m) + 1] / Rational(static_cast<long>(m) + 1);
}

std::int64_t sigma1_int(std::int64_t n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "sigma1_int: n must be >= 1");
    }
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d * d != n) {
                s += n / d;
            }
        }
    }
    return s;
}

Rational sigma(int m, std::int64_t n)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "sigma: m must be >= 1");
    }
    if (n < 0) {
        return Rational(0);
    }
    if (n == 0) {
        return zeta_negative(m) / Rational(2);
    }
    if (m == 1) {
        return Rational(static_cast<long>(sigma1_int(n)));
    }
    mpz_class s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
            s += t;
            if (d * d != n) {
                mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n / d), static_cast<unsigned long>(m));
                s += t;
            }
        }
    }
    return Rational(s);
}

int mobius(std::int64_t n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "mobius: n must be >= 1");
    }
    int result = 1;
    for (const auto &[p, e] : factor(n)) {
        if (e > 1) {
            return 0;
        }
        result = -result;
    }
    return result;
}

int kronecker(std::int64_t a, std::int64_t b)
{
    if (a == 0 && b == 0) {
        throw Error(ErrorKind::InvalidArgument, "kronecker: (0/0) is undefined");
    }
    if (b == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    if (a % 2 == 0 && b % 2 == 0) {
        return 0;
    }
    int result = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) {
            result = -result;
        }
    }
    int v = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        // (a/2): a is odd here since a, b were not both even.
        const std::int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) {
            result = -result;
        }
    }
    if (b == 1) {
        return result;
    }
    const std::int64_t reduced = ((a % b) + b) % b;
    return result * jacobi_odd(reduced, b);
}

Rational psi_gamma0(std::int64_t m)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "psi_gamma0: m must be >= 1");
    }
    // -(1/6) m prod (1 + 1/p) = -(1/6) (m / prod p) prod (p + 1)
    std::int64_t index = m;
    for (const auto &[p, e] : factor(m)) {
        index = index / p * (p + 1);
    }
    return Rational(-static_cast<long>(index), 6L);
}

std::int64_t euler_phi(std::int64_t n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "euler_phi: n must be >= 1");
    }
    std::int64_t phi = n;
    for (const auto &[p, e] : factor(n)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "divisors: n must be >= 1");
    }
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

DivisorSumTable::DivisorSumTable(std::int64_t limit)
{
    if (limit < 0) {
        throw Error(ErrorKind::InvalidArgument, "DivisorSumTable: negative limit");
    }
    values_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t d = 1; d <= limit; ++d) {
        for (std::int64_t k = d; k <= limit; k += d) {
            values_[static_cast<std::size_t>(k)] += d;
        }
    }
}

std::int64_t DivisorSumTable::integer_at(std::int64_t n) const
{
    if (n < 0) {
        return 0;
    }
    if (n == 0 || n > limit()) {
        throw Error(ErrorKind::OutOfRange, "DivisorSumTable: index " + std::to_string(n) + " outside 1.." +
                                               std::to_string(limit()));
    }
    return values_[static_cast<std::size_t>(n)];
}

Rational DivisorSumTable::at(std::int64_t n) const
{
    if (n == 0) {
        return Rational(-1L, 24L);
    }
    return Rational(static_cast<long>(integer_at(n)));
}

bool is_discriminant(std::int64_t d) noexcept
{
    return d >= 1 && (d % 4 == 0 || d % 4 == 1);
}

Discriminant classify_discriminant(std::int64_t d)
{
    if (!is_discriminant(d)) {
        throw Error(ErrorKind::InvalidDiscriminant,
                    "D = " + std::to_string(d) + " is not a positive integer congruent to 0 or 1 mod 4");
    }
    Discriminant out;
    out.d_ = d;
    out.square_ = is_perfect_square(d);

    bool primitive = d > 9 && (d % 8 == 0 || d % 8 == 1 || d % 8 == 4);
    std::int64_t best = 1;
    for (std::int64_t f = 2; f * f <= d; ++f) {
        if (d % (f * f) != 0) {
            continue;
        }
        const std::int64_t rest = d / (f * f);
        if (is_discriminant(rest)) {
            best = f;
        }
        const auto r8 = rest % 8;
        if (r8 == 0 || r8 == 1 || r8 == 4) {
            primitive = false;
        }
    }
    out.f_ = best;
    out.d0_ = d / (best * best);
    out.primitive_12_ = primitive;

    std::int64_t f_odd = best;
    int s = 0;
    while (f_odd % 2 == 0) {
        f_odd /= 2;
        ++s;
    }
    out.s_ = s;
    out.f_odd_ = f_odd;
    return out;
}

} // namespace prymsv
