#include <prymsv/error.hpp>
#include <prymsv/qseries.hpp>

#include <algorithm>
#include <string>

namespace prymsv
{

namespace
{

void check_order(std::int64_t order)
{
    if (order < 0) {
        throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
    }
}

void check_form_index(int m)
{
    if (m != 1 && m != 2 && m != 4 && m != 8) {
        throw Error(ErrorKind::InvalidArgument, "f_m is defined for m in {1, 2, 4, 8}, got " + std::to_string(m));
    }
}

// sigma_1 lookup with the modular-forms conventions, backed either by trial
// division or by a sieved table.
struct TrialSigma {
    Rational operator()(std::int64_t n) const
    {
        return sigma(1, n);
    }
};

struct TableSigma {
    const DivisorSumTable &table;
    Rational operator()(std::int64_t n) const
    {
        return table.at(n);
    }
};

// sum over e in Z with e^2 <= n and e^2 = n mod m of sigma_1((n - e^2)/m),
// plus the square correction 2 d^2 / m.
template <typename Sigma>
Rational closed_form(int m, std::int64_t n, const Sigma &sig)
{
    check_form_index(m);
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "coefficient index must be >= 0");
    }
    Rational acc;
    const std::int64_t root = isqrt(n);
    for (std::int64_t e = -root; e <= root; ++e) {
        const std::int64_t rest = n - e * e;
        if (rest % m != 0) {
            continue;
        }
        acc += sig(rest / m);
    }
    if (root * root == n && n > 0) {
        acc += Rational(2 * static_cast<long>(n), static_cast<long>(m));
    }
    return acc;
}

template <typename Sigma>
SigmaIdentitySides identity_sides(const Discriminant &disc, const Sigma &sig)
{
    const std::int64_t d = disc.value();
    if (disc.is_square()) {
        throw Error(ErrorKind::SquareDiscriminant, "divisor-sum identity needs a non-square D, got " +
                                                       std::to_string(d));
    }
    if (!(d % 4 == 0 || d % 8 == 1)) {
        throw Error(ErrorKind::NotApplicable,
                    "divisor-sum identity needs D = 0 mod 4 or D = 1 mod 8, got " + std::to_string(d));
    }
    const std::int64_t root = isqrt(d);
    SigmaIdentitySides out;
    if (d % 4 == 0) {
        Rational first, second;
        for (std::int64_t e = -root; e <= root; ++e) {
            const std::int64_t rest = d - e * e;
            if (rest % 8 == 0) {
                out.lhs += sig(rest / 8);
            }
            if (e % 2 == 0) {
                first += sig(rest / 4);
            }
        }
        const std::int64_t quarter = d / 4;
        const std::int64_t qroot = isqrt(quarter);
        for (std::int64_t e = -qroot; e <= qroot; ++e) {
            const std::int64_t rest = quarter - e * e;
            if (rest % 4 == 0) {
                second += sig(rest / 4);
            }
        }
        out.rhs = Rational(1L, 5L) * first + Rational(4L, 5L) * second;
    } else {
        Rational quarter_sum;
        for (std::int64_t e = -root; e <= root; ++e) {
            if (e % 2 == 0) {
                continue;
            }
            const std::int64_t rest = d - e * e;
            out.lhs += sig(rest / 8);
            quarter_sum += sig(rest / 4);
        }
        out.rhs = Rational(2L, 5L) * quarter_sum;
    }
    return out;
}

} // namespace

QSeries::QSeries(std::int64_t order)
{
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "QSeries needs at least the constant coefficient");
    }
}

const Rational &QSeries::operator[](std::int64_t n) const
{
    if (n < 0 || n > order()) {
        throw Error(ErrorKind::OutOfRange, "coefficient q^" + std::to_string(n) + " beyond series order " +
                                               std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

Rational &QSeries::operator[](std::int64_t n)
{
    return const_cast<Rational &>(static_cast<const QSeries &>(*this)[n]);
}

QSeries QSeries::truncated(std::int64_t order) const
{
    check_order(order);
    if (order > this->order()) {
        throw Error(ErrorKind::OutOfRange, "cannot extend a series beyond its known order");
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

QSeries series_add(const QSeries &a, const QSeries &b)
{
    const auto order = std::min(a.order(), b.order());
    QSeries out(order);
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = a[n] + b[n];
    }
    return out;
}

QSeries series_sub(const QSeries &a, const QSeries &b)
{
    const auto order = std::min(a.order(), b.order());
    QSeries out(order);
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = a[n] - b[n];
    }
    return out;
}

QSeries series_scale(const Rational &r, const QSeries &a)
{
    QSeries out(a.order());
    for (std::int64_t n = 0; n <= a.order(); ++n) {
        out[n] = r * a[n];
    }
    return out;
}

QSeries series_mul(const QSeries &a, const QSeries &b)
{
    const auto order = std::min(a.order(), b.order());
    // Convolve over the non-zero terms of the sparser factor; theta-like
    // series have only O(sqrt(N)) of them.
    auto support = [order](const QSeries &s) {
        std::vector<std::int64_t> idx;
        for (std::int64_t n = 0; n <= order; ++n) {
            if (!s[n].is_zero()) {
                idx.push_back(n);
            }
        }
        return idx;
    };
    auto sa = support(a);
    auto sb = support(b);
    const bool a_sparse = sa.size() <= sb.size();
    const QSeries &sparse = a_sparse ? a : b;
    const QSeries &dense = a_sparse ? b : a;
    const auto &idx = a_sparse ? sa : sb;

    QSeries out(order);
    mpq_class term;
    for (std::int64_t n = 0; n <= order; ++n) {
        mpq_class acc;
        for (auto i : idx) {
            if (i > n) {
                break;
            }
            const auto &d = dense[n - i];
            if (d.is_zero()) {
                continue;
            }
            mpq_mul(term.get_mpq_t(), sparse[i].raw().get_mpq_t(), d.raw().get_mpq_t());
            acc += term;
        }
        out[n] = Rational(acc.get_num(), acc.get_den());
    }
    return out;
}

QSeries dilate(const QSeries &a, std::int64_t m)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "dilation factor must be >= 1");
    }
    QSeries out(m * (a.order() + 1) - 1);
    for (std::int64_t n = 0; n <= a.order(); ++n) {
        out[n * m] = a[n];
    }
    return out;
}

QSeries build_g2(std::int64_t order)
{
    check_order(order);
    QSeries out(order);
    out[0] = Rational(-1L, 24L);
    for (std::int64_t n = 1; n <= order; ++n) {
        out[n] = Rational(static_cast<long>(sigma1_int(n)));
    }
    return out;
}

QSeries build_theta(std::int64_t order)
{
    check_order(order);
    QSeries out(order);
    out[0] = Rational(1);
    for (std::int64_t k = 1; k * k <= order; ++k) {
        out[k * k] = Rational(2);
    }
    return out;
}

QSeries build_theta2(std::int64_t order)
{
    check_order(order);
    QSeries out(order);
    for (std::int64_t k = 1; k * k <= order; ++k) {
        out[k * k] = Rational(2 * static_cast<long>(k * k));
    }
    return out;
}

QSeries build_f(int m, std::int64_t order)
{
    check_form_index(m);
    check_order(order);
    const auto g2 = dilate(build_g2(order / m), m).truncated(order);
    return g2 * build_theta(order) + Rational(1L, static_cast<long>(m)) * build_theta2(order);
}

Rational coeff_closed_form(int m, std::int64_t n)
{
    return closed_form(m, n, TrialSigma{});
}

Rational coeff_closed_form(int m, std::int64_t n, const DivisorSumTable &table)
{
    return closed_form(m, n, TableSigma{table});
}

QSeries build_g1(std::int64_t order)
{
    check_order(order);
    return build_f(4, order) - dilate(build_f(1, order / 4), 4).truncated(order);
}

QSeries twist_mod8(const QSeries &a)
{
    QSeries out(a.order());
    for (std::int64_t n = 0; n <= a.order(); ++n) {
        if (n % 8 == 1) {
            out[n] = a[n];
        } else if (n % 8 == 5) {
            out[n] = -a[n];
        }
    }
    return out;
}

QSeries build_g(std::int64_t order)
{
    const auto g1 = build_g1(order);
    return Rational(1L, 2L) * (g1 + twist_mod8(g1));
}

QSeries build_h(std::int64_t order)
{
    check_order(order);
    return build_f(8, order) - dilate(build_f(2, order / 4), 4).truncated(order);
}

QSeries build_form(const std::string &name, std::int64_t order)
{
    if (name == "f1") {
        return build_f(1, order);
    }
    if (name == "f2") {
        return build_f(2, order);
    }
    if (name == "f4") {
        return build_f(4, order);
    }
    if (name == "f8") {
        return build_f(8, order);
    }
    if (name == "g1") {
        return build_g1(order);
    }
    if (name == "g") {
        return build_g(order);
    }
    if (name == "h") {
        return build_h(order);
    }
    if (name == "g2") {
        return build_g2(order);
    }
    if (name == "theta") {
        return build_theta(order);
    }
    if (name == "theta2") {
        return build_theta2(order);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown form '" + name + "'");
}

bool IdentityReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.passed(); });
}

std::optional<IdentityCheck> IdentityReport::first_failure() const
{
    std::optional<IdentityCheck> worst;
    for (const auto &c : checks) {
        if (!c.passed() && (!worst || *c.first_failure < *worst->first_failure)) {
            worst = c;
        }
    }
    return worst;
}

IdentityReport certify_identities(std::int64_t order)
{
    if (order < 0) {
        throw Error(ErrorKind::InvalidArgument, "certification order must be >= 0");
    }
    IdentityReport report;
    report.order = order;

    const auto f1 = build_f(1, order);
    const auto f2 = build_f(2, order);
    const auto f4 = build_f(4, order);
    const auto f8 = build_f(8, order);

    auto scan = [&report](std::string name, std::int64_t from, std::int64_t through, auto &&holds) {
        IdentityCheck check{std::move(name), through, std::nullopt};
        for (std::int64_t n = from; n <= through; ++n) {
            if (!holds(n)) {
                check.first_failure = n;
                break;
            }
        }
        report.checks.push_back(std::move(check));
    };

    const auto relation = f1 - Rational(5) * f2 + Rational(4) * f4;
    scan("f1-5f2+4f4=0", 0, order, [&](std::int64_t n) { return relation[n].is_zero(); });

    scan("a1(n)=a4(4n)", 1, order / 4, [&](std::int64_t n) { return f1[n] == f4[4 * n]; });
    scan("a2(n)=a8(4n)", 0, order / 4, [&](std::int64_t n) { return f2[n] == f8[4 * n]; });

    // g1 and h reuse the forms built above instead of rebuilding them.
    const auto g1 = f4 - dilate(f1.truncated(order / 4), 4).truncated(order);
    const auto g = Rational(1L, 2L) * (g1 + twist_mod8(g1));
    const auto h = f8 - dilate(f2.truncated(order / 4), 4).truncated(order);

    scan("support(g1)", 0, order, [&](std::int64_t n) { return (n > 0 && n % 4 == 1) || g1[n].is_zero(); });
    scan("support(g)", 0, order, [&](std::int64_t n) { return (n > 0 && n % 8 == 1) || g[n].is_zero(); });
    scan("support(h)", 0, order, [&](std::int64_t n) { return (n > 0 && n % 8 == 1) || h[n].is_zero(); });

    const Rational two_fifths(2L, 5L);
    scan("h=(2/5)g", 0, order, [&](std::int64_t n) { return h[n] == two_fifths * g[n]; });

    const DivisorSumTable table(std::max<std::int64_t>(order, 1));
    const std::pair<int, const QSeries *> forms[] = {{1, &f1}, {2, &f2}, {4, &f4}, {8, &f8}};
    for (const auto &[m, series] : forms) {
        scan("a" + std::to_string(m) + "=closed_form", 0, order,
             [&, m = m, series = series](std::int64_t n) { return (*series)[n] == coeff_closed_form(m, n, table); });
    }
    return report;
}

bool sigma_identity_applies(std::int64_t d) noexcept
{
    return d >= 1 && (d % 4 == 0 || d % 8 == 1) && !is_perfect_square(d);
}

SigmaIdentitySides sigma_identity_sides(const Discriminant &d)
{
    return identity_sides(d, TrialSigma{});
}

SigmaIdentitySides sigma_identity_sides(const Discriminant &d, const DivisorSumTable &table)
{
    return identity_sides(d, TableSigma{table});
}

bool verify_sigma_identity(const Discriminant &d)
{
    const auto sides = sigma_identity_sides(d);
    return sides.lhs == sides.rhs;
}

bool verify_sigma_identity(const Discriminant &d, const DivisorSumTable &table)
{
    const auto sides = sigma_identity_sides(d, table);
    return sides.lhs == sides.rhs;
}

} // namespace prymsv
