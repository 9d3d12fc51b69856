#include <prymsv/error.hpp>
#include <prymsv/siegel_veech.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace prymsv
{

PiPowerValue::PiPowerValue(Rational coefficient, int pi_exponent)
    : coefficient_(std::move(coefficient)), exponent_(pi_exponent)
{
    if (pi_exponent < 0) {
        throw Error(ErrorKind::InvalidArgument, "pi exponent must be >= 0");
    }
}

double PiPowerValue::to_double() const
{
    return coefficient_.to_double() * std::pow(std::numbers::pi, exponent_);
}

std::string PiPowerValue::to_string() const
{
    if (exponent_ == 0) {
        return coefficient_.to_string();
    }
    std::string out = coefficient_.to_string() + "*pi";
    if (exponent_ > 1) {
        out += "^" + std::to_string(exponent_);
    }
    return out;
}

Rational PiPowerValue::as_rational() const
{
    if (exponent_ != 0 && !coefficient_.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "value " + to_string() + " is not rational");
    }
    return coefficient_;
}

PiPowerValue &PiPowerValue::operator+=(const PiPowerValue &other)
{
    if (exponent_ != other.exponent_) {
        throw Error(ErrorKind::InvalidArgument, "cannot add " + to_string() + " and " + other.to_string());
    }
    coefficient_ += other.coefficient_;
    return *this;
}

PiPowerValue &PiPowerValue::operator*=(const PiPowerValue &other)
{
    coefficient_ *= other.coefficient_;
    exponent_ += other.exponent_;
    return *this;
}

PiPowerValue &PiPowerValue::operator/=(const PiPowerValue &other)
{
    if (other.exponent_ > exponent_) {
        throw Error(ErrorKind::InvalidArgument, "quotient " + to_string() + " / " + other.to_string() +
                                                    " has a negative power of pi");
    }
    coefficient_ /= other.coefficient_;
    exponent_ -= other.exponent_;
    return *this;
}

PiPowerValue ball_volume(int r)
{
    if (r < 1) {
        throw Error(ErrorKind::InvalidArgument, "ball_volume: r must be >= 1");
    }
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(r));
    return PiPowerValue(Rational(mpz_class(1), factorial), r);
}

std::array<Rational, 3> expected_sv_triple()
{
    return {Rational(25L, 9L), Rational(3), Rational(2L, 9L)};
}

bool sv_applicable(std::int64_t d) noexcept
{
    const auto r = d % 8;
    return d > 9 && (r == 0 || r == 1 || r == 4) && !is_perfect_square(d);
}

SVConstants sv_constants_from(const EulerCharacteristics &table, const Rational &chi_W2_quarter)
{
    if (!table.chi_W4 || !table.chi_W0cubed) {
        throw Error(ErrorKind::EmptyLocus, "the (2,2)^odd eigenform locus is empty for D = " +
                                               std::to_string(table.disc.value()));
    }
    const Rational &w2 = table.chi_W2;
    const Rational &w4 = *table.chi_W4;
    const Rational &w0 = *table.chi_W0cubed;

    SVConstants out{table.disc, {}, {}, {}, table, {}};
    if (table.disc.value() % 4 == 0) {
        Rational w2_combined = w2;
        if (*table.b_D != 0) {
            w2_combined += Rational(*table.b_D) * chi_W2_quarter;
        }
        out.denominator = w2_combined + Rational(9) * w0;
        out.c1 = Rational(15) * w4 / out.denominator;
        out.c2 = Rational(9) * w2_combined / out.denominator;
        out.c3 = Rational(3) * w0 / out.denominator;
    } else {
        out.denominator = Rational(2) * w2 + Rational(9) * w0;
        out.c1 = Rational(15) * w4 / out.denominator;
        out.c2 = Rational(18) * w2 / out.denominator;
        out.c3 = Rational(3) * w0 / out.denominator;
    }
    return out;
}

SVConstants sv_constants(const Discriminant &d)
{
    if (d.value() <= 9) {
        throw Error(ErrorKind::OutOfRange, "Siegel-Veech constants need D > 9, got " + std::to_string(d.value()));
    }
    if (d.is_square()) {
        throw Error(ErrorKind::SquareDiscriminant, "D = " + std::to_string(d.value()) + " is a square");
    }
    if (d.residue_mod_8() == 5) {
        throw Error(ErrorKind::EmptyLocus,
                    "the (2,2)^odd eigenform locus is empty for D = 5 mod 8 (D = " + std::to_string(d.value()) + ")");
    }
    const auto table = full_table(d);
    Rational w2_quarter;
    if (table.b_D && *table.b_D != 0) {
        w2_quarter = Rational(-9L, 2L) * chi_X(classify_discriminant(d.value() / 4));
    }
    return sv_constants_from(table, w2_quarter);
}

std::vector<std::int64_t> SweepReport::deviations() const
{
    std::vector<std::int64_t> out;
    for (const auto &row : rows) {
        if (!row.matches) {
            out.push_back(row.d);
        }
    }
    return out;
}

SweepReport sweep_constancy(std::int64_t min_d, std::int64_t max_d, unsigned threads)
{
    if (min_d > max_d) {
        throw Error(ErrorKind::InvalidArgument, "sweep range is empty: min > max");
    }
    SweepReport report{min_d, max_d, {}};
    std::vector<std::int64_t> ds;
    for (std::int64_t d = std::max<std::int64_t>(min_d, 10); d <= max_d; ++d) {
        if (sv_applicable(d)) {
            ds.push_back(d);
        }
    }
    report.rows.resize(ds.size());
    const auto expected = expected_sv_triple();
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < ds.size(); i += stride) {
            auto constants = sv_constants(classify_discriminant(ds[i]));
            const bool matches =
                constants.c1 == expected[0] && constants.c2 == expected[1] && constants.c3 == expected[2];
            report.rows[i] = SweepRow{ds[i], std::move(constants), matches};
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0, 1);
        return report;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t, threads);
    }
    for (auto &th : pool) {
        th.join();
    }
    return report;
}

const std::vector<VolumeConstant> &appendix_constants()
{
    static const std::vector<VolumeConstant> constants = {
        {"vol1_Q(4,-1^4)_labelled", PiPowerValue(Rational(2), 4), "vol_1(Q_1(4,-1)^4) = 2 pi^4"},
        {"labels_Q(4,-1^4)", PiPowerValue(Rational(24), 0), "preimages of the 4 poles unnumbered: 4!"},
        {"vol1_Q(3,-1^3)_labelled", PiPowerValue(Rational(5L, 9L), 4), "vol'_1 = 5 pi^4 / (9 * 3!)"},
        {"labels_Q(3,-1^3)", PiPowerValue(Rational(6), 0), "numbering of zeros and poles: 3!"},
        {"vol1_M2(2)*", PiPowerValue(Rational(1L, 6L), 4), "4 * 5 * vol_1(Q_1(1,-1^5)) / 5! = pi^4 / 6"},
        {"mu1_M1(0)", PiPowerValue(Rational(1L, 3L), 2), "mu_1(Omega_1 M_1(0)) = pi^2 / 3"},
        {"dim_M1(0)", PiPowerValue(Rational(4), 0), "mu_1 = 4 mu(area <= 1)"},
        {"dim_Prym(0^3)", PiPowerValue(Rational(8), 0), "vol*_1 = 8 vol*(area <= 1)"},
        {"dvol'/dvol*", PiPowerValue(Rational(16), 0), "dvol' = 2^4 dvol*"},
        {"alpha_1", PiPowerValue(Rational(5), 0), "k = 1: alpha = 5"},
        {"alpha_2", PiPowerValue(Rational(3), 0), "k = 2: alpha = 3"},
        {"alpha_3", PiPowerValue(Rational(1), 0), "k = 3: alpha = 1"},
    };
    return constants;
}

namespace
{

const PiPowerValue &constant(std::string_view name)
{
    for (const auto &c : appendix_constants()) {
        if (c.name == name) {
            return c.value;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown appendix constant " + std::string(name));
}

} // namespace

AppendixBreakdown appendix_breakdown()
{
    AppendixBreakdown out;
    out.denominator = constant("vol1_Q(4,-1^4)_labelled") / constant("labels_Q(4,-1^4)");

    out.numerators[0] = constant("vol1_Q(3,-1^3)_labelled") / constant("labels_Q(3,-1^3)");
    out.numerators[1] = constant("vol1_M2(2)*");

    // Two tori of areas A0 and 2 A1: a cone product with a = 1, b = 2.
    const PiPowerValue torus_unit = constant("mu1_M1(0)") / constant("dim_M1(0)");
    const PiPowerValue cone =
        cone_volume_closed(2, 2, Rational(1), Rational(2), torus_unit, torus_unit);
    out.numerators[2] = constant("dvol'/dvol*") * constant("dim_Prym(0^3)") * cone;

    const Rational half(1L, 2L);
    for (std::size_t k = 0; k < 3; ++k) {
        out.alpha[k] = constant("alpha_" + std::to_string(k + 1)).as_rational();
        out.constants[k] = half * out.alpha[k] * (out.numerators[k] / out.denominator).as_rational();
    }
    return out;
}

std::array<Rational, 3> appendix_sv_constants()
{
    return appendix_breakdown().constants;
}

PiPowerValue cone_volume_closed(int r, int s, const Rational &a, const Rational &b, const PiPowerValue &mu_a,
                                const PiPowerValue &nu_b)
{
    if (r < 1 || s < 1) {
        throw Error(ErrorKind::InvalidArgument, "cone dimensions must be >= 1");
    }
    if (a.sign() <= 0 || b.sign() <= 0) {
        throw Error(ErrorKind::InvalidArgument, "cone weights a, b must be positive");
    }
    mpz_class fr, fs, frs;
    mpz_fac_ui(fr.get_mpz_t(), static_cast<unsigned long>(r));
    mpz_fac_ui(fs.get_mpz_t(), static_cast<unsigned long>(s));
    mpz_fac_ui(frs.get_mpz_t(), static_cast<unsigned long>(r + s));
    Rational weight(mpz_class(fr * fs), frs);
    Rational a_pow(1), b_pow(1);
    for (int i = 0; i < r; ++i) {
        a_pow *= a;
    }
    for (int i = 0; i < s; ++i) {
        b_pow *= b;
    }
    return (weight / (a_pow * b_pow)) * (mu_a * nu_b);
}

MonteCarloEstimate cone_volume_mc(int r, int s, double a, double b, std::int64_t samples, std::uint64_t seed)
{
    if (samples < 10000) {
        throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs at least 10^4 samples");
    }
    if (r < 1 || s < 1) {
        throw Error(ErrorKind::InvalidArgument, "cone dimensions must be >= 1");
    }
    if (!(a >= 1.0) || !(b >= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "bounding-box sampling requires a, b >= 1");
    }
    const int dim_v = 2 * r;
    const int dim = 2 * r + 2 * s;
    std::mt19937_64 engine(seed);
    // 53 random bits mapped to [-1, 1); independent of the standard library's
    // distribution implementation.
    auto coordinate = [&engine]() { return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0; };

    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        double h = 0.0, g = 0.0;
        for (int k = 0; k < dim_v; ++k) {
            const double x = coordinate();
            h += x * x;
        }
        for (int k = dim_v; k < dim; ++k) {
            const double x = coordinate();
            g += x * x;
        }
        const double level = a * h + b * g;
        if (level > 0.0 && level < 1.0 && h < 1.0 && g < 1.0) {
            ++hits;
        }
    }
    const double box = std::ldexp(1.0, dim);
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    return MonteCarloEstimate{box * p, box * std::sqrt(p * (1.0 - p) / n)};
}

} // namespace prymsv
