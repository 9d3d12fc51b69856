#ifndef PRYMSV_SIEGEL_VEECH_HPP
#define PRYMSV_SIEGEL_VEECH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <prymsv/hilbert.hpp>
#include <prymsv/rational.hpp>

namespace prymsv
{

/// coefficient * pi^exponent, exactly.
class PiPowerValue
{
public:
    PiPowerValue() = default;
    PiPowerValue(Rational coefficient, int pi_exponent);

    const Rational &coefficient() const noexcept
    {
        return coefficient_;
    }
    int pi_exponent() const noexcept
    {
        return exponent_;
    }

    double to_double() const;
    std::string to_string() const;

    /// Rational value of a pi^0 quantity; throws otherwise.
    Rational as_rational() const;

    // Sums need equal exponents; quotients need a non-negative exponent difference.
    PiPowerValue &operator+=(const PiPowerValue &other);
    PiPowerValue &operator*=(const PiPowerValue &other);
    PiPowerValue &operator/=(const PiPowerValue &other);

    friend PiPowerValue operator+(PiPowerValue lhs, const PiPowerValue &rhs)
    {
        return lhs += rhs;
    }
    friend PiPowerValue operator*(PiPowerValue lhs, const PiPowerValue &rhs)
    {
        return lhs *= rhs;
    }
    friend PiPowerValue operator/(PiPowerValue lhs, const PiPowerValue &rhs)
    {
        return lhs /= rhs;
    }
    friend PiPowerValue operator*(const Rational &r, PiPowerValue v)
    {
        v.coefficient_ *= r;
        return v;
    }

    friend bool operator==(const PiPowerValue &, const PiPowerValue &) = default;

private:
    Rational coefficient_;
    int exponent_ = 0;
};

/// Volume of the unit ball in real dimension 2r: pi^r / r!.
PiPowerValue ball_volume(int r);

struct SVConstants {
    Discriminant disc;
    Rational c1;
    Rational c2;
    Rational c3;
    EulerCharacteristics inputs;
    /// Shared denominator of the three formulas.
    Rational denominator;
};

/// Expected values of (c1, c2, c3).
std::array<Rational, 3> expected_sv_triple();

/// Evaluates the branch formulas (4 | D, or D = 1 mod 8) on the Euler
/// characteristics of full_table(D).
SVConstants sv_constants(const Discriminant &d);

/// Same formulas on caller-supplied Euler characteristics (for mutation
/// testing of the inputs). chi_W2_quarter is chi(W_{D/4}(2)) and is only
/// read when b_D != 0.
SVConstants sv_constants_from(const EulerCharacteristics &table, const Rational &chi_W2_quarter);

/// True for D > 9 non-square with D = 0, 1, 4 mod 8.
bool sv_applicable(std::int64_t d) noexcept;

struct SweepRow {
    std::int64_t d = 0;
    SVConstants constants;
    bool matches = false;
};

struct SweepReport {
    std::int64_t min_d = 0;
    std::int64_t max_d = 0;
    std::vector<SweepRow> rows;

    std::vector<std::int64_t> deviations() const;
    bool passed() const
    {
        return deviations().empty();
    }
};

/// sv_constants over every applicable D in [min_d, max_d]. Rows come back in
/// increasing D regardless of the worker count.
SweepReport sweep_constancy(std::int64_t min_d, std::int64_t max_d, unsigned threads = 1);

/// One named constant feeding the stratum-volume pipeline.
struct VolumeConstant {
    std::string_view name;
    PiPowerValue value;
    std::string_view source;
};

/// The cited stratum-volume inputs (labelled volumes, labelling divisors,
/// measure comparison factors and the values of alpha).
const std::vector<VolumeConstant> &appendix_constants();

struct AppendixBreakdown {
    PiPowerValue denominator;            // vol_1 of the Prym locus, pi^4/12
    std::array<PiPowerValue, 3> numerators; // vol'_1 of the boundary strata
    std::array<Rational, 3> alpha;
    std::array<Rational, 3> constants;
};

AppendixBreakdown appendix_breakdown();

/// (c~1, c~2, c~3) of the Prym locus from the stratum volumes.
std::array<Rational, 3> appendix_sv_constants();

/// Volume of {(v, w) in A x B : 0 < a h(v) + b g(w) < 1} for cones of complex
/// dimensions r and s with unit-level volumes mu_A and nu_B:
/// r! s! / (r+s)! * mu_A nu_B / (a^r b^s).
PiPowerValue cone_volume_closed(int r, int s, const Rational &a, const Rational &b, const PiPowerValue &mu_a,
                                const PiPowerValue &nu_b);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Rejection-sampling estimate of the cone volume for A, B the unit balls in
/// real dimension 2r, 2s and h, g squared Euclidean norms. Samples the box
/// [-1, 1]^(2r+2s); requires a, b >= 1 so that the region lies in the box.
/// Deterministic in (samples, seed).
MonteCarloEstimate cone_volume_mc(int r, int s, double a, double b, std::int64_t samples, std::uint64_t seed);

} // namespace prymsv

#endif
