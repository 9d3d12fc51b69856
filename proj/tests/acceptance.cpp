// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when everything holds).

#include <prymsv/arith.hpp>
#include <prymsv/error.hpp>
#include <prymsv/hilbert.hpp>
#include <prymsv/prototypes.hpp>
#include <prymsv/qseries.hpp>
#include <prymsv/siegel_veech.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace prymsv;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(const std::string &what)
{
    return {false, what};
}

Rational q(long p, long d = 1)
{
    return Rational(p, d);
}

bool nonsquare_discriminant(std::int64_t d)
{
    return is_discriminant(d) && !is_perfect_square(d);
}

// 1. SV constancy
Outcome sv_constancy()
{
    const auto report = sweep_constancy(10, 20000, 1);
    const auto bad = report.deviations();
    if (!bad.empty()) {
        return fail("first deviation at D=" + std::to_string(bad.front()));
    }
    return {true, std::to_string(report.rows.size()) + " discriminants in (9, 20000]"};
}

// 2. f1 - 5 f2 + 4 f4 = 0
Outcome f124_relation()
{
    const std::int64_t n = 10000;
    const auto combo = build_f(1, n) - q(5) * build_f(2, n) + q(4) * build_f(4, n);
    for (std::int64_t k = 0; k <= n; ++k) {
        if (!combo[k].is_zero()) {
            return fail("nonzero coefficient at q^" + std::to_string(k));
        }
    }
    return {true, "through q^10000"};
}

// 3. h = (2/5) g
Outcome h_two_fifths_g()
{
    for (std::int64_t k = 1; k <= 25; k += 8) {
        if (coeff_closed_form(8, k) != q(2, 5) * coeff_closed_form(4, k)) {
            return fail("a8 != (2/5) a4 at n=" + std::to_string(k));
        }
    }
    const std::int64_t n = 10000;
    const auto h = build_h(n);
    const auto g = build_g(n);
    for (std::int64_t k = 0; k <= n; ++k) {
        if (h[k] != q(2, 5) * g[k]) {
            return fail("h != (2/5) g at q^" + std::to_string(k));
        }
    }
    return {true, "through q^10000; checkpoint n = 1, 9, 17, 25"};
}

// 4. series coefficients vs closed forms
Outcome closed_form_duality()
{
    const std::int64_t n = 5000;
    const DivisorSumTable table(n);
    for (int m : {1, 2, 4, 8}) {
        const auto series = build_f(m, n);
        for (std::int64_t k = 0; k <= n; ++k) {
            if (series[k] != coeff_closed_form(m, k, table)) {
                return fail("a" + std::to_string(m) + "(" + std::to_string(k) + ") mismatch");
            }
        }
    }
    return {true, "f1, f2, f4, f8 for n <= 5000"};
}

// 5. divisor-sum identities
Outcome sigma_identities()
{
    const std::int64_t max_d = 100000;
    const DivisorSumTable table(max_d / 4);
    std::int64_t applicable = 0;
    for (std::int64_t d = 1; d <= max_d; ++d) {
        if (!sigma_identity_applies(d)) {
            continue;
        }
        ++applicable;
        if (!verify_sigma_identity(classify_discriminant(d), table)) {
            return fail("identity fails at D=" + std::to_string(d));
        }
    }
    return {true, std::to_string(applicable) + " applicable D <= 100000"};
}

// 6. chi(X_D) two routes
Outcome chi_two_routes()
{
    const std::pair<std::int64_t, Rational> spots[] = {{8, q(1, 6)}, {17, q(2, 3)}, {20, q(2, 3)}, {32, q(4, 3)}};
    for (const auto &[d, value] : spots) {
        if (chi_X(classify_discriminant(d)) != value) {
            return fail("spot value chi(X_" + std::to_string(d) + ")");
        }
    }
    SiegelSumRoute route;
    std::int64_t count = 0;
    for (std::int64_t d = 5; d <= 20000; ++d) {
        if (!nonsquare_discriminant(d)) {
            continue;
        }
        ++count;
        const auto disc = classify_discriminant(d);
        if (chi_X(disc) != route.chi_X(disc)) {
            return fail("routes disagree at D=" + std::to_string(d));
        }
    }
    return {true, std::to_string(count) + " discriminants; spot values 1/6, 2/3, 2/3, 4/3"};
}

// 7. prototype triangle and stratification
Outcome prototype_triangle()
{
    std::int64_t triangle = 0;
    for (std::int64_t d = 5; d <= 5000; ++d) {
        if (!nonsquare_discriminant(d)) {
            continue;
        }
        const auto disc = classify_discriminant(d);
        if (chi_Q_via_prototypes(d) != q(-5) * chi_X(disc)) {
            return fail("chi(Q) != -5 chi(X) at D=" + std::to_string(d));
        }
        if (d <= 9 || d % 8 == 5) {
            continue;
        }
        ++triangle;
        const auto t = full_table(disc);
        const auto by_count = chi_Q_prime_via_prototypes(d);
        if (by_count != q(2) * *t.chi_P_prime || by_count != *t.chi_W0cubed) {
            return fail("triangle breaks at D=" + std::to_string(d));
        }
    }
    std::int64_t strata = 0;
    for (std::int64_t d0 = 10; d0 <= 2000; ++d0) {
        if (!is_discriminant(d0) || !classify_discriminant(d0).is_12_primitive()) {
            continue;
        }
        const auto disc = classify_discriminant(d0);
        for (std::int64_t f = 1; f <= 6; ++f) {
            ++strata;
            if (!verify_gcd_stratification(disc, f)) {
                return fail("stratification fails at D0=" + std::to_string(d0) + ", f=" + std::to_string(f));
            }
        }
    }
    std::ostringstream msg;
    msg << triangle << " triangle D <= 5000; " << strata << " (D0, f) strata";
    return {true, msg.str()};
}

// 8. ratios and W2 combination
Outcome ratio_checks()
{
    std::int64_t count = 0;
    for (std::int64_t d = 12; d <= 20000; d += 4) {
        if (is_perfect_square(d) || !is_discriminant(d / 4)) {
            continue;
        }
        const auto disc = classify_discriminant(d);
        ++count;
        if (!verify_ratio_prop(disc)) {
            return fail("ratio fails at D=" + std::to_string(d));
        }
        if (!verify_w2_combination(disc)) {
            return fail("W2 combination fails at D=" + std::to_string(d));
        }
    }
    return {true, std::to_string(count) + " D <= 20000 with D/4 a discriminant"};
}

// 9. appendix
Outcome appendix_exact()
{
    const auto c = appendix_sv_constants();
    if (c != expected_sv_triple()) {
        return fail("appendix gives " + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string());
    }
    return {true, "(25/9, 3, 2/9)"};
}

// 10. Monte Carlo cone volume
Outcome monte_carlo()
{
    const auto exact = cone_volume_closed(2, 2, q(1), q(2), ball_volume(2), ball_volume(2));
    if (exact != PiPowerValue(q(1, 96), 4)) {
        return fail("closed form is " + exact.to_string());
    }
    const double target = std::pow(std::numbers::pi, 4) / 96;
    const auto est = cone_volume_mc(2, 2, 1.0, 2.0, 1000000, 20240917);
    const auto again = cone_volume_mc(2, 2, 1.0, 2.0, 1000000, 20240917);
    if (est.estimate != again.estimate || est.stderr_ != again.stderr_) {
        return fail("not deterministic under a fixed seed");
    }
    const double z = (est.estimate - target) / est.stderr_;
    char buf[160];
    std::snprintf(buf, sizeof buf, "estimate %.6f, target %.6f, z = %.3f", est.estimate, target, z);
    if (std::abs(z) > 4.0) {
        return fail(buf);
    }
    return {true, buf};
}

} // namespace

int main()
{
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"SV constants constant for 9 < D <= 20000", sv_constancy},
        {"f1 - 5 f2 + 4 f4 = 0 through q^10000", f124_relation},
        {"h = (2/5) g through q^10000", h_two_fifths_g},
        {"series vs closed-form coefficients, n <= 5000", closed_form_duality},
        {"divisor-sum identities, D <= 100000", sigma_identities},
        {"chi(X_D) by two routes, D <= 20000", chi_two_routes},
        {"prototype triangle and gcd stratification", prototype_triangle},
        {"ratio and W2 combination, D <= 20000", ratio_checks},
        {"appendix constants exact", appendix_exact},
        {"Monte Carlo cone volume within 4 sigma", monte_carlo},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const Error &e) {
            outcome = fail("error [" + std::string(to_string(e.kind())) + "] " + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d  %s: %s (%.2fs)\n", outcome.ok ? "PASS" : "FAIL", index, name, outcome.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failures += outcome.ok ? 0 : 1;
    }
    return failures;
}
