#include <prymsv/arith.hpp>
#include <prymsv/cli.hpp>
#include <prymsv/error.hpp>
#include <prymsv/hilbert.hpp>
#include <prymsv/prototypes.hpp>
#include <prymsv/qseries.hpp>
#include <prymsv/siegel_veech.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace prymsv::cli
{

namespace
{

using Cell = std::optional<std::string>;

// A table with string cells; an empty optional renders as an empty CSV cell
// or a JSON null. Rationals are always rendered as "p/q" strings.
class Table
{
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<Cell> row)
    {
        rows_.push_back(std::move(row));
    }

    void write(std::ostream &out, Format format) const
    {
        if (format == Format::Csv) {
            write_csv_row(out, header_);
            for (const auto &row : rows_) {
                std::vector<std::string> cells;
                for (const auto &c : row) {
                    cells.push_back(c.value_or(""));
                }
                write_csv_row(out, cells);
            }
            return;
        }
        auto doc = nlohmann::ordered_json::array();
        for (const auto &row : rows_) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < header_.size(); ++i) {
                if (row[i]) {
                    obj[header_[i]] = *row[i];
                } else {
                    obj[header_[i]] = nullptr;
                }
            }
            doc.push_back(std::move(obj));
        }
        out << doc.dump(2) << '\n';
    }

private:
    static void write_csv_row(std::ostream &out, const std::vector<std::string> &cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "," : "") << cells[i];
        }
        out << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

Cell cell(const Rational &r)
{
    return r.to_string();
}

Cell cell(const std::optional<Rational> &r)
{
    return r ? Cell(r->to_string()) : std::nullopt;
}

Cell cell(const std::optional<int> &v)
{
    return v ? Cell(std::to_string(*v)) : std::nullopt;
}

Cell cell(std::int64_t v)
{
    return std::to_string(v);
}

Cell cell(bool v)
{
    return std::string(v ? "true" : "false");
}

std::vector<std::string> euler_header()
{
    return {"D",     "chi_X",  "chi_X_prime", "chi_P",  "chi_P_prime", "chi_Q",
            "chi_Q_prime", "chi_W2", "chi_W4",      "chi_W0cubed", "b_D"};
}

std::vector<Cell> euler_cells(const EulerCharacteristics &t)
{
    return {cell(t.disc.value()), cell(t.chi_X),       cell(t.chi_X_prime), cell(t.chi_P),
            cell(t.chi_P_prime),  cell(t.chi_Q),       cell(t.chi_Q_prime), cell(t.chi_W2),
            cell(t.chi_W4),       cell(t.chi_W0cubed), cell(t.b_D)};
}

std::string format_double(double x)
{
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

} // namespace

void validate(const RunConfig &cfg)
{
    if (cfg.d_min < 1 || cfg.d_max < 1) {
        throw Error(ErrorKind::InvalidArgument, "--min and --max must be positive");
    }
    if (cfg.d_min > cfg.d_max) {
        throw Error(ErrorKind::InvalidArgument, "--min must not exceed --max");
    }
    if (cfg.series_order < 1) {
        throw Error(ErrorKind::InvalidArgument, "--order must be >= 1");
    }
    if (cfg.mc_samples < 10000) {
        throw Error(ErrorKind::InvalidArgument, "--samples must be >= 10000");
    }
}

int cmd_sv_table(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const auto report = sweep_constancy(cfg.d_min, cfg.d_max, cfg.threads);
    auto header = euler_header();
    for (const char *name : {"c1", "c2", "c3", "matches"}) {
        header.emplace_back(name);
    }
    if (cfg.decimal) {
        for (const char *name : {"c1_approx", "c2_approx", "c3_approx"}) {
            header.emplace_back(name);
        }
    }
    Table table(header);
    for (const auto &row : report.rows) {
        auto cells = euler_cells(row.constants.inputs);
        const auto &c = row.constants;
        cells.push_back(cell(c.c1));
        cells.push_back(cell(c.c2));
        cells.push_back(cell(c.c3));
        cells.push_back(cell(row.matches));
        if (cfg.decimal) {
            cells.push_back(c.c1.to_decimal(12));
            cells.push_back(c.c2.to_decimal(12));
            cells.push_back(c.c3.to_decimal(12));
        }
        table.add(std::move(cells));
    }
    table.write(out, cfg.format);
    const auto deviations = report.deviations();
    if (!deviations.empty()) {
        err << "constancy violated at " << deviations.size() << " discriminant(s); first D = " << deviations.front()
            << '\n';
        return Violation;
    }
    return Ok;
}

int cmd_check_constants(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const auto appendix = appendix_sv_constants();
    const auto expected = expected_sv_triple();
    const auto report = sweep_constancy(cfg.d_min, cfg.d_max, cfg.threads);

    Table table({"k", "appendix", "expected", "sweep_rows", "sweep_agrees"});
    bool ok = true;
    for (std::size_t k = 0; k < 3; ++k) {
        bool agrees = true;
        for (const auto &row : report.rows) {
            const Rational *values[] = {&row.constants.c1, &row.constants.c2, &row.constants.c3};
            agrees = agrees && *values[k] == appendix[k];
        }
        ok = ok && agrees && appendix[k] == expected[k];
        table.add({cell(static_cast<std::int64_t>(k + 1)), cell(appendix[k]), cell(expected[k]),
                   cell(static_cast<std::int64_t>(report.rows.size())), cell(agrees)});
    }
    table.write(out, cfg.format);
    if (!ok) {
        err << "Siegel-Veech constants disagree with the Prym-locus values\n";
        return Violation;
    }
    return Ok;
}

int cmd_qseries_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const auto report = certify_identities(cfg.series_order);
    Table table({"check", "checked_through", "status", "first_failure"});
    for (const auto &check : report.checks) {
        table.add({check.name, cell(check.checked_through), std::string(check.passed() ? "ok" : "FAIL"),
                   check.first_failure ? cell(*check.first_failure) : std::nullopt});
    }
    table.write(out, cfg.format);
    if (const auto failure = report.first_failure()) {
        err << "identity " << failure->name << " fails first at q^" << *failure->first_failure << '\n';
        return Violation;
    }
    return Ok;
}

int cmd_qseries_coeffs(const RunConfig &cfg, std::ostream &out, std::ostream &)
{
    const auto series = build_form(cfg.form, cfg.series_order);
    Table table({"n", "coeff"});
    for (std::int64_t n = 0; n <= series.order(); ++n) {
        table.add({cell(n), cell(series[n])});
    }
    table.write(out, cfg.format);
    return Ok;
}

int cmd_identities(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const DivisorSumTable table(std::max<std::int64_t>(cfg.d_max / 4, 1));
    std::int64_t applicable = 0;
    std::vector<std::int64_t> failures;
    for (std::int64_t d = cfg.d_min; d <= cfg.d_max; ++d) {
        if (!sigma_identity_applies(d)) {
            continue;
        }
        ++applicable;
        if (!verify_sigma_identity(classify_discriminant(d), table)) {
            failures.push_back(d);
        }
    }
    Table summary({"min", "max", "applicable", "failures", "first_failure"});
    summary.add({cell(cfg.d_min), cell(cfg.d_max), cell(applicable), cell(static_cast<std::int64_t>(failures.size())),
                 failures.empty() ? std::nullopt : cell(failures.front())});
    summary.write(out, cfg.format);
    if (!failures.empty()) {
        err << "divisor-sum identity fails for D = " << failures.front() << '\n';
        return Violation;
    }
    return Ok;
}

int cmd_prototypes(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    if (cfg.d_min == cfg.d_max) {
        const std::int64_t d = cfg.d_min;
        if (cfg.torus) {
            for (const auto &p : enumerate_torus_products(d)) {
                out << p.e << ' ' << p.ell << ' ' << p.m << '\n';
            }
            return Ok;
        }
        for (const auto &p : enumerate_P(d, !cfg.unrestricted)) {
            out << p.a << ' ' << p.b << ' ' << p.d << ' ' << p.e << '\n';
        }
        return Ok;
    }

    Table table({"D", "P", "P_tilde", "P_tilde_sigma", "torus", "chi_Q_prime", "consistent"});
    bool ok = true;
    for (std::int64_t d = std::max<std::int64_t>(cfg.d_min, 10); d <= cfg.d_max; ++d) {
        if (!sv_applicable(d)) {
            continue;
        }
        const auto restricted = count_P(d, true);
        const auto unrestricted = count_P(d, false);
        const auto by_sigma = count_P_tilde_by_sigma(d);
        const auto torus = static_cast<std::int64_t>(enumerate_torus_products(d).size());
        const auto chi_q_prime = Rational(-static_cast<long>(restricted), 6L);
        const auto expected = full_table(classify_discriminant(d)).chi_W0cubed;
        const bool consistent = unrestricted == by_sigma && expected && *expected == chi_q_prime;
        ok = ok && consistent;
        table.add({cell(d), cell(restricted), cell(unrestricted), cell(by_sigma), cell(torus), cell(chi_q_prime),
                   cell(consistent)});
    }
    table.write(out, cfg.format);
    if (!ok) {
        err << "prototype counts disagree with the Euler characteristic formulas\n";
        return Violation;
    }
    return Ok;
}

int cmd_euler(const RunConfig &cfg, std::ostream &out, std::ostream &)
{
    Table table(euler_header());
    if (cfg.d_min == cfg.d_max) {
        // A single D reports its exclusion reason through the thrown error.
        table.add(euler_cells(full_table(classify_discriminant(cfg.d_min))));
    } else {
        for (std::int64_t d = std::max<std::int64_t>(cfg.d_min, 10); d <= cfg.d_max; ++d) {
            if (is_discriminant(d) && !is_perfect_square(d)) {
                table.add(euler_cells(full_table(classify_discriminant(d))));
            }
        }
    }
    table.write(out, cfg.format);
    return Ok;
}

int cmd_appendix_mc(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const auto a = Rational::parse(cfg.mc_a);
    const auto b = Rational::parse(cfg.mc_b);
    const auto target = cone_volume_closed(cfg.mc_r, cfg.mc_s, a, b, ball_volume(cfg.mc_r), ball_volume(cfg.mc_s));
    const auto mc = cone_volume_mc(cfg.mc_r, cfg.mc_s, a.to_double(), b.to_double(), cfg.mc_samples, cfg.mc_seed);
    const double z = (mc.estimate - target.to_double()) / mc.stderr_;

    Table table({"estimate", "stderr", "z_score", "target", "target_exact"});
    table.add({format_double(mc.estimate), format_double(mc.stderr_), format_double(z),
               format_double(target.to_double()), target.to_string()});
    table.write(out, cfg.format);
    if (!(std::abs(z) <= 4.0)) {
        err << "Monte Carlo estimate is " << z << " standard errors from the closed form\n";
        return Violation;
    }
    return Ok;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    try {
        validate(cfg);
        switch (cfg.command) {
            case Command::SvTable:
                return cmd_sv_table(cfg, out, err);
            case Command::CheckConstants:
                return cmd_check_constants(cfg, out, err);
            case Command::QSeriesVerify:
                return cmd_qseries_verify(cfg, out, err);
            case Command::QSeriesCoeffs:
                return cmd_qseries_coeffs(cfg, out, err);
            case Command::Identities:
                return cmd_identities(cfg, out, err);
            case Command::Prototypes:
                return cmd_prototypes(cfg, out, err);
            case Command::Euler:
                return cmd_euler(cfg, out, err);
            case Command::AppendixMc:
                return cmd_appendix_mc(cfg, out, err);
        }
    } catch (const Error &e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return BadInput;
    }
    return BadInput;
}

} // namespace prymsv::cli
