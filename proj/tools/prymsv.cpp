// Command-line front end: range sweeps, identity certification, table export
// and Monte Carlo runs.

#include <prymsv/cli.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

namespace
{

using prymsv::cli::Command;
using prymsv::cli::Format;
using prymsv::cli::RunConfig;

struct Options {
    RunConfig cfg;
    std::optional<std::int64_t> single_d;
};

void add_range(CLI::App *sub, Options &opts)
{
    sub->add_option("--min", opts.cfg.d_min, "Smallest discriminant D");
    sub->add_option("--max", opts.cfg.d_max, "Largest discriminant D");
}

void add_single(CLI::App *sub, Options &opts)
{
    sub->add_option("--d", opts.single_d, "Single discriminant (sets --min and --max)");
}

void add_output(CLI::App *sub, Options &opts)
{
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
    sub->add_option("--format", opts.cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", opts.cfg.output_path, "Write the table to PATH instead of stdout");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Euler characteristics, q-expansion identities and Siegel-Veech constants of Prym eigenform loci"};
    app.require_subcommand(1);
    Options opts;

    auto *sv_table = app.add_subcommand("sv-table", "Siegel-Veech constants and Euler characteristics per D");
    add_range(sv_table, opts);
    add_output(sv_table, opts);
    sv_table->add_flag("--decimal", opts.cfg.decimal, "Add 12-digit decimal columns for c1, c2, c3");
    sv_table->add_option("--threads", opts.cfg.threads, "Sweep worker threads");

    auto *check = app.add_subcommand("check-constants", "Compare the sweep against the Prym-locus constants");
    add_range(check, opts);
    add_output(check, opts);
    check->add_option("--threads", opts.cfg.threads, "Sweep worker threads");

    auto *verify = app.add_subcommand("qseries-verify", "Certify the weight 5/2 q-expansion identities");
    verify->add_option("--order", opts.cfg.series_order, "Truncation order N");
    add_output(verify, opts);

    auto *coeffs = app.add_subcommand("qseries-coeffs", "Dump q-expansion coefficients");
    coeffs->add_option("--order", opts.cfg.series_order, "Truncation order N");
    coeffs->add_option("--form", opts.cfg.form, "Form to expand")
        ->check(CLI::IsMember({"f1", "f2", "f4", "f8", "g", "h", "g1", "g2", "theta", "theta2"}));
    add_output(coeffs, opts);

    auto *identities = app.add_subcommand("identities", "Check the divisor-sum identities over a range of D");
    add_range(identities, opts);
    add_output(identities, opts);

    auto *prototypes = app.add_subcommand("prototypes", "List prototypes for one D or count them over a range");
    add_range(prototypes, opts);
    add_single(prototypes, opts);
    add_output(prototypes, opts);
    prototypes->add_flag("--unrestricted", opts.cfg.unrestricted, "List P~_D (no gcd condition)");
    prototypes->add_flag("--torus", opts.cfg.torus, "List product-of-tori prototypes (e ell m)");

    auto *euler = app.add_subcommand("euler", "Euler characteristic table for one D or a range");
    add_range(euler, opts);
    add_single(euler, opts);
    add_output(euler, opts);

    auto *mc = app.add_subcommand("appendix-mc", "Monte Carlo check of the cone-volume formula");
    mc->add_option("--r", opts.cfg.mc_r, "Complex dimension of the first factor");
    mc->add_option("--s", opts.cfg.mc_s, "Complex dimension of the second factor");
    mc->add_option("--a", opts.cfg.mc_a, "Weight of the first area function (rational)");
    mc->add_option("--b", opts.cfg.mc_b, "Weight of the second area function (rational)");
    mc->add_option("--samples", opts.cfg.mc_samples, "Number of samples");
    mc->add_option("--seed", opts.cfg.mc_seed, "RNG seed");
    add_output(mc, opts);

    CLI11_PARSE(app, argc, argv);

    const std::map<CLI::App *, Command> commands{
        {sv_table, Command::SvTable},     {check, Command::CheckConstants}, {verify, Command::QSeriesVerify},
        {coeffs, Command::QSeriesCoeffs}, {identities, Command::Identities}, {prototypes, Command::Prototypes},
        {euler, Command::Euler},          {mc, Command::AppendixMc},
    };
    for (const auto &[sub, command] : commands) {
        if (sub->parsed()) {
            opts.cfg.command = command;
        }
    }
    if (opts.single_d) {
        opts.cfg.d_min = opts.cfg.d_max = *opts.single_d;
    }

    if (!opts.cfg.output_path) {
        return prymsv::cli::run(opts.cfg, std::cout, std::cerr);
    }
    std::ofstream file(*opts.cfg.output_path);
    if (!file) {
        std::cerr << "error: cannot open " << *opts.cfg.output_path << " for writing\n";
        return prymsv::cli::IoFailure;
    }
    const int code = prymsv::cli::run(opts.cfg, file, std::cerr);
    file.close();
    if (!file) {
        std::cerr << "error: failed writing " << *opts.cfg.output_path << '\n';
        return prymsv::cli::IoFailure;
    }
    return code;
}
