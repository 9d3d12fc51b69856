#ifndef PRYMSV_CLI_HPP
#define PRYMSV_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace prymsv::cli
{

enum class Command {
    SvTable,
    CheckConstants,
    QSeriesVerify,
    QSeriesCoeffs,
    Identities,
    Prototypes,
    Euler,
    AppendixMc,
};

enum class Format { Csv, Json };

enum ExitCode : int {
    Ok = 0,
    Violation = 1,
    BadInput = 2,
    IoFailure = 3,
};

struct RunConfig {
    Command command = Command::SvTable;
    std::int64_t d_min = 10;
    std::int64_t d_max = 100;
    std::int64_t series_order = 100;
    std::string form = "f1";
    std::int64_t mc_samples = 1000000;
    std::uint64_t mc_seed = 20240917;
    int mc_r = 2;
    int mc_s = 2;
    std::string mc_a = "1";
    std::string mc_b = "2";
    Format format = Format::Csv;
    std::optional<std::string> output_path;
    bool decimal = false;
    bool unrestricted = false;
    bool torus = false;
    unsigned threads = 1;
};

/// Throws prymsv::Error(InvalidArgument) when a RunConfig invariant is broken.
void validate(const RunConfig &cfg);

// Each command writes its table to `out`, diagnostics to `err`, and returns
// the process exit code.
int cmd_sv_table(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_check_constants(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_qseries_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_qseries_coeffs(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_identities(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_prototypes(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_euler(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_appendix_mc(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Validates cfg, runs the selected command and maps library errors to exit codes.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace prymsv::cli

#endif
