#include <doctest.h>

#include <prymsv/cli.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using namespace prymsv::cli;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const RunConfig &cfg)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

RunConfig config(Command c)
{
    RunConfig cfg;
    cfg.command = c;
    return cfg;
}

} // namespace

TEST_CASE("sv-table csv over [10, 100]")
{
    auto cfg = config(Command::SvTable);
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0].rfind("D,", 0) == 0);
    CHECK(rows[1].rfind("12,", 0) == 0);
    CHECK(rows[2].rfind("17,", 0) == 0);
    for (const auto &row : rows) {
        CHECK(row.rfind("16,", 0) != 0);
        CHECK(row.find("false") == std::string::npos);
    }
}

TEST_CASE("sv-table empty range and json")
{
    auto cfg = config(Command::SvTable);
    cfg.d_min = cfg.d_max = 10;
    const auto empty = invoke(cfg);
    CHECK(empty.code == Ok);
    CHECK(lines(empty.out).size() == 1);

    cfg.d_min = cfg.d_max = 17;
    cfg.format = Format::Json;
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["c1"] == "25/9");
    CHECK(doc[0]["c2"] == "3");
    CHECK(doc[0]["c3"] == "2/9");
    CHECK(doc[0]["b_D"].is_null());
}

TEST_CASE("sv-table decimal columns")
{
    auto cfg = config(Command::SvTable);
    cfg.d_min = cfg.d_max = 20;
    cfg.decimal = true;
    const auto r = invoke(cfg);
    CHECK(r.out.find("2.777777777778") != std::string::npos);
}

TEST_CASE("check-constants")
{
    auto cfg = config(Command::CheckConstants);
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    CHECK(r.out.find("25/9,25/9") != std::string::npos);
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("qseries-verify")
{
    auto cfg = config(Command::QSeriesVerify);
    CHECK(invoke(cfg).code == Ok);
    cfg.series_order = 1;
    CHECK(invoke(cfg).code == Ok);
    cfg.series_order = 0;
    CHECK(invoke(cfg).code == BadInput);
}

TEST_CASE("qseries-coeffs")
{
    auto cfg = config(Command::QSeriesCoeffs);
    cfg.series_order = 4;
    cfg.form = "theta";
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    CHECK(lines(r.out) == std::vector<std::string>{"n,coeff", "0,1", "1,2", "2,0", "3,0", "4,2"});
    cfg.form = "f3";
    CHECK(invoke(cfg).code == BadInput);
}

TEST_CASE("identities")
{
    auto cfg = config(Command::Identities);
    cfg.d_min = cfg.d_max = 12;
    CHECK(invoke(cfg).code == Ok);
    cfg.d_min = cfg.d_max = 13;
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    CHECK(lines(r.out).at(1).rfind("13,13,0,0", 0) == 0);
    cfg.d_min = 10;
    cfg.d_max = 3000;
    CHECK(invoke(cfg).code == Ok);
}

TEST_CASE("prototypes")
{
    auto cfg = config(Command::Prototypes);
    cfg.d_min = cfg.d_max = 17;
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    CHECK(lines(r.out).size() == 8);
    cfg.torus = true;
    CHECK(lines(invoke(cfg).out).size() == 6);
    cfg.torus = false;
    cfg.d_min = cfg.d_max = 7;
    const auto bad = invoke(cfg);
    CHECK(bad.code == BadInput);
    CHECK(bad.err.find("error") != std::string::npos);

    cfg.d_min = 10;
    cfg.d_max = 200;
    const auto range = invoke(cfg);
    CHECK(range.code == Ok);
    CHECK(range.out.find("false") == std::string::npos);
}

TEST_CASE("euler")
{
    auto cfg = config(Command::Euler);
    cfg.d_min = cfg.d_max = 20;
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "20,2/3,1,-5/3,-1/2,-10/3,-1,-3,-5/2,-1,5");
    cfg.d_min = cfg.d_max = 16;
    CHECK(invoke(cfg).code == BadInput);
}

TEST_CASE("appendix-mc")
{
    auto cfg = config(Command::AppendixMc);
    const auto r = invoke(cfg);
    CHECK(r.code == Ok);
    CHECK(r.out.find("1/96*pi^4") != std::string::npos);
    cfg.mc_samples = 10;
    CHECK(invoke(cfg).code == BadInput);
}

TEST_CASE("validation")
{
    auto cfg = config(Command::SvTable);
    cfg.d_min = 100;
    cfg.d_max = 10;
    const auto r = invoke(cfg);
    CHECK(r.code == BadInput);
    CHECK_FALSE(r.err.empty());
}
