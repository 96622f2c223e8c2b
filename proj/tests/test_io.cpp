#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "arbreak/error.hpp"
#include "arbreak/io.hpp"

using namespace arbreak;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "arbreak_test_io";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_error_line(std::string_view text) {
    try {
        (void)parse_series_csv(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    auto s = derive_substream(1, 2);
    for (int i = 0; i < 10000; ++i) {
        const double x = (s.uniform() - 0.5) * std::pow(10.0, static_cast<int>(s.uniform() * 40) - 20);
        CHECK(*parse_double(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    CHECK_FALSE(parse_double("1.0x").has_value());
    CHECK_FALSE(parse_double("").has_value());
    CHECK(*parse_double("1e-3") == 1e-3);
}

TEST_CASE("series CSV parsing") {
    const auto p = parse_series_csv("t,y\n0,1.0\n1,2.0\n2,4.0");
    CHECK(p.y0 == 1.0);
    CHECK(p.values == std::vector<double>{2.0, 4.0});
    CHECK(p.T() == 2);
    CHECK(p.spec.T == 2);
    CHECK(p.spec.label == CaseLabel::Custom);
    CHECK(parse_series_csv("t,y\r\n0,1\r\n1,2\r\n2,3\r\n").values.size() == 2);

    CHECK(parse_error_line("time,y\n0,1\n1,2\n2,3") == 1);
    CHECK(parse_error_line("t,y\n0,1\n2,2\n3,3") == 3);
    CHECK(parse_error_line("t,y\n0,1\n1,abc\n2,3") == 3);
    CHECK(parse_error_line("t,y\n0,1\n1,2,3\n2,3") == 3);
    CHECK(parse_error_line("t,y\n0,1") != -1);
    CHECK(parse_error_line("") == 1);
}

TEST_CASE("series CSV round trip") {
    SamplePath path;
    auto s = derive_substream(3, 0);
    path.y0 = s.normal();
    for (int i = 0; i < 1000; ++i) path.values.push_back(s.normal() * 1e3);
    const auto file = scratch("series.csv");
    write_series_csv(path, file);
    const auto back = read_series_csv(file);
    CHECK(back.y0 == path.y0);
    CHECK(back.values == path.values);
    CHECK(slurp(file).find('\r') == std::string::npos);
    CHECK_THROWS_AS((void)read_series_csv(scratch("missing.csv")), IoError);
}

TEST_CASE("sample CSV round trip") {
    const std::vector<double> v{0.1, -3.0, 1e-300, 2.5e10};
    const auto file = scratch("sample.csv");
    write_sample_csv(v, file);
    CHECK(slurp(file).rfind("value\n", 0) == 0);
    CHECK(read_sample_csv(file) == v);
}

TEST_CASE("report JSON") {
    const auto r = compare_report(EcdfSummary({1, 2, 3}), EcdfSummary({1, 3, 5}));
    const auto j = to_json(r);
    CHECK(j["ks"].get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(j["n_a"].get<int>() == 3);
    CHECK(j["quantiles"]["0.5"]["a"].get<double>() == 2.0);
    CHECK(j["quantiles"]["0.5"]["b"].get<double>() == 3.0);
    CHECK(j["quantiles"].size() == kReportProbabilities.size());
    const auto file = scratch("report.json");
    write_report_json(r, file);
    CHECK(nlohmann::json::parse(slurp(file))["ks"].get<double>() == j["ks"].get<double>());
}

TEST_CASE("spec JSON round trip") {
    for (const auto& spec : {make_case_one(200, 0.3, 0.75, 1.0, StudentT{3.0}, PaperY0{}),
                             make_case_two(500, 0.5, 0.0, 2.0, Gaussian{2.0}, ConstantY0{1.5}, 0.25)}) {
        const auto back = spec_from_json(spec_to_json(spec));
        CHECK(back.T == spec.T);
        CHECK(back.tau0 == spec.tau0);
        CHECK(back.label == spec.label);
        CHECK(effective_betas(back) == effective_betas(spec));
        CHECK(to_string(back.innovation) == to_string(spec.innovation));
        CHECK(back.is_shrinking() == spec.is_shrinking());
    }
    CHECK(std::holds_alternative<ConstantY0>(parse_initial_law("zero")));
    CHECK(std::get<ConstantY0>(parse_initial_law("-0.25")).value == -0.25);
    CHECK(std::holds_alternative<PaperY0>(std::get<InnovationLaw>(parse_initial_law("paper"))));
    CHECK_THROWS_AS((void)parse_initial_law("nonsense"), ConfigError);
}
