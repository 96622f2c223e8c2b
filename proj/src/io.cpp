#include "arbreak/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "arbreak/error.hpp"

namespace arbreak {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Splits on '\n', dropping a trailing '\r' from each line and a final empty line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw IoError("number formatting failed");
    return std::string(buf, end);
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

SamplePath parse_series_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]) != "t,y") throw ParseError("expected header 't,y'", 1);
    SamplePath series;
    std::vector<double> ys;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (trim(lines[i]).empty()) continue;
        const auto comma = lines[i].find(',');
        if (comma == std::string_view::npos) throw ParseError("expected two fields 't,y'", line_no);
        const auto t_text = trim(lines[i].substr(0, comma));
        long long t = -1;
        const auto [ptr, ec] = std::from_chars(t_text.data(), t_text.data() + t_text.size(), t);
        if (ec != std::errc{} || ptr != t_text.data() + t_text.size()) throw ParseError("t is not an integer", line_no);
        if (t != static_cast<long long>(ys.size()))
            throw ParseError("t must ascend by one from 0 (expected " + std::to_string(ys.size()) + ")", line_no);
        const auto y = parse_double(lines[i].substr(comma + 1));
        if (!y) throw ParseError("y is not a number", line_no);
        ys.push_back(*y);
    }
    if (ys.size() < 2) throw ParseError("series needs y0 and at least one observation", 0);
    series.y0 = ys.front();
    series.values.assign(ys.begin() + 1, ys.end());
    series.spec.T = static_cast<std::int64_t>(series.values.size());
    series.spec.label = CaseLabel::Custom;
    return series;
}

SamplePath read_series_csv(const std::filesystem::path& path) { return parse_series_csv(slurp(path)); }

void write_series_csv(const SamplePath& series, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << "t,y\n0," << format_double(series.y0) << '\n';
    for (std::size_t i = 0; i < series.values.size(); ++i)
        out << (i + 1) << ',' << format_double(series.values[i]) << '\n';
    finish(out, path);
}

void write_sample_csv(std::span<const double> values, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << "value\n";
    for (const double v : values) out << format_double(v) << '\n';
    finish(out, path);
}

std::vector<double> read_sample_csv(const std::filesystem::path& path) {
    const auto text = slurp(path);
    const auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]) != "value") throw ParseError("expected header 'value'", 1);
    std::vector<double> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto v = parse_double(lines[i]);
        if (!v) throw ParseError("value is not a number", i + 1);
        values.push_back(*v);
    }
    return values;
}

nlohmann::ordered_json to_json(const CompareReport& report) {
    nlohmann::ordered_json j;
    j["ks"] = report.ks;
    j["n_a"] = report.n_a;
    j["n_b"] = report.n_b;
    nlohmann::ordered_json q = nlohmann::ordered_json::object();
    for (const auto& row : report.quantiles) q[format_double(row.p)] = {{"a", row.a}, {"b", row.b}};
    j["quantiles"] = std::move(q);
    return j;
}

nlohmann::ordered_json to_json(const FitResult& fit) {
    return {{"k_hat", fit.k_hat},
            {"tau_hat", fit.tau_hat},
            {"beta1_hat", fit.beta1_hat},
            {"beta2_hat", fit.beta2_hat},
            {"rss_min", fit.rss_min}};
}

void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    finish(out, path);
}

void write_report_json(const CompareReport& report, const std::filesystem::path& path) {
    write_json(to_json(report), path);
}

void write_profile_csv(std::span<const RssPoint> profile, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << "m,rss\n";
    for (const auto& p : profile) out << p.m << ',' << format_double(p.rss) << '\n';
    finish(out, path);
}

void write_ecdf_csv(std::span<const EcdfPoint> points, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << "value,ecdf_a,ecdf_b\n";
    for (const auto& p : points)
        out << format_double(p.value) << ',' << format_double(p.ecdf_a) << ',' << format_double(p.ecdf_b) << '\n';
    finish(out, path);
}

InitialLaw parse_initial_law(std::string_view text) {
    if (text == "paper") return InnovationLaw{PaperY0{}};
    if (text == "zero") return ConstantY0{0.0};
    if (const auto v = parse_double(text)) return ConstantY0{*v};
    return parse_law(text);
}

nlohmann::ordered_json spec_to_json(const BreakSpec& spec) {
    nlohmann::ordered_json j;
    j["T"] = spec.T;
    j["tau0"] = spec.tau0;
    j["case"] = to_string(spec.label);
    const auto fixed_or_null = [](const Regime& r) -> nlohmann::ordered_json {
        if (const auto* f = std::get_if<Fixed>(&r)) return f->beta;
        return nullptr;
    };
    j["beta1"] = fixed_or_null(spec.regime1);
    j["beta2"] = fixed_or_null(spec.regime2);
    double c = 0.0, gamma = 0.0;
    for (const Regime* r : {&spec.regime1, &spec.regime2}) {
        if (const auto* l = std::get_if<LocalToUnity>(r)) c = l->c;
        if (const auto* s = std::get_if<ShrinkOffset>(r)) gamma = s->gamma;
    }
    j["c"] = c;
    j["gamma"] = gamma;
    j["innovation"] = to_string(spec.innovation);
    j["y0"] = std::visit(overloaded{
                             [](const InnovationLaw& law) -> nlohmann::ordered_json {
                                 if (std::holds_alternative<PaperY0>(law)) return "paper";
                                 return to_string(law);
                             },
                             [](const ConstantY0& k) -> nlohmann::ordered_json { return k.value; },
                         },
                         spec.y0);
    return j;
}

BreakSpec spec_from_json(const nlohmann::json& j) {
    try {
        const auto number = [&](const char* key, double fallback) {
            return j.contains(key) && !j.at(key).is_null() ? j.at(key).get<double>() : fallback;
        };
        const auto T = j.at("T").get<std::int64_t>();
        const double tau0 = j.at("tau0").get<double>();
        const auto label = parse_case(j.value("case", std::string("custom")));
        const auto innovation = parse_law(j.value("innovation", std::string("gauss:1")));
        InitialLaw y0 = ConstantY0{0.0};
        if (j.contains("y0")) {
            const auto& v = j.at("y0");
            y0 = v.is_number() ? InitialLaw{ConstantY0{v.get<double>()}} : parse_initial_law(v.get<std::string>());
        }
        const double c = number("c", 1.0);
        const double gamma = number("gamma", 0.0);
        BreakSpec spec;
        switch (label) {
            case CaseLabel::I: spec = make_case_one(T, tau0, number("beta1", 0.5), c, innovation, y0, gamma); break;
            case CaseLabel::II: spec = make_case_two(T, tau0, number("beta2", 0.5), c, innovation, y0, gamma); break;
            case CaseLabel::Custom:
                spec.T = T;
                spec.tau0 = tau0;
                spec.regime1 = Fixed{number("beta1", 0.0)};
                spec.regime2 = Fixed{number("beta2", 0.0)};
                spec.innovation = innovation;
                spec.y0 = y0;
                spec.label = CaseLabel::Custom;
                break;
        }
        validate(spec);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad spec JSON: ") + e.what());
    }
}

}  // namespace arbreak
