#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "arbreak/dgp.hpp"
#include "arbreak/ecdf.hpp"
#include "arbreak/estimators.hpp"

namespace arbreak {

// Number text is produced with std::to_chars and read with std::from_chars:
// shortest round-trip form, '.' separator, no locale.

[[nodiscard]] std::string format_double(double x);
/// Whole-string parse; nullopt on any trailing garbage.
[[nodiscard]] std::optional<double> parse_double(std::string_view text);

/// Series CSV: header `t,y`, then t = 0, 1, 2, ... ascending by one; the
/// t = 0 row is y0. Throws ParseError naming the offending line.
[[nodiscard]] SamplePath read_series_csv(const std::filesystem::path& path);
[[nodiscard]] SamplePath parse_series_csv(std::string_view text);
void write_series_csv(const SamplePath& series, const std::filesystem::path& path);

/// Sample CSV: header `value`, one value per line.
void write_sample_csv(std::span<const double> values, const std::filesystem::path& path);
inline void write_sample_csv(const EcdfSummary& summary, const std::filesystem::path& path) {
    write_sample_csv(summary.values(), path);
}
[[nodiscard]] std::vector<double> read_sample_csv(const std::filesystem::path& path);

[[nodiscard]] nlohmann::ordered_json to_json(const CompareReport& report);
[[nodiscard]] nlohmann::ordered_json to_json(const FitResult& fit);
void write_report_json(const CompareReport& report, const std::filesystem::path& path);
void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path);

/// CSV `m,rss` of a retained RSS profile.
void write_profile_csv(std::span<const RssPoint> profile, const std::filesystem::path& path);
/// CSV `value,ecdf_a,ecdf_b` at the pooled sample points.
void write_ecdf_csv(std::span<const EcdfPoint> points, const std::filesystem::path& path);

/// Flat key-value form {T, tau0, case, beta1, beta2, c, gamma, innovation, y0}.
/// `y0` is "paper", "zero", a law string, or a number.
[[nodiscard]] nlohmann::ordered_json spec_to_json(const BreakSpec& spec);
[[nodiscard]] BreakSpec spec_from_json(const nlohmann::json& j);

/// "paper" -> PaperY0 law, "zero" -> constant 0, a number -> that constant,
/// otherwise an innovation law string.
[[nodiscard]] InitialLaw parse_initial_law(std::string_view text);

}  // namespace arbreak
