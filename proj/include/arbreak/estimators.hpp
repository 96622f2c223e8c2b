#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arbreak/dgp.hpp"

namespace arbreak {

/// Least-squares slope of y_t on y_{t-1} over t = from..to.
struct SegmentFit {
    double beta_hat = 0.0;
    double denom = 0.0;  // sum of y_{t-1}^2
};

/// Segment OLS. Returns nullopt when the regressor sum of squares is zero.
/// Throws DomainError unless 1 <= from <= to <= T.
[[nodiscard]] std::optional<SegmentFit> ols_segment(const SamplePath& path, std::int64_t from, std::int64_t to);

/// Two-segment residual sum of squares with the split after observation m,
/// i.e. segments 1..m and m+1..T. Throws EstimationError when either segment
/// is degenerate.
[[nodiscard]] double rss_at(const SamplePath& path, std::int64_t m);
/// rss_at(path, [tau T]).
[[nodiscard]] double rss(const SamplePath& path, double tau);

struct SearchWindow {
    double tau_lower = 0.1;
    double tau_upper = 0.9;
    std::int64_t min_seg = 2;
};

struct RssPoint {
    std::int64_t m = 0;
    double rss = 0.0;
};

struct FitResult {
    std::int64_t k_hat = 0;
    double tau_hat = 0.0;
    double beta1_hat = 0.0;
    double beta2_hat = 0.0;
    double rss_min = 0.0;
    std::optional<std::vector<RssPoint>> rss_profile;
};

/// Candidate split range [first, last] for a window, possibly empty (first > last).
struct CandidateRange {
    std::int64_t first = 0;
    std::int64_t last = -1;
};
[[nodiscard]] CandidateRange candidate_range(std::int64_t T, const SearchWindow& window);

/// Least-squares break estimate: exhaustive scan of the candidate range using
/// prefix sums for the first segment and suffix sums for the second, so every
/// candidate costs O(1). Degenerate candidates are skipped; ties go to the
/// smallest m. Throws ConfigError on a malformed window and EstimationError
/// when no candidate survives.
[[nodiscard]] FitResult estimate_break(const SamplePath& path, const SearchWindow& window = {},
                                       bool keep_profile = false);

enum class Statistic { Beta1, Beta2, Tau };

[[nodiscard]] const char* to_string(Statistic s) noexcept;
[[nodiscard]] Statistic parse_statistic(std::string_view text);

/// Normalized estimation error matching the limit law of the spec's case:
///
///   case I : sqrt(T)(b1 - beta1), T(b2 - beta2), (beta2T - beta1T) T (tau_hat - tau0)
///   case II: T(b1 - beta1), sqrt(T)(b2 - beta2), (beta2T - beta1T)^2 T^2 (tau_hat - tau0)
///
/// tau0 is taken as k0 / T. `Tau` needs a shrinking-break spec.
[[nodiscard]] double scaled_statistic(const FitResult& fit, const BreakSpec& spec, Statistic which);

}  // namespace arbreak
