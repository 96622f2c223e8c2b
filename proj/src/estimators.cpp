#include "arbreak/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arbreak/error.hpp"

namespace arbreak {

std::optional<SegmentFit> ols_segment(const SamplePath& path, std::int64_t from, std::int64_t to) {
    if (from < 1 || from > to || to > path.T())
        throw DomainError("ols_segment: need 1 <= from <= to <= T");
    double xy = 0.0;
    double xx = 0.0;
    double prev = path.y(from - 1);
    for (std::int64_t t = from; t <= to; ++t) {
        const double cur = path.y(t);
        xy += cur * prev;
        xx += prev * prev;
        prev = cur;
    }
    if (xx == 0.0) return std::nullopt;
    return SegmentFit{xy / xx, xx};
}

double rss_at(const SamplePath& path, std::int64_t m) {
    const auto T = path.T();
    if (m < 1 || m > T - 1) throw DomainError("rss: split must leave both segments nonempty");
    const auto residuals = [&](std::int64_t from, std::int64_t to, const char* which) {
        const auto fit = ols_segment(path, from, to);
        if (!fit) throw EstimationError(std::string("rss: degenerate ") + which + " segment at m=" + std::to_string(m));
        double sum = 0.0;
        for (std::int64_t t = from; t <= to; ++t) {
            const double e = path.y(t) - fit->beta_hat * path.y(t - 1);
            sum += e * e;
        }
        return sum;
    };
    return residuals(1, m, "first") + residuals(m + 1, T, "second");
}

double rss(const SamplePath& path, double tau) {
    return rss_at(path, integer_part(tau * static_cast<double>(path.T())));
}

CandidateRange candidate_range(std::int64_t T, const SearchWindow& window) {
    const double n = static_cast<double>(T);
    return {std::max(integer_ceil(window.tau_lower * n), window.min_seg),
            std::min(integer_part(window.tau_upper * n), T - window.min_seg)};
}

FitResult estimate_break(const SamplePath& path, const SearchWindow& window, bool keep_profile) {
    if (!(window.tau_lower > 0.0 && window.tau_lower < window.tau_upper && window.tau_upper < 1.0))
        throw ConfigError("search window needs 0 < tau_lower < tau_upper < 1");
    if (window.min_seg < 2) throw ConfigError("min_seg must be at least 2");

    const auto T = path.T();
    const auto range = candidate_range(T, window);
    if (range.first > range.last) throw EstimationError("search window contains no candidate split");

    // Segment 1 uses prefix sums over t = 1..m, segment 2 suffix sums over
    // t = m+1..T; neither is obtained by subtraction.
    const auto size = static_cast<std::size_t>(T + 1);
    std::vector<double> pre_xy(size, 0.0), pre_xx(size, 0.0), pre_yy(size, 0.0);
    std::vector<double> suf_xy(size, 0.0), suf_xx(size, 0.0), suf_yy(size, 0.0);
    for (std::int64_t t = 1; t <= T; ++t) {
        const auto i = static_cast<std::size_t>(t);
        const double y = path.y(t), x = path.y(t - 1);
        pre_xy[i] = pre_xy[i - 1] + y * x;
        pre_xx[i] = pre_xx[i - 1] + x * x;
        pre_yy[i] = pre_yy[i - 1] + y * y;
    }
    for (std::int64_t t = T; t >= 1; --t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const double y = path.y(t), x = path.y(t - 1);
        suf_xy[i] = suf_xy[i + 1] + y * x;
        suf_xx[i] = suf_xx[i + 1] + x * x;
        suf_yy[i] = suf_yy[i + 1] + y * y;
    }

    FitResult best;
    bool found = false;
    if (keep_profile) best.rss_profile.emplace();
    for (std::int64_t m = range.first; m <= range.last; ++m) {
        const auto i = static_cast<std::size_t>(m);
        if (pre_xx[i] == 0.0 || suf_xx[i] == 0.0) continue;
        const double b1 = pre_xy[i] / pre_xx[i];
        const double b2 = suf_xy[i] / suf_xx[i];
        const double value = std::max(0.0, pre_yy[i] - b1 * pre_xy[i]) + std::max(0.0, suf_yy[i] - b2 * suf_xy[i]);
        if (keep_profile) best.rss_profile->push_back({m, value});
        if (!found || value < best.rss_min) {
            found = true;
            best.k_hat = m;
            best.beta1_hat = b1;
            best.beta2_hat = b2;
            best.rss_min = value;
        }
    }
    if (!found) throw EstimationError("every candidate split has a degenerate segment");
    best.tau_hat = static_cast<double>(best.k_hat) / static_cast<double>(T);
    return best;
}

const char* to_string(Statistic s) noexcept {
    switch (s) {
        case Statistic::Beta1: return "beta1";
        case Statistic::Beta2: return "beta2";
        case Statistic::Tau: return "tau";
    }
    return "beta1";
}

Statistic parse_statistic(std::string_view text) {
    if (text == "beta1") return Statistic::Beta1;
    if (text == "beta2") return Statistic::Beta2;
    if (text == "tau") return Statistic::Tau;
    throw ConfigError("unknown statistic '" + std::string(text) + "'");
}

double scaled_statistic(const FitResult& fit, const BreakSpec& spec, Statistic which) {
    if (spec.label == CaseLabel::Custom) throw ConfigError("scaled statistics need a case I or case II spec");
    const auto [beta1, beta2] = effective_betas(spec);
    const double T = static_cast<double>(spec.T);
    const bool case_one = spec.label == CaseLabel::I;
    switch (which) {
        case Statistic::Beta1: return (case_one ? std::sqrt(T) : T) * (fit.beta1_hat - beta1);
        case Statistic::Beta2: return (case_one ? T : std::sqrt(T)) * (fit.beta2_hat - beta2);
        case Statistic::Tau: {
            if (!spec.is_shrinking()) throw ConfigError("the tau statistic needs a shrinking-break spec");
            const double gap = beta2 - beta1;
            const double k_diff = static_cast<double>(fit.k_hat - spec.break_index());
            // gap T (tau_hat - tau0) = gap (k_hat - k0); case II squares the T gap.
            return case_one ? gap * k_diff : gap * gap * T * k_diff;
        }
    }
    return 0.0;
}

}  // namespace arbreak
