#include "arbreak/ecdf.hpp"

#include <algorithm>
#include <cmath>

#include "arbreak/error.hpp"

namespace arbreak {

EcdfSummary::EcdfSummary(std::vector<double> values, std::size_t failures)
    : values_(std::move(values)), failures_(failures) {
    std::sort(values_.begin(), values_.end());
}

double EcdfSummary::quantile(double p) const {
    if (empty()) throw DomainError("quantile of an empty sample");
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("quantile: p must lie in (0, 1]");
    const double rank = std::ceil(p * static_cast<double>(size()) - 1e-9);
    const auto index = static_cast<std::size_t>(std::clamp(rank, 1.0, static_cast<double>(size()))) - 1;
    return values_[index];
}

double EcdfSummary::cdf(double x) const noexcept {
    if (empty()) return 0.0;
    const auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(size());
}

namespace {

double mean_of(std::span<const double> v) {
    if (v.empty()) throw DomainError("mean of an empty sample");
    double sum = 0.0;
    for (const double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double variance_of(std::span<const double> v) {
    if (v.size() < 2) throw DomainError("variance needs at least two values");
    const double m = mean_of(v);
    double ss = 0.0;
    for (const double x : v) ss += (x - m) * (x - m);
    return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

double EcdfSummary::mean() const { return mean_of(values_); }
double EcdfSummary::variance() const { return variance_of(values_); }

std::span<const double> EcdfSummary::trimmed(double trim) const {
    if (!(trim >= 0.0 && trim < 0.5)) throw DomainError("trim fraction must lie in [0, 0.5)");
    const auto cut = static_cast<std::size_t>(std::floor(trim * static_cast<double>(size())));
    return std::span<const double>(values_).subspan(cut, size() - 2 * cut);
}

double EcdfSummary::trimmed_mean(double trim) const { return mean_of(trimmed(trim)); }
double EcdfSummary::trimmed_variance(double trim) const { return variance_of(trimmed(trim)); }

double ks_distance(const EcdfSummary& a, const EcdfSummary& b) {
    if (a.empty() || b.empty()) throw DomainError("ks_distance needs two nonempty samples");
    const auto va = a.values();
    const auto vb = b.values();
    const double na = static_cast<double>(va.size());
    const double nb = static_cast<double>(vb.size());
    std::size_t i = 0, j = 0;
    double sup = 0.0;
    while (i < va.size() && j < vb.size()) {
        const double x = std::min(va[i], vb[j]);
        while (i < va.size() && va[i] == x) ++i;
        while (j < vb.size() && vb[j] == x) ++j;
        sup = std::max(sup, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return sup;
}

CompareReport compare_report(const EcdfSummary& finite, const EcdfSummary& limit) {
    CompareReport report;
    report.ks = ks_distance(finite, limit);
    report.n_a = finite.size();
    report.n_b = limit.size();
    for (const double p : kReportProbabilities) report.quantiles.push_back({p, finite.quantile(p), limit.quantile(p)});
    return report;
}

std::vector<EcdfPoint> pooled_ecdf(const EcdfSummary& a, const EcdfSummary& b) {
    const auto va = a.values();
    const auto vb = b.values();
    const double na = static_cast<double>(std::max<std::size_t>(va.size(), 1));
    const double nb = static_cast<double>(std::max<std::size_t>(vb.size(), 1));
    std::vector<EcdfPoint> out;
    out.reserve(va.size() + vb.size());
    std::size_t i = 0, j = 0;
    while (i < va.size() || j < vb.size()) {
        double x;
        if (i == va.size()) x = vb[j];
        else if (j == vb.size()) x = va[i];
        else x = std::min(va[i], vb[j]);
        while (i < va.size() && va[i] == x) ++i;
        while (j < vb.size() && vb[j] == x) ++j;
        out.push_back({x, static_cast<double>(i) / na, static_cast<double>(j) / nb});
    }
    return out;
}

}  // namespace arbreak
