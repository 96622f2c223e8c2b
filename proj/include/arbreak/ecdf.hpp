#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace arbreak {

/// A Monte Carlo sample held in ascending order.
class EcdfSummary {
public:
    EcdfSummary() = default;
    /// Sorts `values`. `failures` counts replications that produced no value.
    explicit EcdfSummary(std::vector<double> values, std::size_t failures = 0);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t failures() const noexcept { return failures_; }

    /// Order statistic at rank ceil(p n), p in (0, 1].
    [[nodiscard]] double quantile(double p) const;
    /// Fraction of the sample <= x.
    [[nodiscard]] double cdf(double x) const noexcept;

    [[nodiscard]] double mean() const;
    /// Unbiased (n - 1) variance.
    [[nodiscard]] double variance() const;
    /// Moments after dropping floor(trim n) values from each tail.
    [[nodiscard]] double trimmed_mean(double trim = 0.01) const;
    [[nodiscard]] double trimmed_variance(double trim = 0.01) const;

private:
    [[nodiscard]] std::span<const double> trimmed(double trim) const;

    std::vector<double> values_;
    std::size_t failures_ = 0;
};

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
/// Throws DomainError when either sample is empty.
[[nodiscard]] double ks_distance(const EcdfSummary& a, const EcdfSummary& b);

inline constexpr std::array<double, 9> kReportProbabilities{0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99};

struct QuantileRow {
    double p = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct CompareReport {
    double ks = 0.0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::vector<QuantileRow> quantiles;
};

[[nodiscard]] CompareReport compare_report(const EcdfSummary& finite, const EcdfSummary& limit);

struct EcdfPoint {
    double value = 0.0;
    double ecdf_a = 0.0;
    double ecdf_b = 0.0;
};

/// Both ECDFs evaluated at every distinct pooled value, ascending.
[[nodiscard]] std::vector<EcdfPoint> pooled_ecdf(const EcdfSummary& a, const EcdfSummary& b);

}  // namespace arbreak
