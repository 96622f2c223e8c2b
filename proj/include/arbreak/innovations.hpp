#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "arbreak/rng.hpp"

namespace arbreak {

struct Gaussian {
    double scale = 1.0;
};

struct StudentT {
    double dof = 3.0;
};

/// Law with density 3 / (2 (x + 3)^{5/2}) on x > -2. Mean zero, infinite
/// moments of order 3/2 and above.
struct PaperY0 {};

/// Degenerate law at 0, for noise-free paths.
struct ZeroLaw {};

using InnovationLaw = std::variant<Gaussian, StudentT, PaperY0, ZeroLaw>;

/// Throws ConfigError unless scale > 0 / dof > 0.
void validate(const InnovationLaw& law);

/// Parses "gauss:<scale>", "t:<dof>", "paper-y0" or "zero".
[[nodiscard]] InnovationLaw parse_law(std::string_view text);
[[nodiscard]] std::string to_string(const InnovationLaw& law);

/// True when the law has a finite second moment.
[[nodiscard]] bool has_finite_variance(const InnovationLaw& law) noexcept;

/// One draw from `law`.
///
/// Student t is drawn as Z / sqrt(X / dof) with X chi-square(dof) from the
/// same stream: for integer dof X is a sum of -2 log U terms (one per pair of
/// degrees) plus one squared normal when dof is odd; otherwise X is
/// 2 Gamma(dof / 2) by Marsaglia-Tsang.
double sample_innovation(const InnovationLaw& law, RngStream& stream);

/// Inverse CDF of PaperY0: (1 - u)^{-2/3} - 3. Throws DomainError unless 0 <= u < 1.
[[nodiscard]] double y0_quantile(double u);

}  // namespace arbreak
