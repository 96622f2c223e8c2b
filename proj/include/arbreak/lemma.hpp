#pragma once

#include <vector>

#include "arbreak/dgp.hpp"

namespace arbreak {

/// Normalized pre- and post-break sums of y_{t-1} eps_t ("cross") and
/// y_{t-1}^2 ("square"), each divided by sigma2_hat and by the power of T
/// under which it has a nondegenerate limit:
///
///            pre_cross  pre_square  post_cross  post_square
///   case I   sqrt(T)    T           T           T^2
///   case II  T          T^2         sqrt(T)     T
struct LemmaStatistics {
    CaseLabel label = CaseLabel::I;
    double pre_cross = 0.0;
    double pre_square = 0.0;
    double post_cross = 0.0;
    double post_square = 0.0;
};

/// eps_t = y_t - beta(t) y_{t-1}, t = 1..T, using the spec's true slopes and path.k0.
[[nodiscard]] std::vector<double> recorded_innovations(const SamplePath& path, const BreakSpec& spec);

/// Throws ConfigError for custom specs or sigma2_hat <= 0, and for
/// infinite-variance innovation laws (t with dof <= 2, paper-y0).
[[nodiscard]] LemmaStatistics lemma_statistics(const SamplePath& path, const BreakSpec& spec, double sigma2_hat);

}  // namespace arbreak
