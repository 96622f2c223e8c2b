#include "arbreak/lemma.hpp"

#include <cmath>

#include "arbreak/error.hpp"

namespace arbreak {

std::vector<double> recorded_innovations(const SamplePath& path, const BreakSpec& spec) {
    const auto [beta1, beta2] = effective_betas(spec);
    std::vector<double> eps(path.values.size());
    for (std::int64_t t = 1; t <= path.T(); ++t) {
        const double beta = t <= path.k0 ? beta1 : beta2;
        eps[static_cast<std::size_t>(t - 1)] = path.y(t) - beta * path.y(t - 1);
    }
    return eps;
}

LemmaStatistics lemma_statistics(const SamplePath& path, const BreakSpec& spec, double sigma2_hat) {
    if (spec.label == CaseLabel::Custom) throw ConfigError("lemma statistics need a case I or case II spec");
    if (!(sigma2_hat > 0.0)) throw ConfigError("sigma2_hat must be positive");
    if (!has_finite_variance(spec.innovation))
        throw ConfigError("lemma statistics are unsupported for infinite-variance innovations");

    const auto eps = recorded_innovations(path, spec);
    double pre_cross = 0.0, pre_square = 0.0, post_cross = 0.0, post_square = 0.0;
    for (std::int64_t t = 1; t <= path.T(); ++t) {
        const double lag = path.y(t - 1);
        const double e = eps[static_cast<std::size_t>(t - 1)];
        if (t <= path.k0) {
            pre_cross += lag * e;
            pre_square += lag * lag;
        } else {
            post_cross += lag * e;
            post_square += lag * lag;
        }
    }
    const double T = static_cast<double>(path.T());
    const double root = std::sqrt(T) * sigma2_hat;
    const double linear = T * sigma2_hat;
    const double squared = T * T * sigma2_hat;
    if (spec.label == CaseLabel::I)
        return {CaseLabel::I, pre_cross / root, pre_square / linear, post_cross / linear, post_square / squared};
    return {CaseLabel::II, pre_cross / linear, pre_square / squared, post_cross / root, post_square / linear};
}

}  // namespace arbreak
