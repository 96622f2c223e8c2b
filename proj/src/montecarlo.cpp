#include "arbreak/montecarlo.hpp"

#include <cmath>
#include <string>

#include "arbreak/error.hpp"
#include "arbreak/parallel.hpp"

namespace arbreak {

namespace {

void require_reps(std::size_t reps) {
    if (reps < 1) throw ConfigError("reps must be at least 1");
}

double sample_variance(const std::vector<double>& v) {
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

std::vector<std::optional<FitResult>> run_fits(const BreakSpec& spec, std::size_t reps, std::uint64_t master_seed,
                                               int workers, const SearchWindow& window) {
    require_reps(reps);
    validate(spec);
    std::vector<std::optional<FitResult>> fits(reps);
    parallel::for_each_index(reps, workers, [&](std::size_t i) {
        auto stream = derive_substream(master_seed, i);
        const auto path = simulate_path(spec, stream);
        try {
            fits[i] = estimate_break(path, window);
        } catch (const EstimationError&) {
            fits[i].reset();
        }
    });
    return fits;
}

std::vector<EcdfSummary> run_finite_statistics(const BreakSpec& spec, std::span<const Statistic> which,
                                               std::size_t reps, std::uint64_t master_seed, int workers,
                                               const SearchWindow& window) {
    // Surface configuration errors (e.g. tau on a non-shrinking spec) before any work.
    for (const auto s : which) (void)scaled_statistic(FitResult{}, spec, s);

    const auto fits = run_fits(spec, reps, master_seed, workers, window);
    std::size_t failures = 0;
    for (const auto& f : fits) failures += f ? 0 : 1;
    if (static_cast<double>(failures) > kMaxFailureRate * static_cast<double>(reps)) {
        throw EstimationError(std::to_string(failures) + " of " + std::to_string(reps) +
                              " replications had no admissible break candidate (limit " +
                              std::to_string(static_cast<int>(kMaxFailureRate * 100)) +
                              "%); check the innovation and initial-value laws");
    }

    std::vector<EcdfSummary> out;
    out.reserve(which.size());
    for (const auto s : which) {
        std::vector<double> values;
        values.reserve(reps - failures);
        for (const auto& f : fits)
            if (f) values.push_back(scaled_statistic(*f, spec, s));
        out.emplace_back(std::move(values), failures);
    }
    return out;
}

EcdfSummary run_finite_sample(const BreakSpec& spec, Statistic which, std::size_t reps, std::uint64_t master_seed,
                              int workers, const SearchWindow& window) {
    const Statistic single[] = {which};
    return std::move(run_finite_statistics(spec, single, reps, master_seed, workers, window).front());
}

EcdfSummary run_limit(const LimitTarget& target, std::size_t reps, std::uint64_t master_seed, int workers) {
    require_reps(reps);
    validate(target);
    std::vector<double> values(reps);
    parallel::for_each_index(reps, workers, [&](std::size_t i) {
        auto stream = derive_substream(master_seed, i);
        values[i] = draw_limit(target, stream);
    });
    std::size_t failures = 0;
    std::erase_if(values, [&](double v) {
        const bool bad = !std::isfinite(v);
        failures += bad ? 1 : 0;
        return bad;
    });
    if (static_cast<double>(failures) > kMaxFailureRate * static_cast<double>(reps))
        throw EstimationError(std::to_string(failures) + " of " + std::to_string(reps) + " limit draws were not finite");
    return EcdfSummary(std::move(values), failures);
}

std::vector<LemmaStatistics> run_lemma_statistics(const BreakSpec& spec, std::size_t reps,
                                                  std::uint64_t master_seed, int workers) {
    require_reps(reps);
    validate(spec);
    std::vector<LemmaStatistics> out(reps);
    parallel::for_each_index(reps, workers, [&](std::size_t i) {
        auto stream = derive_substream(master_seed, i);
        const auto path = simulate_path(spec, stream);
        const auto eps = recorded_innovations(path, spec);
        const double s2 = sample_variance(eps);
        out[i] = lemma_statistics(path, spec, s2 > 0.0 ? s2 : 1.0);
    });
    return out;
}

}  // namespace arbreak
