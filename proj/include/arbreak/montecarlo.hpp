#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arbreak/dgp.hpp"
#include "arbreak/ecdf.hpp"
#include "arbreak/estimators.hpp"
#include "arbreak/lemma.hpp"
#include "arbreak/limitsim.hpp"

namespace arbreak {

/// Replications allowed to fail before an experiment aborts.
inline constexpr double kMaxFailureRate = 0.01;

// Replication i of every run below uses derive_substream(master_seed, i) and
// writes only its own slot, so results do not depend on `workers`.

/// Simulates and fits `reps` paths. A failed fit leaves nullopt in its slot.
[[nodiscard]] std::vector<std::optional<FitResult>> run_fits(const BreakSpec& spec, std::size_t reps,
                                                             std::uint64_t master_seed, int workers,
                                                             const SearchWindow& window = {});

/// One summary per requested statistic, all from the same replications.
/// Throws EstimationError when more than kMaxFailureRate of the fits fail.
[[nodiscard]] std::vector<EcdfSummary> run_finite_statistics(const BreakSpec& spec,
                                                             std::span<const Statistic> which, std::size_t reps,
                                                             std::uint64_t master_seed, int workers,
                                                             const SearchWindow& window = {});

[[nodiscard]] EcdfSummary run_finite_sample(const BreakSpec& spec, Statistic which, std::size_t reps,
                                            std::uint64_t master_seed, int workers,
                                            const SearchWindow& window = {});

[[nodiscard]] EcdfSummary run_limit(const LimitTarget& target, std::size_t reps, std::uint64_t master_seed,
                                    int workers);

/// Lemma statistics per replication, with sigma2_hat the sample variance of
/// that path's recorded innovations.
[[nodiscard]] std::vector<LemmaStatistics> run_lemma_statistics(const BreakSpec& spec, std::size_t reps,
                                                                std::uint64_t master_seed, int workers);

}  // namespace arbreak
