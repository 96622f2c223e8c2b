// Wall-clock comparison of the serial reference loop against the OpenMP loop,
// and of the prefix-sum break scan against direct per-candidate RSS.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "arbreak/estimators.hpp"
#include "arbreak/montecarlo.hpp"
#include "arbreak/parallel.hpp"

using namespace arbreak;

namespace {

template <class F>
double time_best_of(int repeats, F&& f) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, int workers) {
    std::printf("%-28s serial %9.4f s   %2d workers %9.4f s   speedup %5.2fx\n", name.c_str(), serial, workers,
                parallel, serial / parallel);
}

// Scan that recomputes every candidate's RSS from scratch: O(T) per candidate.
std::int64_t direct_scan(const SamplePath& path, const SearchWindow& window) {
    const auto range = candidate_range(path.T(), window);
    std::int64_t best_m = -1;
    double best = std::numeric_limits<double>::infinity();
    for (auto m = range.first; m <= range.last; ++m) {
        const double v = rss_at(path, m);
        if (v < best) {
            best = v;
            best_m = m;
        }
    }
    return best_m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Replication-loop benchmarks"};
    std::size_t reps = 20000;
    int workers = parallel::default_workers();
    int repeats = 3;
    app.add_option("--reps", reps)->capture_default_str();
    app.add_option("--workers", workers)->capture_default_str();
    app.add_option("--repeats", repeats)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());

    const auto spec = make_case_one(200, 0.5, 0.5, 1.0, StudentT{3.0}, PaperY0{});
    report("finite sample, T=200",
           time_best_of(repeats, [&] { (void)run_finite_sample(spec, Statistic::Beta1, reps, 1, 1); }),
           time_best_of(repeats, [&] { (void)run_finite_sample(spec, Statistic::Beta1, reps, 1, workers); }), workers);

    LimitTarget t;
    t.kind = LimitKind::T1Beta2;
    const std::size_t limit_reps = reps / 10;
    report("limit t1-beta2, n=2048", time_best_of(repeats, [&] { (void)run_limit(t, limit_reps, 1, 1); }),
           time_best_of(repeats, [&] { (void)run_limit(t, limit_reps, 1, workers); }), workers);

    t.kind = LimitKind::T1Tau;
    const std::size_t tau_reps = reps / 100;
    report("limit t1-tau", time_best_of(repeats, [&] { (void)run_limit(t, tau_reps, 1, 1); }),
           time_best_of(repeats, [&] { (void)run_limit(t, tau_reps, 1, workers); }), workers);

    for (const std::int64_t T : {200, 1000, 4000}) {
        const auto s = make_case_two(T, 0.5, 0.5, 1.0, Gaussian{1.0}, ConstantY0{0.0});
        std::vector<SamplePath> paths;
        for (std::uint64_t i = 0; i < 20; ++i) {
            auto stream = derive_substream(2, i);
            paths.push_back(simulate_path(s, stream));
        }
        std::int64_t sink = 0;
        const double fast = time_best_of(repeats, [&] {
            for (const auto& p : paths) sink += estimate_break(p).k_hat;
        });
        const double slow = time_best_of(repeats, [&] {
            for (const auto& p : paths) sink += direct_scan(p, {});
        });
        if (sink < 0) return 1;
        std::printf("break scan T=%-6lld        prefix sums %9.6f s   direct RSS %9.6f s   ratio %7.1fx\n",
                    static_cast<long long>(T), fast, slow, slow / fast);
    }
    return 0;
}
