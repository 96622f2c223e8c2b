// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arbreak/brownian.hpp"
#include "arbreak/cli.hpp"
#include "arbreak/ecdf.hpp"
#include "arbreak/estimators.hpp"
#include "arbreak/io.hpp"
#include "arbreak/lemma.hpp"
#include "arbreak/limitsim.hpp"
#include "arbreak/montecarlo.hpp"
#include "arbreak/presets.hpp"

using namespace arbreak;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kOracleRssRel = 1e-12;
constexpr double kOracleSeconds = 5.0;
constexpr double kNormalityKs = 0.05;
constexpr double kNormalityVarBand = 0.15;
constexpr double kNormalitySeconds = 120.0;
constexpr double kCaseOneReductionKs = 0.025;
constexpr double kCaseTwoReductionKs = 0.02;
constexpr double kBContinuity = 1e-6;
constexpr double kBValueTol = 1e-7;
constexpr double kFunctionalVarTol = 0.025;
constexpr double kTrendRatio = 0.5;
constexpr double kHitRateSlack = 0.02;
constexpr double kLemmaCaseOneBand = 0.10;
constexpr double kLemmaCaseTwoBand = 0.15;
constexpr double kPipelineSeconds = 1800.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 4) {
    std::ostringstream os;
    os.precision(precision);
    os << x;
    return os.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// 1. Break estimator against exhaustive enumeration.

struct Brute {
    std::int64_t m = -1;
    double rss = std::numeric_limits<double>::infinity();
};

double segment_rss(const SamplePath& p, std::int64_t from, std::int64_t to, bool& ok) {
    double num = 0.0, den = 0.0;
    for (auto t = from; t <= to; ++t) {
        num += p.y(t) * p.y(t - 1);
        den += p.y(t - 1) * p.y(t - 1);
    }
    if (den == 0.0) {
        ok = false;
        return 0.0;
    }
    const double b = num / den;
    double s = 0.0;
    for (auto t = from; t <= to; ++t) s += (p.y(t) - b * p.y(t - 1)) * (p.y(t) - b * p.y(t - 1));
    return s;
}

Brute brute_force(const SamplePath& p) {
    const auto T = p.T();
    Brute best;
    for (std::int64_t m = 2; m <= T - 2; ++m) {
        const double tau = static_cast<double>(m) / static_cast<double>(T);
        if (tau < 0.1 - 1e-12 || tau > 0.9 + 1e-12) continue;
        bool ok = true;
        const double v = segment_rss(p, 1, m, ok) + segment_rss(p, m + 1, T, ok);
        if (ok && v < best.rss) best = {m, v};
    }
    return best;
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    int mismatches = 0, compared = 0;
    double worst_rel = 0.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto s = derive_substream(1001, i);
        const std::int64_t T = 8 + static_cast<std::int64_t>(i % 9);
        const double tau0 = 0.25 + 0.5 * s.uniform();
        const auto spec = i % 2 ? make_case_one(T, tau0, 0.5, 1.0, Gaussian{1.0}, PaperY0{})
                                : make_case_two(T, tau0, 0.8, 1.0, StudentT{2.0}, PaperY0{});
        const auto path = simulate_path(spec, s);
        const auto expected = brute_force(path);
        if (expected.m < 0) continue;
        const auto fit = estimate_break(path);
        ++compared;
        const double rel = std::abs(fit.rss_min - expected.rss) / std::max(expected.rss, 1e-300);
        worst_rel = std::max(worst_rel, rel);
        if (fit.k_hat != expected.m || rel > kOracleRssRel) ++mismatches;
    }
    const double secs = seconds_since(start);
    return {mismatches == 0 && compared >= 450 && secs < kOracleSeconds,
            std::to_string(compared) + " paths, " + std::to_string(mismatches) + " mismatches, worst RSS rel " +
                fmt(worst_rel, 3) + ", " + fmt(secs, 3) + " s"};
}

// ---------------------------------------------------------------------------
// 2. Case I beta1 normality.

Outcome beta1_normality(int workers) {
    const auto start = Clock::now();
    const auto spec = make_case_one(2000, 0.5, 0.5, 1.0, Gaussian{1.0}, ConstantY0{0.0});
    const auto finite = run_finite_sample(spec, Statistic::Beta1, 4000, 2002, workers);
    LimitTarget t;
    t.kind = LimitKind::T1Beta1;
    t.beta = 0.5;
    t.tau0 = 0.5;
    const auto limit = run_limit(t, 50000, limit_seed(2002), workers);
    const double ks = ks_distance(finite, limit);
    const double tv = finite.trimmed_variance();
    const double secs = seconds_since(start);
    const bool pass = ks <= kNormalityKs && std::abs(tv - 1.5) <= kNormalityVarBand * 1.5 && secs < kNormalitySeconds;
    return {pass, "ks " + fmt(ks) + ", trimmed variance " + fmt(tv) + " (raw " + fmt(finite.variance()) + "), " +
                      fmt(secs, 3) + " s"};
}

// ---------------------------------------------------------------------------
// 3. Case I c = 0 reduction.

Outcome case_one_reduction(int workers) {
    LimitTarget a;
    a.kind = LimitKind::T1Beta2;
    a.c = 0.0;
    a.tau0 = 0.3;
    LimitTarget b = a;
    b.kind = LimitKind::DFBeta2C0;
    const double ks = ks_distance(run_limit(a, 20000, 3003, workers), run_limit(b, 20000, 3004, workers));
    return {ks <= kCaseOneReductionKs, "ks " + fmt(ks)};
}

// ---------------------------------------------------------------------------
// 4. Case II c -> 0 reduction and B continuity.

Outcome case_two_reduction(int workers) {
    const double beta2 = 0.5, tau0 = 0.5;
    LimitTarget t;
    t.kind = LimitKind::T2Beta2;
    t.c = 1e-10;
    t.tau0 = tau0;
    t.beta = beta2;
    const auto sampler = run_limit(t, 20000, 4004, workers);
    // Reduced form: W-bar(1) and W(tau0) are independent N(0, 1) and N(0, tau0).
    std::vector<double> reduced(20000);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        auto s = derive_substream(4005, i);
        const double wbar = s.normal();
        const double w = std::sqrt(tau0) * s.normal();
        reduced[i] = std::sqrt(1.0 - beta2 * beta2) * wbar / (1.0 - tau0 + w * w);
    }
    const double ks = ks_distance(sampler, EcdfSummary(reduced));
    const double gap3 = std::abs(B_func(1e-10, 0.3) - 1.0);
    const double gap5 = std::abs(B_func(1e-10, 0.5) - 1.0);
    const double b = B_func(1.0, 0.3);
    const bool pass = ks <= kCaseTwoReductionKs && gap3 <= kBContinuity && gap5 <= kBContinuity &&
                      std::abs(b - 0.9255942) <= kBValueTol;
    return {pass, "ks " + fmt(ks) + ", |B(1e-10,.3)-1| " + fmt(gap3, 3) + ", |B(1e-10,.5)-1| " + fmt(gap5, 3) +
                      ", B(1,.3) " + fmt(b, 9)};
}

// ---------------------------------------------------------------------------
// 5. Functional sanity.

Outcome functional_sanity() {
    const std::size_t reps = 20000, n = 1024;
    double sf = 0.0, sff = 0.0, sg = 0.0, sgg = 0.0;
    for (std::uint64_t r = 0; r < reps; ++r) {
        auto s = derive_substream(5005, r);
        const auto w = sample_brownian(n, 1.0, s);
        const double f = functional_F(w, 0.0, 0.3).values.back();
        const double g = functional_G(w, 0.0).values[w.node_of(0.5)];
        sf += f;
        sff += f * f;
        sg += g;
        sgg += g * g;
    }
    const double N = static_cast<double>(reps);
    const double var_f = (sff - sf * sf / N) / (N - 1);
    const double var_g = (sgg - sg * sg / N) / (N - 1);

    std::vector<double> line(n + 1);
    for (std::size_t j = 0; j <= n; ++j) line[j] = static_cast<double>(j) / static_cast<double>(n);
    const auto grid = BrownianGrid::from_values(1.0, line);
    const double target = 1.0 - std::exp(-1.0);
    const double ef = std::abs(functional_F(grid, 1.0, 0.0).values.back() - target);
    const double eg = std::abs(functional_G(grid, 1.0).values.back() - target);
    const double ei = std::abs(functional_I(grid, 1.0, 0.0, 1.0).values.back() - target);
    const double tol = 2.0 / static_cast<double>(n);
    const bool pass = std::abs(var_f - 0.7) <= kFunctionalVarTol && std::abs(var_g - 0.5) <= kFunctionalVarTol &&
                      ef <= tol && eg <= tol && ei <= tol;
    return {pass, "Var F " + fmt(var_f) + ", Var G " + fmt(var_g) + ", linear-path errors F " + fmt(ef, 3) + " G " +
                      fmt(eg, 3) + " I " + fmt(ei, 3) + " (tol " + fmt(tol, 3) + ")"};
}

// ---------------------------------------------------------------------------
// 6. Consistency trends.

struct TrendPoint {
    double median_gap = 0.0;
    double hit_rate = 0.0;
};

TrendPoint trend_point(CaseLabel label, std::int64_t T, int workers) {
    const auto spec = label == CaseLabel::I ? make_case_one(T, 0.5, 0.5, 1.0, Gaussian{1.0}, PaperY0{})
                                            : make_case_two(T, 0.5, 0.5, 1.0, Gaussian{1.0}, PaperY0{});
    const auto fits = run_fits(spec, 1000, 6006, workers);
    std::vector<double> gaps;
    std::size_t hits = 0;
    for (const auto& f : fits) {
        if (!f) continue;
        gaps.push_back(std::abs(f->tau_hat - 0.5));
        hits += f->k_hat == spec.break_index() ? 1 : 0;
    }
    const EcdfSummary e(gaps);
    return {e.quantile(0.5), static_cast<double>(hits) / static_cast<double>(fits.size())};
}

Outcome consistency_trends(int workers) {
    bool pass = true;
    std::string detail;
    for (const auto label : {CaseLabel::I, CaseLabel::II}) {
        std::vector<TrendPoint> pts;
        for (const std::int64_t T : {100, 200, 400, 800}) pts.push_back(trend_point(label, T, workers));
        const bool shrinks = pts.back().median_gap <= kTrendRatio * pts.front().median_gap;
        pass = pass && shrinks;
        detail += std::string("case ") + to_string(label) + " median |tau_hat-tau0| " + fmt(pts.front().median_gap) +
                  " -> " + fmt(pts.back().median_gap);
        if (label == CaseLabel::II) {
            detail += ", P(k_hat=k0)";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                detail += " " + fmt(pts[i].hit_rate, 3);
                if (i > 0 && pts[i].hit_rate < pts[i - 1].hit_rate - kHitRateSlack) pass = false;
            }
        } else {
            detail += "; ";
        }
    }
    return {pass, detail};
}

// ---------------------------------------------------------------------------
// 7. Lemma diagnostics.

Outcome lemma_diagnostics(int workers) {
    const double tau0 = 0.5, beta = 0.5, c = 1.0;
    const auto one = make_case_one(200, tau0, beta, c, Gaussian{1.0}, ConstantY0{0.0});
    double m1 = 0.0;
    for (const auto& s : run_lemma_statistics(one, 5000, 7007, workers)) m1 += s.pre_square;
    m1 /= 5000.0;
    const double target1 = tau0 / (1.0 - beta * beta);

    const auto two = make_case_two(200, tau0, beta, c, Gaussian{1.0}, ConstantY0{0.0});
    double m2 = 0.0;
    for (const auto& s : run_lemma_statistics(two, 5000, 7008, workers)) m2 += s.pre_square;
    m2 /= 5000.0;

    // Monte Carlo mean of int_0^tau0 e^{2c(1-t)} G^2 dt on the limit grid.
    const std::size_t reps = 20000;
    double limit_mean = 0.0;
    for (std::uint64_t r = 0; r < reps; ++r) {
        auto s = derive_substream(7009, r);
        const auto w = sample_brownian(2048, 1.0, s);
        const auto g = functional_G(w, c);
        const std::size_t j0 = w.node_of(tau0);
        double integral = 0.0;
        for (std::size_t j = 0; j < j0; ++j) {
            const double t = static_cast<double>(j) * g.dt;
            integral += std::exp(2.0 * c * (1.0 - t)) * g.values[j] * g.values[j];
        }
        limit_mean += integral * g.dt;
    }
    limit_mean /= static_cast<double>(reps);

    const bool pass =
        std::abs(m1 - target1) <= kLemmaCaseOneBand * target1 && std::abs(m2 - limit_mean) <= kLemmaCaseTwoBand * limit_mean;
    return {pass, "case I pre-break square mean " + fmt(m1) + " vs " + fmt(target1) + "; case II " + fmt(m2) +
                      " vs limit " + fmt(limit_mean)};
}

// ---------------------------------------------------------------------------
// 8. Simulation-study pipeline.

std::string config_key(const ExperimentPreset& p) {
    const auto [b1, b2] = effective_betas(p.spec);
    return std::string(to_string(p.spec.label)) + "/" + fmt(p.spec.tau0) + "/" +
           fmt(p.spec.label == CaseLabel::I ? b1 : b2);
}

Outcome pipeline(int workers, const fs::path& out_dir) {
    const auto start = Clock::now();
    const std::uint64_t seed = 8008;
    const auto dir = out_dir / "presets";
    bool files_ok = true;
    // ks by (config key, statistic, dof).
    std::map<std::string, double> ks;
    for (const auto& p : builtin_presets()) {
        const auto artifacts = run_preset(p, seed, workers, dir);
        const double dof = std::get<StudentT>(p.spec.innovation).dof;
        for (const auto& a : artifacts) {
            files_ok = files_ok && fs::exists(a.sample_csv) && fs::exists(a.limit_csv) && fs::exists(a.compare_json);
            ks[config_key(p) + "/" + to_string(a.statistic) + "/t" + fmt(dof)] = a.report.ks;
        }
    }
    const std::size_t preset_count = builtin_presets().size();

    // t(3) closer to the limit than t(2), majority over the paired runs.
    int t3_wins = 0, pairs = 0;
    for (const auto& [key, v] : ks) {
        if (key.size() < 3 || key.substr(key.size() - 3) != "/t3") continue;
        const auto other = ks.find(key.substr(0, key.size() - 3) + "/t2");
        if (other == ks.end()) continue;
        ++pairs;
        t3_wins += v < other->second ? 1 : 0;
    }

    // tau0 ordering with Gaussian innovations: beta1 closer at tau0 = 0.5,
    // beta2 closer at tau0 = 0.3, majority over the three slopes per case.
    std::map<std::string, double> gauss_ks;
    for (const auto& p : builtin_presets()) {
        if (std::get<StudentT>(p.spec.innovation).dof != 3.0) continue;
        auto spec = p.spec;
        spec.innovation = Gaussian{1.0};
        std::vector<Statistic> stats;
        for (const auto& s : p.statistics) stats.push_back(s.statistic);
        const auto finite = run_finite_statistics(spec, stats, p.reps, seed, workers);
        for (std::size_t i = 0; i < stats.size(); ++i) {
            const auto limit = run_limit(p.statistics[i].target, p.reps, limit_seed(seed), workers);
            gauss_ks[config_key(p) + "/" + to_string(stats[i])] = ks_distance(finite[i], limit);
        }
    }
    int order_groups = 0, order_ok = 0;
    std::string order_detail;
    for (const char* label : {"I", "II"}) {
        for (const char* stat : {"beta1", "beta2"}) {
            int wins = 0;
            for (const char* beta : {"0.5", "0.75", "0.8"}) {
                const double at3 = gauss_ks[std::string(label) + "/0.3/" + beta + "/" + stat];
                const double at5 = gauss_ks[std::string(label) + "/0.5/" + beta + "/" + stat];
                wins += std::string(stat) == "beta1" ? (at5 <= at3) : (at3 <= at5);
            }
            ++order_groups;
            order_ok += wins >= 2 ? 1 : 0;
            order_detail += std::string(" ") + label + "/" + stat + " " + std::to_string(wins) + "/3";
        }
    }

    const double secs = seconds_since(start);
    const bool pass = files_ok && preset_count == 24 && ks.size() == 48 && 2 * t3_wins > pairs &&
                      order_ok == order_groups && secs < kPipelineSeconds;
    return {pass, std::to_string(preset_count) + " presets, " + std::to_string(ks.size()) +
                      " comparisons, files " + (files_ok ? "ok" : "missing") + "; t(3) closer in " +
                      std::to_string(t3_wins) + "/" + std::to_string(pairs) + "; tau0 ordering" + order_detail +
                      "; " + fmt(secs, 4) + " s"};
}

// ---------------------------------------------------------------------------
// 9. Determinism across worker counts.

std::vector<std::string> files_in(const fs::path& dir) {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

Outcome determinism(const fs::path& out_dir) {
    std::size_t compared = 0, differing = 0;
    for (const int w : {1, 8}) {
        const auto dir = out_dir / ("determinism-w" + std::to_string(w));
        fs::remove_all(dir);
        fs::create_directories(dir);
        const std::string ws = std::to_string(w);
        std::ostringstream sink, errs;
        const std::vector<std::vector<std::string>> commands{
            {"preset", "run", "caseII-tau0.3-beta0.75-t2", "--reps", "2000", "--seed", "9", "--workers", ws,
             "--out-dir", dir.string()},
            {"simulate", "--case", "I", "--T", "400", "--tau0", "0.5", "--gamma", "0.5", "--stat", "tau", "--reps",
             "500", "--seed", "9", "--workers", ws, "--out", (dir / "tau.csv").string()},
            {"limit", "--target", "t1-tau", "--reps", "200", "--nu-max", "10", "--seed", "9", "--workers", ws,
             "--out", (dir / "t1tau.csv").string()},
            {"limit", "--target", "t2-tau", "--reps", "200", "--nu-max", "10", "--seed", "9", "--workers", ws,
             "--out", (dir / "t2tau.csv").string()},
        };
        for (const auto& args : commands) {
            if (cli::dispatch(args, sink, errs) != cli::kExitOk) return {false, "command failed: " + errs.str()};
        }
    }
    const auto a = out_dir / "determinism-w1";
    const auto b = out_dir / "determinism-w8";
    const auto names = files_in(a);
    if (names != files_in(b)) return {false, "file sets differ"};
    for (const auto& n : names) {
        ++compared;
        differing += slurp(a / n) == slurp(b / n) ? 0 : 1;
    }
    return {differing == 0 && compared >= 9,
            std::to_string(compared) + " files compared, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int workers = 8;
    std::string out_dir = "acceptance_artifacts";
    std::vector<int> only;
    app.add_option("--workers", workers)->check(CLI::PositiveNumber);
    app.add_option("--out-dir", out_dir);
    app.add_option("--only", only, "Run only these criterion numbers");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(out_dir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence of the break estimator", [] { return oracle_equivalence(); }},
        {"case I beta1 normality at T=2000", [&] { return beta1_normality(workers); }},
        {"case I c=0 reduction to the DF form", [&] { return case_one_reduction(workers); }},
        {"case II c->0 reduction and B continuity", [&] { return case_two_reduction(workers); }},
        {"Brownian functional sanity", [] { return functional_sanity(); }},
        {"consistency trends", [&] { return consistency_trends(workers); }},
        {"lemma diagnostics", [&] { return lemma_diagnostics(workers); }},
        {"simulation-study pipeline (24 presets)", [&] { return pipeline(workers, out_dir); }},
        {"determinism across worker counts", [&] { return determinism(out_dir); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
