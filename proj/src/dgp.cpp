#include "arbreak/dgp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arbreak/error.hpp"

namespace arbreak {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_shrink(const Regime& r) { return std::holds_alternative<ShrinkOffset>(r); }

}  // namespace

const char* to_string(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::Custom: return "custom";
    }
    return "custom";
}

CaseLabel parse_case(std::string_view text) {
    if (text == "I" || text == "1") return CaseLabel::I;
    if (text == "II" || text == "2") return CaseLabel::II;
    if (text == "custom") return CaseLabel::Custom;
    throw ConfigError("unknown case '" + std::string(text) + "' (expected I, II or custom)");
}

std::int64_t integer_part(double x) noexcept {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(std::floor(x));
}

std::int64_t integer_ceil(double x) noexcept {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t BreakSpec::break_index() const noexcept {
    return integer_part(tau0 * static_cast<double>(T));
}

bool BreakSpec::is_shrinking() const noexcept { return is_shrink(regime1) || is_shrink(regime2); }

BreakSpec make_case_one(std::int64_t T, double tau0, double beta1, double c, InnovationLaw innovation,
                        InitialLaw y0, double gamma) {
    BreakSpec spec;
    spec.T = T;
    spec.tau0 = tau0;
    spec.regime1 = gamma > 0.0 ? Regime{ShrinkOffset{gamma}} : Regime{Fixed{beta1}};
    spec.regime2 = LocalToUnity{c};
    spec.innovation = innovation;
    spec.y0 = y0;
    spec.label = CaseLabel::I;
    return spec;
}

BreakSpec make_case_two(std::int64_t T, double tau0, double beta2, double c, InnovationLaw innovation,
                        InitialLaw y0, double gamma) {
    BreakSpec spec;
    spec.T = T;
    spec.tau0 = tau0;
    spec.regime1 = LocalToUnity{c};
    spec.regime2 = gamma > 0.0 ? Regime{ShrinkOffset{gamma}} : Regime{Fixed{beta2}};
    spec.innovation = innovation;
    spec.y0 = y0;
    spec.label = CaseLabel::II;
    return spec;
}

void validate(const BreakSpec& spec) {
    if (spec.T < 2) throw ConfigError("T must be at least 2");
    if (!(spec.tau0 > 0.0 && spec.tau0 < 1.0)) throw ConfigError("tau0 must lie in (0, 1)");
    const auto k0 = spec.break_index();
    if (k0 < 1 || k0 > spec.T - 1)
        throw ConfigError("break index [tau0 T] = " + std::to_string(k0) + " is not interior to 1.." +
                          std::to_string(spec.T - 1));
    if (is_shrink(spec.regime1) && is_shrink(spec.regime2))
        throw ConfigError("a shrinking regime must reference a non-shrinking one");
    validate(spec.innovation);
    if (const auto* law = std::get_if<InnovationLaw>(&spec.y0)) validate(*law);

    const auto check_gamma = [](const Regime& r, double upper) {
        if (const auto* s = std::get_if<ShrinkOffset>(&r)) {
            if (!(s->gamma > 0.0 && s->gamma < upper))
                throw ConfigError("gamma must lie in (0, " + std::to_string(upper) + ")");
        }
    };
    switch (spec.label) {
        case CaseLabel::I: {
            if (!std::holds_alternative<LocalToUnity>(spec.regime2))
                throw ConfigError("case I needs a local-to-unity second regime");
            if (const auto* f = std::get_if<Fixed>(&spec.regime1)) {
                if (!(std::abs(f->beta) < 1.0)) throw ConfigError("case I needs |beta1| < 1");
            } else if (!is_shrink(spec.regime1)) {
                throw ConfigError("case I needs a fixed or shrinking first regime");
            }
            check_gamma(spec.regime1, 1.0);
            break;
        }
        case CaseLabel::II: {
            if (!std::holds_alternative<LocalToUnity>(spec.regime1))
                throw ConfigError("case II needs a local-to-unity first regime");
            if (const auto* f = std::get_if<Fixed>(&spec.regime2)) {
                if (!(std::abs(f->beta) < 1.0)) throw ConfigError("case II needs |beta2| < 1");
            } else if (!is_shrink(spec.regime2)) {
                throw ConfigError("case II needs a fixed or shrinking second regime");
            }
            check_gamma(spec.regime2, 0.5);
            break;
        }
        case CaseLabel::Custom:
            check_gamma(spec.regime1, 1.0);
            check_gamma(spec.regime2, 1.0);
            break;
    }
}

std::pair<double, double> effective_betas(const BreakSpec& spec) {
    if (is_shrink(spec.regime1) && is_shrink(spec.regime2))
        throw ConfigError("a shrinking regime must reference a non-shrinking one");
    const double T = static_cast<double>(spec.T);
    const auto resolve = [T](const Regime& r) {
        return std::visit(overloaded{
                              [](const Fixed& f) { return f.beta; },
                              [T](const LocalToUnity& l) { return 1.0 - l.c / T; },
                              [](const ShrinkOffset&) { return 0.0; },
                          },
                          r);
    };
    double beta1 = resolve(spec.regime1);
    double beta2 = resolve(spec.regime2);
    if (const auto* s = std::get_if<ShrinkOffset>(&spec.regime1)) {
        beta1 = beta2 - 1.0 / std::pow(T, s->gamma);
    } else if (const auto* s2 = std::get_if<ShrinkOffset>(&spec.regime2)) {
        beta2 = beta1 - 1.0 / std::sqrt(T * std::pow(T, s2->gamma));
    }
    return {beta1, beta2};
}

SamplePath simulate_path(const BreakSpec& spec, RngStream& stream) {
    validate(spec);
    const auto [beta1, beta2] = effective_betas(spec);
    SamplePath path;
    path.spec = spec;
    path.k0 = spec.break_index();
    path.y0 = std::visit(overloaded{
                             [&](const InnovationLaw& law) { return sample_innovation(law, stream); },
                             [](const ConstantY0& c) { return c.value; },
                         },
                         spec.y0);
    path.values.resize(static_cast<std::size_t>(spec.T));
    double prev = path.y0;
    for (std::int64_t t = 1; t <= spec.T; ++t) {
        const double beta = t <= path.k0 ? beta1 : beta2;
        prev = beta * prev + sample_innovation(spec.innovation, stream);
        path.values[static_cast<std::size_t>(t - 1)] = prev;
    }
    return path;
}

}  // namespace arbreak
