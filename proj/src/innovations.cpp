#include "arbreak/innovations.hpp"

#include <charconv>
#include <cmath>

#include "arbreak/error.hpp"
#include "arbreak/io.hpp"

namespace arbreak {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double gamma_marsaglia_tsang(double shape, RngStream& stream) {
    if (shape < 1.0) {
        const double boosted = gamma_marsaglia_tsang(shape + 1.0, stream);
        return boosted * std::pow(stream.uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = stream.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double chi_square(double dof, RngStream& stream) {
    const double whole = std::floor(dof);
    if (whole == dof && dof <= 1.0e6) {
        const auto k = static_cast<long>(whole);
        double log_sum = 0.0;
        for (long i = 0; i < k / 2; ++i) log_sum += std::log(stream.uniform_open());
        double value = -2.0 * log_sum;
        if (k % 2 == 1) {
            const double z = stream.normal();
            value += z * z;
        }
        return value;
    }
    return 2.0 * gamma_marsaglia_tsang(0.5 * dof, stream);
}

}  // namespace

void validate(const InnovationLaw& law) {
    std::visit(overloaded{
                   [](const Gaussian& g) {
                       if (!(g.scale > 0.0) || !std::isfinite(g.scale))
                           throw ConfigError("gaussian scale must be positive and finite");
                   },
                   [](const StudentT& t) {
                       if (!(t.dof > 0.0) || !std::isfinite(t.dof))
                           throw ConfigError("student-t degrees of freedom must be positive and finite");
                   },
                   [](const PaperY0&) {},
                   [](const ZeroLaw&) {},
               },
               law);
}

InnovationLaw parse_law(std::string_view text) {
    if (text == "paper-y0") return PaperY0{};
    if (text == "zero") return ZeroLaw{};
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ConfigError("unknown law '" + std::string(text) + "'");
    const auto name = text.substr(0, colon);
    const auto value = parse_double(text.substr(colon + 1));
    if (!value) throw ConfigError("bad numeric parameter in law '" + std::string(text) + "'");
    InnovationLaw law;
    if (name == "gauss") {
        law = Gaussian{*value};
    } else if (name == "t") {
        law = StudentT{*value};
    } else {
        throw ConfigError("unknown law '" + std::string(text) + "'");
    }
    validate(law);
    return law;
}

std::string to_string(const InnovationLaw& law) {
    return std::visit(overloaded{
                          [](const Gaussian& g) { return "gauss:" + format_double(g.scale); },
                          [](const StudentT& t) { return "t:" + format_double(t.dof); },
                          [](const PaperY0&) { return std::string("paper-y0"); },
                          [](const ZeroLaw&) { return std::string("zero"); },
                      },
                      law);
}

bool has_finite_variance(const InnovationLaw& law) noexcept {
    return std::visit(overloaded{
                          [](const Gaussian&) { return true; },
                          [](const StudentT& t) { return t.dof > 2.0; },
                          [](const PaperY0&) { return false; },
                          [](const ZeroLaw&) { return true; },
                      },
                      law);
}

double sample_innovation(const InnovationLaw& law, RngStream& stream) {
    return std::visit(overloaded{
                          [&](const Gaussian& g) { return g.scale * stream.normal(); },
                          [&](const StudentT& t) {
                              const double z = stream.normal();
                              return z / std::sqrt(chi_square(t.dof, stream) / t.dof);
                          },
                          [&](const PaperY0&) { return y0_quantile(stream.uniform()); },
                          [](const ZeroLaw&) { return 0.0; },
                      },
                      law);
}

double y0_quantile(double u) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("y0_quantile: u must lie in [0, 1)");
    return std::pow(1.0 - u, -2.0 / 3.0) - 3.0;
}

}  // namespace arbreak
