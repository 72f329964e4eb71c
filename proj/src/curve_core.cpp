#include "screening/curve_core.hpp"

#include <string>

#include "screening/errors.hpp"
#include "number_text.hpp"

namespace screening {

namespace {

void require_unit_interval(const char* name, double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidParameterError(name, std::string(name) + " must lie in [0,1], got " +
                                              detail::number_text(value));
    }
}

double positive_denominator(const ScreeningTest& test, double phi) {
    const double den = test.sensitivity() * phi + test.false_positive_rate() * (1.0 - phi);
    if (den == 0.0) {
        throw IndeterminateError("ppv is 0/0 at prevalence " + detail::number_text(phi) +
                                 " (sensitivity " + detail::number_text(test.sensitivity()) +
                                 ", specificity " + detail::number_text(test.specificity()) + ")");
    }
    return den;
}

}  // namespace

ScreeningTest::ScreeningTest(double sensitivity, double specificity)
    : sensitivity_(sensitivity), specificity_(specificity) {
    require_unit_interval("sensitivity", sensitivity);
    require_unit_interval("specificity", specificity);
}

Prevalence::Prevalence(double value) : value_(value) {
    require_unit_interval("prevalence", value);
}

double epsilon(const ScreeningTest& test) noexcept {
    return test.sensitivity() + test.specificity();
}

double ppv(const ScreeningTest& test, Prevalence phi) {
    const double p = phi.value();
    return test.sensitivity() * p / positive_denominator(test, p);
}

double false_discovery(const ScreeningTest& test, Prevalence phi) {
    const double p = phi.value();
    return test.false_positive_rate() * (1.0 - p) / positive_denominator(test, p);
}

std::vector<CurvePoint> curve_samples(const ScreeningTest& test, std::size_t n) {
    if (n < 2) {
        throw InvalidParameterError("samples", "curve sampling needs at least 2 points");
    }
    std::vector<CurvePoint> points;
    points.reserve(n);
    const double last = static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        // k == n-1 must land on 1 exactly.
        const Prevalence phi(k + 1 == n ? 1.0 : static_cast<double>(k) / last);
        CurvePoint point{phi, std::nullopt};
        try {
            point.rho = ppv(test, phi);
        } catch (const IndeterminateError&) {
            // left absent
        }
        points.push_back(point);
    }
    return points;
}

}  // namespace screening
