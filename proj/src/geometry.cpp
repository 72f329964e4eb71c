#include "screening/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "screening/errors.hpp"
#include "number_text.hpp"

namespace screening {

namespace {

constexpr double kEpsilonOneTolerance = 1e-12;

}  // namespace

ThresholdPoint prevalence_threshold(const ScreeningTest& test) {
    const double a = test.sensitivity();
    const double c = test.false_positive_rate();
    if (a == 0.0 && c == 0.0) {
        throw DegenerateTestError("prevalence threshold is 0/0 for sensitivity 0 and specificity 1");
    }
    if (a == 0.0) {
        throw DegenerateTestError(
            "prevalence threshold degenerates to phi_e = 1 for sensitivity 0 (rho undefined there)");
    }
    if (c == 0.0) {
        throw DegenerateTestError(
            "prevalence threshold degenerates to phi_e = 0 for specificity 1 (rho undefined there)");
    }
    const double root_c = std::sqrt(c);
    const double phi_e = root_c / (std::sqrt(a) + root_c);
    return {phi_e, ppv(test, Prevalence(phi_e))};
}

ThresholdForms threshold_forms(const ScreeningTest& test) {
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double d = epsilon(test) - 1.0;
    if (std::abs(d) < kEpsilonOneTolerance) {
        throw EpsilonOneError("difference form of the prevalence threshold divides by epsilon - 1 = 0");
    }
    const double difference_form = (std::sqrt(a * (1.0 - b)) + b - 1.0) / d;
    const double root_c = std::sqrt(1.0 - b);
    const double root_form = root_c / (std::sqrt(a) + root_c);
    return {difference_form, root_form};
}

BetaGeometry beta_geometry(const ScreeningTest& test) {
    const double a = test.sensitivity();
    const double c = test.false_positive_rate();
    if (a == 0.0) {
        throw DegenerateAngleError(std::numbers::pi / 2.0,
                                   "beta degenerates to pi/2 for sensitivity 0");
    }
    if (c == 0.0) {
        throw DegenerateAngleError(0.0, "beta degenerates to 0 for specificity 1");
    }
    const double psi = std::sqrt(c / a);
    return {std::atan(psi), psi, std::sqrt(a / c)};
}

double lr_positive_direct(const ScreeningTest& test) {
    const double a = test.sensitivity();
    const double c = test.false_positive_rate();
    if (a == 0.0) {
        throw ZeroLRError("LR+ is 0 for sensitivity 0");
    }
    if (c == 0.0) {
        throw InfiniteLRError("LR+ is unbounded for specificity 1");
    }
    return a / c;
}

double lr_positive_from_beta(const ScreeningTest& test) {
    const double tan_beta = std::tan(beta_geometry(test).beta);
    const double cot_beta = 1.0 / tan_beta;
    return cot_beta * cot_beta;
}

ChordPair chords_at(const ScreeningTest& test, Prevalence phi) {
    const double p = phi.value();
    if (p <= 0.0 || p >= 1.0) {
        throw DomainError("chords need 0 < prevalence < 1, got " + detail::number_text(p));
    }
    const double rho = ppv(test, phi);
    const double miss = false_discovery(test, phi);
    if (rho == 0.0 || miss == 0.0) {
        throw DegenerateTestError("chord slope vanishes: the curve is flat at the prevalence " +
                                  detail::number_text(p));
    }
    return {rho / p, miss / (1.0 - p), phi};
}

double lr_positive_from_chords(const ScreeningTest& test, Prevalence phi) {
    const ChordPair chords = chords_at(test, phi);
    return chords.slope_origin / chords.slope_endpoint;
}

Line endpoint_chord_line(const ScreeningTest& test) {
    const ThresholdPoint threshold = prevalence_threshold(test);
    const Prevalence phi_e(threshold.phi_e);
    const double slope = false_discovery(test, phi_e) / (1.0 - threshold.phi_e);
    return {slope, 1.0 - slope};
}

Line origin_chord_line(const ScreeningTest& test) {
    const ThresholdPoint threshold = prevalence_threshold(test);
    return {threshold.rho_e / threshold.phi_e, 0.0};
}

}  // namespace screening
