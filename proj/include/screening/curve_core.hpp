#pragma once

// Screening test parameters and the screening curve
//
//   rho(phi) = a*phi / (a*phi + (1 - b)*(1 - phi))
//
// a = sensitivity, b = specificity, phi = prevalence (pre-test probability).
// Every nondegenerate curve passes through the invariant points (0,0) and
// (1,1) of the unit screening plane.

#include <cstddef>
#include <optional>
#include <vector>

namespace screening {

class ScreeningTest {
public:
    // Throws InvalidParameterError unless both values lie in [0,1].
    ScreeningTest(double sensitivity, double specificity);

    double sensitivity() const noexcept { return sensitivity_; }
    double specificity() const noexcept { return specificity_; }
    double false_positive_rate() const noexcept { return 1.0 - specificity_; }

    friend bool operator==(const ScreeningTest&, const ScreeningTest&) = default;

private:
    double sensitivity_;
    double specificity_;
};

class Prevalence {
public:
    // Throws InvalidParameterError unless 0 <= value <= 1.
    explicit Prevalence(double value);

    double value() const noexcept { return value_; }

    friend bool operator==(const Prevalence&, const Prevalence&) = default;

private:
    double value_;
};

// A sampled point of the curve. rho is absent where ppv is indeterminate.
struct CurvePoint {
    Prevalence phi;
    std::optional<double> rho;
};

// Screening coefficient a + b, in [0,2].
double epsilon(const ScreeningTest& test) noexcept;

// Positive predictive value. Throws IndeterminateError at 0/0 points
// (phi = 0 with b = 1, phi = 1 with a = 0).
double ppv(const ScreeningTest& test, Prevalence phi);

// 1 - ppv, evaluated as (1-b)(1-phi) / denominator so that it keeps full
// relative precision where ppv is close to 1.
double false_discovery(const ScreeningTest& test, Prevalence phi);

// n >= 2 uniform samples phi_k = k/(n-1).
std::vector<CurvePoint> curve_samples(const ScreeningTest& test, std::size_t n);

}  // namespace screening
