#pragma once

// Area under the screening curve, the epsilon -> 2 limit of that area, and
// the comparator for two tests.
//
// With c = 1 - b and d = epsilon - 1 = a - c the area has the closed form
//
//   A = a/d - (a c / d^2) ln(a/c)       (d != 0)
//   A = 1/2                             (d == 0, rho(phi) = phi)
//
// The closed form is cross-checked by adaptive Gauss-Kronrod quadrature of
// ppv itself.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "screening/curve_core.hpp"
#include "screening/geometry.hpp"

namespace screening {

// A derived quantity that may be undefined for degenerate tests. When value
// is empty, reason says why.
template <class T>
struct Quantity {
    std::optional<T> value;
    std::string reason;

    bool has_value() const noexcept { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

struct TestReport {
    ScreeningTest test;
    double epsilon;
    Quantity<ThresholdPoint> threshold;
    Quantity<BetaGeometry> beta;
    Quantity<double> lr_plus;
    Quantity<double> auc;
    Quantity<Line> endpoint_chord;

    bool complete() const noexcept {
        return threshold.has_value() && beta.has_value() && lr_plus.has_value() &&
               auc.has_value() && endpoint_chord.has_value();
    }
};

enum class Dominance { first, second, neither };

const char* to_string(Dominance d) noexcept;

// Signed margin (second minus first) and which test it favors.
struct Ordering {
    Dominance favored;
    double margin;
};

struct ComparisonReport {
    TestReport first;
    TestReport second;
    bool equal_epsilon;
    // Equal epsilon below 1: higher specificity gives the lower curve.
    bool reversed_regime;
    Dominance dominant;
    Ordering beta_order;  // favors the smaller beta; margin = beta2 - beta1
    Ordering auc_order;   // favors the larger area;  margin = auc2 - auc1
};

struct SweepPoint {
    double epsilon;
    double auc;
};

// Throws DegenerateTestError for a = 0 or b = 1.
double auc_closed_form(const ScreeningTest& test);

// Adaptive (G7, K15) quadrature of ppv over [0,1]. tol >= 1e-13.
// Throws NonConvergenceError past max_depth bisections.
double auc_quadrature(const ScreeningTest& test, double tol, int max_depth = 60);

// Closed-form areas along a = b = 1 - 2^-k, k = 1..steps.
std::vector<SweepPoint> fts_limit_sweep(std::size_t steps);

// Every derived quantity; degenerate ones are recorded, not thrown.
TestReport build_report(const ScreeningTest& test);

// Throws DegenerateTestError naming the offending test, and
// InconsistencyError if the grid ordering contradicts the analytic sign.
ComparisonReport compare_tests(const ScreeningTest& first, const ScreeningTest& second,
                               double eps_tol = 1e-9);

// Sign of rho2(phi) - rho1(phi) on (0,1): the sign of LR2 - LR1, evaluated
// as a2 c1 - a1 c2 without division.
int analytic_dominance_sign(const ScreeningTest& first, const ScreeningTest& second) noexcept;

}  // namespace screening
