#include "screening/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "screening/errors.hpp"

namespace screening {

namespace {

void require_integrable(const ScreeningTest& test) {
    if (test.sensitivity() == 0.0) {
        throw DegenerateTestError("area under the curve requires sensitivity > 0");
    }
    if (test.false_positive_rate() == 0.0) {
        throw DegenerateTestError("area under the curve requires specificity < 1");
    }
}

// (r - ln(1+r)) / r^2. Below |r| = 0.1 the log form loses digits to
// cancellation, so sum 1/2 - r/3 + r^2/4 - ... instead.
double area_kernel(double r) {
    if (std::abs(r) < 0.1) {
        double sum = 0.0;
        double power = 1.0;
        for (int k = 0; k < 40; ++k) {
            const double term = power / (k + 2);
            sum += term;
            if (std::abs(term) < 1e-18) break;
            power *= -r;
        }
        return sum;
    }
    return (r - std::log1p(r)) / (r * r);
}

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// weights (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleEstimate {
    double kronrod;
    double gauss;
};

template <class F>
RuleEstimate gauss_kronrod(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {kronrod * half, gauss * half};
}

template <class F>
double adaptive(const F& f, double lo, double hi, double tol, int depth, int max_depth) {
    const RuleEstimate est = gauss_kronrod(f, lo, hi);
    if (std::abs(est.kronrod - est.gauss) <= tol) {
        return est.kronrod;
    }
    if (depth >= max_depth) {
        throw NonConvergenceError("adaptive quadrature hit the refinement depth limit of " +
                                  std::to_string(max_depth));
    }
    const double mid = 0.5 * (lo + hi);
    return adaptive(f, lo, mid, 0.5 * tol, depth + 1, max_depth) +
           adaptive(f, mid, hi, 0.5 * tol, depth + 1, max_depth);
}

template <class T, class F>
Quantity<T> capture(F&& compute) {
    try {
        return {compute(), {}};
    } catch (const DomainError& e) {
        return {std::nullopt, e.what()};
    }
}

// Grid ordering of rho2 - rho1 at phi_k = k/1001, k = 1..1000. Differences
// within a few ulps count as ties.
int grid_dominance_sign(const ScreeningTest& first, const ScreeningTest& second) {
    constexpr int kGrid = 1000;
    bool second_above = false;
    bool first_above = false;
    for (int k = 1; k <= kGrid; ++k) {
        const Prevalence phi(static_cast<double>(k) / (kGrid + 1));
        const double r1 = ppv(first, phi);
        const double r2 = ppv(second, phi);
        const double tie = 4.0 * std::numeric_limits<double>::epsilon() * std::max(r1, r2);
        if (r2 - r1 > tie) second_above = true;
        if (r1 - r2 > tie) first_above = true;
    }
    if (second_above && first_above) {
        throw InconsistencyError("screening curves cross on the comparison grid");
    }
    return second_above ? 1 : (first_above ? -1 : 0);
}

Dominance from_sign(int sign) {
    return sign > 0 ? Dominance::second : (sign < 0 ? Dominance::first : Dominance::neither);
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

void require_comparable(const ScreeningTest& test, const char* label) {
    try {
        require_integrable(test);
    } catch (const DegenerateTestError& e) {
        throw DegenerateTestError(std::string(label) + ": " + e.what());
    }
}

}  // namespace

const char* to_string(Dominance d) noexcept {
    switch (d) {
        case Dominance::first: return "first";
        case Dominance::second: return "second";
        case Dominance::neither: return "neither";
    }
    return "neither";
}

double auc_closed_form(const ScreeningTest& test) {
    require_integrable(test);
    const double a = test.sensitivity();
    const double c = test.false_positive_rate();
    const double r = (a - c) / c;
    return (a / c) * area_kernel(r);
}

double auc_quadrature(const ScreeningTest& test, double tol, int max_depth) {
    require_integrable(test);
    if (!(tol >= 1e-13)) {
        throw InvalidParameterError("tol", "quadrature tolerance must be >= 1e-13");
    }
    const auto integrand = [&test](double phi) { return ppv(test, Prevalence(phi)); };
    return adaptive(integrand, 0.0, 1.0, tol, 0, max_depth);
}

std::vector<SweepPoint> fts_limit_sweep(std::size_t steps) {
    if (steps < 1) {
        throw InvalidParameterError("steps", "limit sweep needs at least one step");
    }
    std::vector<SweepPoint> sweep;
    sweep.reserve(steps);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double v = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
        const ScreeningTest test(v, v);
        sweep.push_back({epsilon(test), auc_closed_form(test)});
    }
    return sweep;
}

TestReport build_report(const ScreeningTest& test) {
    return TestReport{
        test,
        epsilon(test),
        capture<ThresholdPoint>([&] { return prevalence_threshold(test); }),
        capture<BetaGeometry>([&] { return beta_geometry(test); }),
        capture<double>([&] { return lr_positive_direct(test); }),
        capture<double>([&] { return auc_closed_form(test); }),
        capture<Line>([&] { return endpoint_chord_line(test); }),
    };
}

int analytic_dominance_sign(const ScreeningTest& first, const ScreeningTest& second) noexcept {
    const double lhs = second.sensitivity() * first.false_positive_rate();
    const double rhs = first.sensitivity() * second.false_positive_rate();
    return sign_of(lhs - rhs);
}

ComparisonReport compare_tests(const ScreeningTest& first, const ScreeningTest& second,
                               double eps_tol) {
    require_comparable(first, "test 1");
    require_comparable(second, "test 2");

    TestReport r1 = build_report(first);
    TestReport r2 = build_report(second);

    const int grid = grid_dominance_sign(first, second);
    const int analytic = analytic_dominance_sign(first, second);
    // A grid tie is acceptable when the curves differ below double resolution.
    if (grid != 0 && grid != analytic) {
        throw InconsistencyError("grid ordering of the screening curves contradicts the LR+ sign");
    }

    const bool equal_epsilon = std::abs(r1.epsilon - r2.epsilon) <= eps_tol;
    const bool reversed_regime = equal_epsilon && r1.epsilon < 1.0;
    const double beta_margin = r2.beta->beta - r1.beta->beta;
    const double auc_margin = *r2.auc - *r1.auc;

    ComparisonReport report{
        std::move(r1),
        std::move(r2),
        equal_epsilon,
        reversed_regime,
        from_sign(grid),
        {from_sign(-sign_of(beta_margin)), beta_margin},
        {from_sign(sign_of(auc_margin)), auc_margin},
    };
    return report;
}

}  // namespace screening
