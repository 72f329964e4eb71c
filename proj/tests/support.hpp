#pragma once

// Helpers shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace screening::testing {

inline bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(std::abs(want), 1e-300);
}

// Fixed-seed generator for hand-rolled property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    // Open interval (0,1).
    double open_unit() {
        double u = 0.0;
        while (u == 0.0) u = uniform(0.0, 1.0);
        return u;
    }

private:
    std::mt19937_64 engine_;
};

// Central difference of f at x with step h.
template <class F>
double central_difference(const F& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace screening::testing
