#pragma once

// Seeded Monte Carlo cohort: an empirical oracle for ppv and LR+.
//
// Subject i draws from Philox4x32-10 with key = seed and counter
// (i_lo, i_hi, stream, 0). Word pair 0/1 decides disease status
// (u < phi); word pair 2/3 decides the test result (u < a if diseased,
// u < 1 - b otherwise).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "screening/curve_core.hpp"

namespace screening {

struct CohortResult {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t true_pos = 0;
    std::uint64_t false_pos = 0;
    std::uint64_t true_neg = 0;
    std::uint64_t false_neg = 0;
    std::optional<double> empirical_ppv;
    std::optional<double> empirical_lr_plus;
    std::string ppv_reason;  // why empirical_ppv is absent
    std::string lr_reason;   // why empirical_lr_plus is absent

    std::uint64_t positives() const noexcept { return true_pos + false_pos; }
    std::uint64_t diseased() const noexcept { return true_pos + false_neg; }
    std::uint64_t healthy() const noexcept { return false_pos + true_neg; }

    friend bool operator==(const CohortResult&, const CohortResult&) = default;
};

struct EmpiricalPoint {
    Prevalence phi;
    std::optional<double> ppv;
    std::uint64_t positives = 0;
    std::string reason;  // set when ppv is absent (zero positives)
};

// threads = 0 uses the hardware concurrency. The result is identical for
// every thread count.
CohortResult simulate_cohort(const ScreeningTest& test, Prevalence phi, std::uint64_t n,
                             std::uint64_t seed, unsigned threads = 1);

// Seed for grid point `index`, derived from the base seed through the same
// generator on a reserved counter lane.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// One cohort per grid point (values in (0,1)), n_per_point >= 100.
std::vector<EmpiricalPoint> empirical_ppv_curve(const ScreeningTest& test,
                                                const std::vector<Prevalence>& grid,
                                                std::uint64_t n_per_point, std::uint64_t seed);

}  // namespace screening
