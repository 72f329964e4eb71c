#include "screening/cohort_sim.hpp"

#include <algorithm>
#include <thread>

#include "screening/errors.hpp"
#include "screening/philox.hpp"

namespace screening {

namespace {

constexpr std::uint32_t kSubjectStream = 0;
constexpr std::uint32_t kSeedLane = 0xFFFFFFFFu;

struct Tally {
    std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
};

Tally simulate_range(const rng::Philox4x32& gen, double phi, double sens, double fpr,
                     std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
        const auto w = gen({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32),
                            kSubjectStream, 0});
        const bool diseased = rng::to_unit_double(w[0], w[1]) < phi;
        const double u = rng::to_unit_double(w[2], w[3]);
        if (diseased) {
            (u < sens ? t.tp : t.fn) += 1;
        } else {
            (u < fpr ? t.fp : t.tn) += 1;
        }
    }
    return t;
}

}  // namespace

CohortResult simulate_cohort(const ScreeningTest& test, Prevalence phi, std::uint64_t n,
                             std::uint64_t seed, unsigned threads) {
    if (n < 1) {
        throw InvalidParameterError("n", "cohort size must be at least 1");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));

    const rng::Philox4x32 gen(seed);
    const double p = phi.value();
    const double sens = test.sensitivity();
    const double fpr = test.false_positive_rate();

    std::vector<Tally> parts(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = n * t / threads;
            const std::uint64_t end = n * (t + 1) / threads;
            workers.emplace_back([&, t, begin, end] {
                parts[t] = simulate_range(gen, p, sens, fpr, begin, end);
            });
        }
    }

    CohortResult r;
    r.n = n;
    r.seed = seed;
    for (const Tally& t : parts) {
        r.true_pos += t.tp;
        r.false_pos += t.fp;
        r.true_neg += t.tn;
        r.false_neg += t.fn;
    }

    if (r.positives() > 0) {
        r.empirical_ppv = static_cast<double>(r.true_pos) / static_cast<double>(r.positives());
    } else {
        r.ppv_reason = "no positive test results";
    }

    if (r.diseased() == 0) {
        r.lr_reason = "no diseased subjects";
    } else if (r.healthy() == 0) {
        r.lr_reason = "no healthy subjects";
    } else if (r.false_pos == 0) {
        r.lr_reason = "no false positives (LR+ unbounded)";
    } else if (r.true_pos == 0) {
        r.lr_reason = "no true positives (LR+ is 0)";
    } else {
        const double tpr = static_cast<double>(r.true_pos) / static_cast<double>(r.diseased());
        const double fpr_hat = static_cast<double>(r.false_pos) / static_cast<double>(r.healthy());
        r.empirical_lr_plus = tpr / fpr_hat;
    }
    return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    const rng::Philox4x32 gen(seed);
    const auto w = gen({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                        kSeedLane, kSeedLane});
    return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

std::vector<EmpiricalPoint> empirical_ppv_curve(const ScreeningTest& test,
                                                const std::vector<Prevalence>& grid,
                                                std::uint64_t n_per_point, std::uint64_t seed) {
    if (n_per_point < 100) {
        throw InvalidParameterError("n_per_point", "empirical curve needs at least 100 subjects per point");
    }
    std::vector<EmpiricalPoint> curve;
    curve.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Prevalence phi = grid[i];
        if (phi.value() <= 0.0 || phi.value() >= 1.0) {
            throw InvalidParameterError("grid", "empirical curve grid values must lie in (0,1)");
        }
        const CohortResult cohort =
            simulate_cohort(test, phi, n_per_point, derive_seed(seed, i));
        curve.push_back({phi, cohort.empirical_ppv, cohort.positives(), cohort.ppv_reason});
    }
    return curve;
}

}  // namespace screening
