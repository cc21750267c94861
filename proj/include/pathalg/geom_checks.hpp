#pragma once

// Seeded randomized suites over the geometry module.

#include <cstdint>
#include <thread>
#include <vector>

#include "pathalg/report.hpp"

namespace pathalg::geom {

struct TrialConfig {
    int trials = 200;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<int> dims{1, 2, 3};
};

// Seed of one trial; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t root, int trial);

CheckReport concat_check(const TrialConfig& cfg);
CheckReport halfcircle_check(const TrialConfig& cfg);  // also geodesic period and antipodes
CheckReport yk_check(const TrialConfig& cfg, int max_k = 3);
CheckReport hopf_check(const TrialConfig& cfg);

// Runs fn(trial) for trial in [0, trials) on up to `jobs` threads; results
// come back in trial order.
template <class Fn>
auto run_trials(int trials, int jobs, Fn fn) -> std::vector<decltype(fn(0))>
{
    std::vector<decltype(fn(0))> out(static_cast<std::size_t>(trials));
    int workers = std::max(1, std::min(jobs, trials));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int t = w; t < trials; t += workers)
                out[static_cast<std::size_t>(t)] = fn(t);
        });
    for (auto& th : pool)
        th.join();
    return out;
}

}  // namespace pathalg::geom
