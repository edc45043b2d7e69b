#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seqforage/env_params.hpp"
#include "seqforage/policy.hpp"
#include "seqforage/records.hpp"

namespace seqforage {

/// Maximal runs of commitments (either side) and of samples.
struct BurstStats {
    std::vector<int> commit_bursts;
    std::vector<int> sample_bursts;
    double mean_commit = 0.0;
    double mean_sample = 0.0;  ///< 0 when there is no sample burst
    double ratio = 0.0;        ///< mean_sample / mean_commit
};

BurstStats extract_bursts(std::span<const Action> actions);

double action_alignment(const AlignmentRecord& rec);

/// Total reward over the fixed budget N.
double empirical_reward_rate(const RealizationRecord& rec);

/// Mean over population standard deviation. `degenerate` is set when the
/// standard deviation is below 1e-12; `value` is then NaN.
struct Robustness {
    double value = 0.0;
    bool degenerate = false;
};

Robustness robustness(std::span<const double> rates);

struct EnsembleSummary {
    EnvParams env{};
    Objective objective = Objective::Rewardmax;
    std::size_t n = 0;
    double burst_ratio_mean = 0.0;  ///< mean over realizations of the per-realization ratio
    std::vector<double> reward_rates;
    double rate_mean = 0.0;
    double rate_std = 0.0;  ///< population standard deviation
    Robustness kappa;
    std::size_t sample_actions = 0;
    std::size_t total_actions = 0;
};

/// Per-realization quantities an ensemble summary is reduced from.
struct RealizationStats {
    double burst_ratio = 0.0;
    double reward_rate = 0.0;
    std::size_t samples = 0;
    std::size_t actions = 0;
};

RealizationStats realization_stats(const RealizationRecord& rec);

/// Reduction in realization order; the result does not depend on how the
/// stats were produced.
EnsembleSummary summarize(Objective objective, const EnvParams& env, std::span<const RealizationStats> stats);

struct Differentials {
    double delta_rho = 0.0;
    Robustness delta_kappa;  ///< degenerate when either side is
};

Differentials differentials(const EnsembleSummary& rm, const EnsembleSummary& im);

}  // namespace seqforage
