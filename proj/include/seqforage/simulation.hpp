#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "seqforage/belief.hpp"
#include "seqforage/metrics.hpp"
#include "seqforage/policy.hpp"
#include "seqforage/records.hpp"
#include "seqforage/rng.hpp"

namespace seqforage {

// Single draws. `step` selects the draw within the stream; each function
// uses its own channel.
Feedback draw_feedback(Decision d, EnvState s, double q, const CounterRng& rng, std::uint32_t step);
EnvState advance_state(EnvState s, double epsilon, const CounterRng& rng, std::uint32_t step);
Observation draw_observation(EnvState s, double h, const CounterRng& rng, std::uint32_t step);

/// Plays the table's policy from the neutral prior until no commitment fits
/// in the remaining budget.
RealizationRecord run_realization(const ValueTable& table, const EnvParams& env, std::uint64_t seed);

/// Which policy moves the shared trajectory in an alignment run.
enum class AlignmentDriver : std::uint8_t { Rewardmax, Infomax, Random };

std::string_view to_string(AlignmentDriver driver) noexcept;
AlignmentDriver parse_driver(std::string_view text);

/// Records both tables' actions at every (belief, time) of one trajectory
/// driven by `driver`. `table_rm` plays the rewardmax role and `table_im` the
/// infomax role; either may hold any objective (self-alignment controls).
AlignmentRecord run_aligned_pair(const ValueTable& table_rm, const ValueTable& table_im, const EnvParams& env,
                                 std::uint64_t seed, AlignmentDriver driver = AlignmentDriver::Rewardmax);

/// Realization i uses realization_seed(master_seed, i).
EnsembleSummary run_ensemble(const ValueTable& table, const EnvParams& env, std::size_t n_realizations,
                             std::uint64_t master_seed, unsigned workers = 1);

std::vector<RealizationRecord> run_records(const ValueTable& table, const EnvParams& env, std::size_t n_realizations,
                                           std::uint64_t master_seed);

struct AlignmentSummary {
    std::size_t n = 0;
    double alignment_mean = 0.0;  ///< mean over realizations of the per-trajectory alignment
};

AlignmentSummary run_alignment_ensemble(const ValueTable& table_rm, const ValueTable& table_im, const EnvParams& env,
                                        std::size_t n_realizations, std::uint64_t master_seed,
                                        AlignmentDriver driver = AlignmentDriver::Rewardmax, unsigned workers = 1);

}  // namespace seqforage
