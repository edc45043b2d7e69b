#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "seqforage/belief.hpp"
#include "seqforage/env_params.hpp"
#include "seqforage/policy.hpp"

namespace seqforage {

enum class Outcome : std::uint8_t { ObservationPlus, ObservationMinus, Reward, Punish };

std::string_view to_string(Outcome outcome) noexcept;

struct Step {
    int time = 0;  ///< elapsed steps when the action started
    Action action = Action::CommitPlus;
    double llr_before = 0.0;
    double llr_after = 0.0;
    EnvState hidden_state = EnvState::SPlus;  ///< state while the action was taken
    Outcome outcome = Outcome::Reward;
    double reward = 0.0;
};

/// One agent's trajectory over the budget.
struct RealizationRecord {
    std::uint64_t seed = 0;
    EnvParams env{};
    std::vector<Step> steps;
    double total_reward = 0.0;
    int decision_time = 0;        ///< T_t: steps spent sampling
    int inter_decision_time = 0;  ///< T_i: commitment steps plus any unspendable remainder

    std::vector<Action> actions() const;
};

struct AlignedStep {
    int time = 0;
    double llr = 0.0;
    Action action_rm = Action::CommitPlus;
    Action action_im = Action::CommitPlus;
};

/// Both policies' prescriptions along one shared belief trajectory.
struct AlignmentRecord {
    std::uint64_t seed = 0;
    EnvParams env{};
    std::vector<AlignedStep> pairs;
};

}  // namespace seqforage
