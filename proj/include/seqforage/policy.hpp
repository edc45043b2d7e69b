#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "seqforage/belief.hpp"
#include "seqforage/env_params.hpp"

namespace seqforage {

enum class Objective : std::uint8_t { Rewardmax, Infomax };
enum class Action : std::uint8_t { CommitPlus, CommitMinus, Sample };
enum class Interpolation : std::uint8_t { Linear };
enum class TieBreak : std::uint8_t { PreferCommit };

std::string_view to_string(Objective objective) noexcept;
std::string_view to_string(Action action) noexcept;
Objective parse_objective(std::string_view text);
Action parse_action(std::string_view text);

constexpr bool is_commit(Action a) noexcept { return a != Action::Sample; }
constexpr Decision decision_of(Action a) noexcept {
    return a == Action::CommitMinus ? Decision::SMinus : Decision::SPlus;
}
constexpr Action commit_action(Decision d) noexcept {
    return d == Decision::SPlus ? Action::CommitPlus : Action::CommitMinus;
}
constexpr Action mirror(Action a) noexcept {
    switch (a) {
        case Action::CommitPlus: return Action::CommitMinus;
        case Action::CommitMinus: return Action::CommitPlus;
        case Action::Sample: return Action::Sample;
    }
    return a;
}

/// Belief-axis discretization and action selection options.
///
/// The axis is uniform in llr over [-kMaxLlr, kMaxLlr]. On top of the uniform
/// nodes, the beliefs reachable from the neutral prior are inserted row by row
/// (elapsed time) until `max_reachable_nodes` would be exceeded; values at
/// those beliefs then need no interpolation of their own successors. Set the
/// cap to 0 for a purely uniform grid.
struct DPConfig {
    int grid_points = 1201;
    Interpolation interpolation = Interpolation::Linear;
    TieBreak tie_break = TieBreak::PreferCommit;
    std::size_t max_reachable_nodes = 20000;

    void validate() const;

    friend bool operator==(const DPConfig&, const DPConfig&) = default;
};

/// Commit costs tau_d; affordable while it fits in the remaining budget.
bool commit_affordable(const EnvParams& env, int k) noexcept;
/// Sampling must leave room for a commitment afterwards, so the final action
/// of every realization is a commit.
bool sample_affordable(const EnvParams& env, int k) noexcept;

/// Solved utilities and actions, indexed by elapsed time k = 0..N and belief
/// node. Row N (and any row where no commit fits) has utility 0.
class ValueTable {
public:
    ValueTable() = default;

    /// Assemble a table from stored parts (used by the CSV loader). Validates
    /// shapes, node ordering and finiteness.
    static ValueTable from_parts(Objective objective, const EnvParams& env, const DPConfig& dp,
                                 std::vector<double> llr_nodes, std::vector<double> utility,
                                 std::vector<Action> actions);

    bool solved() const noexcept { return solved_; }
    Objective objective() const noexcept { return objective_; }
    const EnvParams& env() const noexcept { return env_; }
    const DPConfig& dp() const noexcept { return dp_; }
    int horizon() const noexcept { return env_.budget_n; }
    std::size_t size() const noexcept { return nodes_.size(); }

    std::span<const double> llr_nodes() const noexcept { return nodes_; }
    double likelihood(std::size_t node) const { return likelihood_from_llr(nodes_.at(node)); }
    double utility(int k, std::size_t node) const;
    Action action(int k, std::size_t node) const;
    std::span<const double> utility_row(int k) const;
    std::span<const Action> action_row(int k) const;

    /// Linear interpolation of row k at `llr` (clamped to the axis).
    double interpolate(int k, double llr) const;
    /// Index of the node closest to `llr` in llr distance.
    std::size_t nearest(double llr) const;

private:
    friend ValueTable solve_policy(Objective, const EnvParams&, const DPConfig&);

    void require_solved() const;
    void require_row(int k) const;

    Objective objective_ = Objective::Rewardmax;
    EnvParams env_{};
    DPConfig dp_{};
    std::vector<double> nodes_;
    std::vector<double> utility_;
    std::vector<Action> actions_;
    bool solved_ = false;
};

/// Binary entropy in bits; 0 log 0 = 0.
double entropy(double p);

/// Entropy of the belief with log-odds `llr`, without forming 1 - p, so it
/// keeps full relative precision for large |llr| (0 at infinity).
double entropy_from_llr(double llr);

/// Utility of the better commitment with nothing after it.
double terminal_rewardmax_utility(double p, const EnvParams& env);

// Per-action utilities at likelihood p and elapsed time k, reading the
// continuation from `table` (which must be solved for the later rows).
double rewardmax_commit_utility(double p, int k, Decision d, const ValueTable& table);
double rewardmax_sample_utility(double p, int k, const ValueTable& table);
double infomax_commit_utility(double p, int k, Decision d, const ValueTable& table);
double infomax_sample_utility(double p, int k, const ValueTable& table);

/// Backward induction from k = N down to 0.
ValueTable solve_policy(Objective objective, const EnvParams& env, const DPConfig& dp = {});

struct QueryResult {
    Action action;
    double utility;
};

/// Utility interpolated in llr; action from the nearest node.
QueryResult query(const ValueTable& table, Belief belief, int k);

/// Beliefs reachable from llr 0 by any action sequence, grouped by elapsed
/// row, truncated to whole rows so the total stays within `cap`. Exposed for
/// tests and diagnostics.
std::vector<double> reachable_beliefs(const EnvParams& env, std::size_t cap);

}  // namespace seqforage
