#include "seqforage/policy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "seqforage/errors.hpp"

namespace seqforage {

std::string_view to_string(Objective objective) noexcept {
    return objective == Objective::Rewardmax ? "rewardmax" : "infomax";
}

std::string_view to_string(Action action) noexcept {
    switch (action) {
        case Action::CommitPlus: return "commit_plus";
        case Action::CommitMinus: return "commit_minus";
        case Action::Sample: return "sample";
    }
    return "?";
}

Objective parse_objective(std::string_view text) {
    if (text == "rewardmax") return Objective::Rewardmax;
    if (text == "infomax") return Objective::Infomax;
    throw ConfigError("objective", "unknown objective '" + std::string(text) + "'");
}

Action parse_action(std::string_view text) {
    if (text == "commit_plus") return Action::CommitPlus;
    if (text == "commit_minus") return Action::CommitMinus;
    if (text == "sample") return Action::Sample;
    throw ConfigError("action", "unknown action '" + std::string(text) + "'");
}

void DPConfig::validate() const {
    if (grid_points < 201 || grid_points % 2 == 0) {
        throw ConfigError("grid_points",
                          "must be odd and at least 201, got " + std::to_string(grid_points));
    }
}

bool commit_affordable(const EnvParams& env, int k) noexcept {
    return k >= 0 && k + env.tau_d <= env.budget_n;
}

bool sample_affordable(const EnvParams& env, int k) noexcept {
    return k >= 0 && k + env.tau_s + env.tau_d <= env.budget_n;
}

// ---------------------------------------------------------------------------
// ValueTable

ValueTable ValueTable::from_parts(Objective objective, const EnvParams& env, const DPConfig& dp,
                                  std::vector<double> llr_nodes, std::vector<double> utility,
                                  std::vector<Action> actions) {
    env.validate();
    const std::size_t rows = static_cast<std::size_t>(env.budget_n) + 1;
    if (llr_nodes.size() < 2) throw StateError("table needs at least two nodes");
    if (utility.size() != rows * llr_nodes.size() || actions.size() != utility.size()) {
        throw StateError("table utility/action shape does not match rows x nodes");
    }
    if (!std::is_sorted(llr_nodes.begin(), llr_nodes.end()) ||
        std::adjacent_find(llr_nodes.begin(), llr_nodes.end()) != llr_nodes.end()) {
        throw StateError("table nodes must be strictly increasing");
    }
    if (llr_nodes.front() != -kMaxLlr || llr_nodes.back() != kMaxLlr) {
        throw StateError("table nodes must span [-kMaxLlr, kMaxLlr]");
    }
    if (!std::all_of(utility.begin(), utility.end(), [](double u) { return std::isfinite(u); })) {
        throw StateError("table utilities must be finite");
    }
    ValueTable t;
    t.objective_ = objective;
    t.env_ = env;
    t.dp_ = dp;
    t.nodes_ = std::move(llr_nodes);
    t.utility_ = std::move(utility);
    t.actions_ = std::move(actions);
    t.solved_ = true;
    return t;
}

void ValueTable::require_solved() const {
    if (!solved_) throw StateError("value table has not been solved");
}

void ValueTable::require_row(int k) const {
    require_solved();
    if (k < 0 || k > env_.budget_n) {
        throw OutOfHorizon("time index " + std::to_string(k) + " outside [0, " +
                           std::to_string(env_.budget_n) + "]");
    }
}

double ValueTable::utility(int k, std::size_t node) const {
    require_row(k);
    return utility_.at(static_cast<std::size_t>(k) * nodes_.size() + node);
}

Action ValueTable::action(int k, std::size_t node) const {
    require_row(k);
    return actions_.at(static_cast<std::size_t>(k) * nodes_.size() + node);
}

std::span<const double> ValueTable::utility_row(int k) const {
    require_row(k);
    return std::span<const double>(utility_).subspan(static_cast<std::size_t>(k) * nodes_.size(),
                                                     nodes_.size());
}

std::span<const Action> ValueTable::action_row(int k) const {
    require_row(k);
    return std::span<const Action>(actions_).subspan(static_cast<std::size_t>(k) * nodes_.size(),
                                                     nodes_.size());
}

namespace {

// Continuation value = (1 - w) * row[lo] + w * row[lo + 1]; w == 0 marks an
// exact node hit.
struct Stencil {
    std::uint32_t lo = 0;
    double w = 0.0;
};

Stencil locate(std::span<const double> nodes, double llr) {
    const double y = std::clamp(llr, nodes.front(), nodes.back());
    auto it = std::lower_bound(nodes.begin(), nodes.end(), y);
    const auto idx = static_cast<std::uint32_t>(it - nodes.begin());
    if (*it == y) return {idx, 0.0};
    const double lo = nodes[idx - 1];
    const double hi = nodes[idx];
    return {idx - 1, (y - lo) / (hi - lo)};
}

double interpolate_row(std::span<const double> row, Stencil s) {
    if (s.w == 0.0) return row[s.lo];
    return (1.0 - s.w) * row[s.lo] + s.w * row[s.lo + 1];
}

}  // namespace

double ValueTable::interpolate(int k, double llr) const {
    require_row(k);
    return interpolate_row(utility_row(k), locate(nodes_, llr));
}

std::size_t ValueTable::nearest(double llr) const {
    require_solved();
    const Stencil s = locate(nodes_, llr);
    return s.w <= 0.5 ? s.lo : s.lo + 1;
}

// ---------------------------------------------------------------------------
// Utilities

double entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("entropy needs p in [0, 1], got " + std::to_string(p));
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double entropy_from_llr(double llr) {
    if (std::isnan(llr)) throw InvalidBelief("llr is NaN");
    const double a = std::abs(llr);
    if (std::isinf(a)) return 0.0;
    const double t = std::exp(-a);
    return (std::log1p(t) + a * t / (1.0 + t)) / std::numbers::ln2;
}

double terminal_rewardmax_utility(double p, const EnvParams& env) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("likelihood outside [0, 1]");
    const double q = env.q;
    const double correct = q * env.r_plus + (1.0 - q) * env.r_minus;
    const double wrong = (1.0 - q) * env.r_plus + q * env.r_minus;
    return std::max(p * correct + (1.0 - p) * wrong, (1.0 - p) * correct + p * wrong);
}

namespace {

// Everything about one belief that does not depend on the time row: successor
// stencils and the one-step information terms.
struct BeliefModel {
    double p = 0.5;
    bool map_plus = true;
    // sampling
    double up_prob = 0.5;
    Stencil up, down;
    double sample_info_gain = 0.0;  // H(p) - E[H(p')]
    // committing to s+; committing to s- swaps the feedback labels
    double reward_prob_plus = 0.5;
    Stencil rewarded_plus, punished_plus;
    double commit_info_gain = 0.0;  // H(p + eps - 2 p eps) - E[H(p0)]
};

BeliefModel build_model(double llr, const EnvParams& env, std::span<const double> nodes) {
    const Belief b = Belief::from_llr(llr);
    BeliefModel m;
    m.p = b.likelihood();
    m.map_plus = b.llr() >= 0.0;

    const BeliefTransfer t = belief_transfer_distribution(m.p, env.h);
    const double step = evidence_increment(env.h);
    m.up_prob = t.up_prob;
    m.up = locate(nodes, Belief::from_llr(b.llr() + step).llr());
    m.down = locate(nodes, Belief::from_llr(b.llr() - step).llr());
    // Information terms use the unclamped posteriors; at the clamp the
    // clamped ones would make an informative outcome look like no change.
    const double h_now = entropy_from_llr(b.llr());
    m.sample_info_gain = h_now - (t.up_prob * entropy_from_llr(b.llr() + step) +
                                  t.down_prob * entropy_from_llr(b.llr() - step));

    const double y_rewarded = prior_across_trial_llr(b.llr(), Decision::SPlus, Feedback::Reward, env.epsilon, env.q);
    const double y_punished = prior_across_trial_llr(b.llr(), Decision::SPlus, Feedback::Punish, env.epsilon, env.q);
    m.reward_prob_plus = reward_probability(m.p, Decision::SPlus, env.q);
    m.rewarded_plus = locate(nodes, Belief::from_llr(y_rewarded).llr());
    m.punished_plus = locate(nodes, Belief::from_llr(y_punished).llr());
    // With q = 1/2 the feedback is pure noise and the next-trial likelihood
    // is p + eps - 2 p eps; that entropy is the baseline a commit must beat.
    const double y_baseline = prior_across_trial_llr(b.llr(), Decision::SPlus, Feedback::Reward, env.epsilon, 0.5);
    m.commit_info_gain = entropy_from_llr(y_baseline) - (m.reward_prob_plus * entropy_from_llr(y_rewarded) +
                                                         (1.0 - m.reward_prob_plus) * entropy_from_llr(y_punished));
    return m;
}

struct ActionValues {
    double commit_plus = 0.0;
    double commit_minus = 0.0;
    double sample = 0.0;
};

// Continuation utility at row k, zero beyond the budget.
double continuation(const ValueTable& table, std::span<const double> utility, std::size_t n_nodes,
                    int k, Stencil s) {
    if (k > table.horizon()) return 0.0;
    return interpolate_row(utility.subspan(static_cast<std::size_t>(k) * n_nodes, n_nodes), s);
}

ActionValues evaluate(const BeliefModel& m, int k, Objective objective, const EnvParams& env,
                      const ValueTable& table, std::span<const double> utility, std::size_t n_nodes) {
    const double gamma = env.gamma;
    const int kc = k + env.tau_d;
    const int ks = k + env.tau_s;
    const double a = m.reward_prob_plus;

    const double v_rewarded = continuation(table, utility, n_nodes, kc, m.rewarded_plus);
    const double v_punished = continuation(table, utility, n_nodes, kc, m.punished_plus);
    const double v_up = continuation(table, utility, n_nodes, ks, m.up);
    const double v_down = continuation(table, utility, n_nodes, ks, m.down);
    const double sample_future = m.up_prob * v_up + (1.0 - m.up_prob) * v_down;

    ActionValues v;
    if (objective == Objective::Rewardmax) {
        // For s-, "rewarded" lands on the belief s+ reaches when punished.
        v.commit_plus = a * (env.r_plus + gamma * v_rewarded) + (1.0 - a) * (env.r_minus + gamma * v_punished);
        v.commit_minus = (1.0 - a) * (env.r_plus + gamma * v_punished) + a * (env.r_minus + gamma * v_rewarded);
        v.sample = gamma * sample_future;
    } else {
        // Information gain does not depend on which side is chosen, so both
        // commitments share one value. A commitment that nothing can follow
        // gains nothing usable.
        const double commit =
            commit_affordable(env, kc) ? m.commit_info_gain + gamma * (a * v_rewarded + (1.0 - a) * v_punished) : 0.0;
        v.commit_plus = commit;
        v.commit_minus = commit;
        v.sample = m.sample_info_gain + gamma * sample_future;
    }
    return v;
}

bool ties(double a, double b) {
    return std::abs(a - b) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(b)});
}

QueryResult choose(const ActionValues& v, bool map_plus, bool commit_ok, bool sample_ok) {
    const Action map_commit = map_plus ? Action::CommitPlus : Action::CommitMinus;
    if (!commit_ok) return {map_commit, 0.0};
    QueryResult best{map_commit, std::max(v.commit_plus, v.commit_minus)};
    if (!ties(v.commit_plus, v.commit_minus)) {
        best.action = v.commit_plus > v.commit_minus ? Action::CommitPlus : Action::CommitMinus;
    }
    if (sample_ok && v.sample > best.utility && !ties(v.sample, best.utility)) {
        best = {Action::Sample, v.sample};
    }
    return best;
}

std::vector<double> uniform_nodes(int n) {
    std::vector<double> nodes(static_cast<std::size_t>(n));
    const double half = static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
        // Integer numerator keeps the axis exactly antisymmetric.
        nodes[static_cast<std::size_t>(i)] = kMaxLlr * static_cast<double>(2 * i - (n - 1)) / half;
    }
    return nodes;
}

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Generic path for the public per-action utilities.
ActionValues evaluate_at(double p, int k, const ValueTable& table) {
    if (!table.solved()) throw StateError("value table has not been solved");
    if (k < 0 || k > table.horizon()) throw OutOfHorizon("time index outside budget");
    const auto nodes = table.llr_nodes();
    const BeliefModel m = build_model(llr_from_likelihood(p), table.env(), nodes);
    // Rows are contiguous in the table; rebuild the full span from row 0.
    const std::span<const double> all(table.utility_row(0).data(),
                                      nodes.size() * static_cast<std::size_t>(table.horizon() + 1));
    return evaluate(m, k, table.objective(), table.env(), table, all, nodes.size());
}

void require_objective(const ValueTable& table, Objective objective) {
    if (table.solved() && table.objective() != objective) {
        throw StateError(std::string("table objective is ") + std::string(to_string(table.objective())));
    }
}

}  // namespace

double rewardmax_commit_utility(double p, int k, Decision d, const ValueTable& table) {
    require_objective(table, Objective::Rewardmax);
    const ActionValues v = evaluate_at(p, k, table);
    return d == Decision::SPlus ? v.commit_plus : v.commit_minus;
}

double rewardmax_sample_utility(double p, int k, const ValueTable& table) {
    require_objective(table, Objective::Rewardmax);
    return evaluate_at(p, k, table).sample;
}

double infomax_commit_utility(double p, int k, Decision d, const ValueTable& table) {
    require_objective(table, Objective::Infomax);
    const ActionValues v = evaluate_at(p, k, table);
    return d == Decision::SPlus ? v.commit_plus : v.commit_minus;
}

double infomax_sample_utility(double p, int k, const ValueTable& table) {
    require_objective(table, Objective::Infomax);
    return evaluate_at(p, k, table).sample;
}

std::vector<double> reachable_beliefs(const EnvParams& env, std::size_t cap) {
    env.validate();
    const int n = env.budget_n;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n) + 1);
    rows[0].push_back(0.0);
    std::vector<double> out;
    for (int k = 0; k <= n; ++k) {
        auto& row = rows[static_cast<std::size_t>(k)];
        sort_unique(row);
        if (out.size() + row.size() > cap) break;
        out.insert(out.end(), row.begin(), row.end());
        const bool commit_ok = commit_affordable(env, k);
        const bool sample_ok = sample_affordable(env, k);
        for (double y : row) {
            const Belief b = Belief::from_llr(y);
            if (sample_ok) {
                auto& next = rows[static_cast<std::size_t>(k + env.tau_s)];
                next.push_back(llr_within_trial_update(b, Observation::Plus, env.h).llr());
                next.push_back(llr_within_trial_update(b, Observation::Minus, env.h).llr());
            }
            if (commit_ok) {
                auto& next = rows[static_cast<std::size_t>(k + env.tau_d)];
                next.push_back(prior_across_trial_update(b, Decision::SPlus, Feedback::Reward, env.epsilon, env.q).llr());
                next.push_back(prior_across_trial_update(b, Decision::SPlus, Feedback::Punish, env.epsilon, env.q).llr());
            }
        }
        std::vector<double>().swap(row);
    }
    sort_unique(out);
    return out;
}

ValueTable solve_policy(Objective objective, const EnvParams& env, const DPConfig& dp) {
    env.validate();
    dp.validate();

    std::vector<double> nodes = uniform_nodes(dp.grid_points);
    if (dp.max_reachable_nodes > 0) {
        const std::vector<double> extra = reachable_beliefs(env, dp.max_reachable_nodes);
        nodes.insert(nodes.end(), extra.begin(), extra.end());
        sort_unique(nodes);
    }

    std::vector<BeliefModel> models;
    models.reserve(nodes.size());
    for (double y : nodes) models.push_back(build_model(y, env, nodes));

    ValueTable table;
    table.objective_ = objective;
    table.env_ = env;
    table.dp_ = dp;
    const std::size_t n_nodes = nodes.size();
    const int horizon = env.budget_n;
    table.nodes_ = std::move(nodes);
    table.utility_.assign(n_nodes * static_cast<std::size_t>(horizon + 1), 0.0);
    table.actions_.assign(table.utility_.size(), Action::CommitPlus);

    const std::span<const double> utility(table.utility_);
    for (int k = horizon; k >= 0; --k) {
        const bool commit_ok = commit_affordable(env, k);
        const bool sample_ok = sample_affordable(env, k);
        const std::size_t offset = static_cast<std::size_t>(k) * n_nodes;
        for (std::size_t i = 0; i < n_nodes; ++i) {
            const BeliefModel& m = models[i];
            QueryResult r{m.map_plus ? Action::CommitPlus : Action::CommitMinus, 0.0};
            if (commit_ok) {
                r = choose(evaluate(m, k, objective, env, table, utility, n_nodes), m.map_plus, commit_ok, sample_ok);
            }
            table.utility_[offset + i] = r.utility;
            table.actions_[offset + i] = r.action;
        }
    }
    table.solved_ = true;
    return table;
}

QueryResult query(const ValueTable& table, Belief belief, int k) {
    if (!table.solved()) throw StateError("value table has not been solved");
    if (k < 0 || k > table.horizon()) {
        throw OutOfHorizon("time index " + std::to_string(k) + " outside [0, " +
                           std::to_string(table.horizon()) + "]");
    }
    const auto nodes = table.llr_nodes();
    const Stencil s = locate(nodes, belief.llr());
    const auto row = table.utility_row(k);
    const std::size_t nearest = s.w <= 0.5 ? s.lo : s.lo + 1;
    return {table.action_row(k)[nearest], interpolate_row(row, s)};
}

}  // namespace seqforage
