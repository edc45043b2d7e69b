#include "seqforage/simulation.hpp"

#include <string>

#include "seqforage/errors.hpp"
#include "seqforage/parallel.hpp"

namespace seqforage {

Feedback draw_feedback(Decision d, EnvState s, double q, const CounterRng& rng, std::uint32_t step) {
    const double p_reward = d == s ? q : 1.0 - q;
    return rng.bernoulli(p_reward, step, Channel::Feedback) ? Feedback::Reward : Feedback::Punish;
}

EnvState advance_state(EnvState s, double epsilon, const CounterRng& rng, std::uint32_t step) {
    return rng.bernoulli(epsilon, step, Channel::Transition) ? flip(s) : s;
}

Observation draw_observation(EnvState s, double h, const CounterRng& rng, std::uint32_t step) {
    const bool matches = rng.bernoulli(h, step, Channel::Observation);
    const bool plus = (s == EnvState::SPlus) == matches;
    return plus ? Observation::Plus : Observation::Minus;
}

namespace {

struct Walker {
    const EnvParams& env;
    CounterRng rng;
    EnvState state;
    Belief belief{};
    int time = 0;

    Walker(const EnvParams& e, std::uint64_t seed)
        : env(e),
          rng(seed),
          state(rng.uniform(0, Channel::InitialState) < 0.5 ? EnvState::SPlus : EnvState::SMinus) {}

    bool can_act() const { return commit_affordable(env, time); }

    Step apply(Action action) {
        Step step;
        step.time = time;
        step.action = action;
        step.llr_before = belief.llr();
        step.hidden_state = state;
        const auto t = static_cast<std::uint32_t>(time);
        if (action == Action::Sample) {
            if (!sample_affordable(env, time)) throw StateError("policy sampled with no room left to commit");
            const Observation obs = draw_observation(state, env.h, rng, t);
            belief = llr_within_trial_update(belief, obs, env.h);
            step.outcome = obs == Observation::Plus ? Outcome::ObservationPlus : Outcome::ObservationMinus;
            time += env.tau_s;
        } else {
            const Decision d = decision_of(action);
            const Feedback r = draw_feedback(d, state, env.q, rng, t);
            step.reward = r == Feedback::Reward ? env.r_plus : env.r_minus;
            step.outcome = r == Feedback::Reward ? Outcome::Reward : Outcome::Punish;
            belief = prior_across_trial_update(belief, d, r, env.epsilon, env.q);
            state = advance_state(state, env.epsilon, rng, t);
            time += env.tau_d;
        }
        step.llr_after = belief.llr();
        return step;
    }
};

void require_table(const ValueTable& table, const EnvParams& env) {
    if (!table.solved()) throw StateError("value table has not been solved");
    if (!(table.env() == env)) {
        throw StateError("table was solved for a different environment (" + describe(table.env()) + ")");
    }
}

}  // namespace

RealizationRecord run_realization(const ValueTable& table, const EnvParams& env, std::uint64_t seed) {
    require_table(table, env);
    RealizationRecord rec;
    rec.seed = seed;
    rec.env = env;
    rec.steps.reserve(static_cast<std::size_t>(env.budget_n));
    Walker walker(env, seed);
    while (walker.can_act()) {
        const Step step = walker.apply(query(table, walker.belief, walker.time).action);
        rec.total_reward += step.reward;
        if (step.action == Action::Sample) rec.decision_time += env.tau_s;
        rec.steps.push_back(step);
    }
    rec.inter_decision_time = env.budget_n - rec.decision_time;
    return rec;
}

std::string_view to_string(AlignmentDriver driver) noexcept {
    switch (driver) {
        case AlignmentDriver::Rewardmax: return "rewardmax";
        case AlignmentDriver::Infomax: return "infomax";
        case AlignmentDriver::Random: return "random";
    }
    return "?";
}

AlignmentDriver parse_driver(std::string_view text) {
    if (text == "rewardmax") return AlignmentDriver::Rewardmax;
    if (text == "infomax") return AlignmentDriver::Infomax;
    if (text == "random") return AlignmentDriver::Random;
    throw ConfigError("driver", "unknown alignment driver '" + std::string(text) + "'");
}

AlignmentRecord run_aligned_pair(const ValueTable& table_rm, const ValueTable& table_im, const EnvParams& env,
                                 std::uint64_t seed, AlignmentDriver driver) {
    if (!table_rm.solved() || !table_im.solved()) throw StateError("value table has not been solved");
    if (!(table_rm.env() == env) || !(table_im.env() == env)) {
        throw ConfigError("env", "alignment tables must be solved for the same environment");
    }
    AlignmentRecord rec;
    rec.seed = seed;
    rec.env = env;
    Walker walker(env, seed);
    while (walker.can_act()) {
        const Action rm = query(table_rm, walker.belief, walker.time).action;
        const Action im = query(table_im, walker.belief, walker.time).action;
        rec.pairs.push_back({walker.time, walker.belief.llr(), rm, im});
        Action next = rm;
        if (driver == AlignmentDriver::Infomax) {
            next = im;
        } else if (driver == AlignmentDriver::Random) {
            const bool sample_ok = sample_affordable(env, walker.time);
            const double u = walker.rng.uniform(static_cast<std::uint32_t>(walker.time), Channel::Driver);
            const int choice = static_cast<int>(u * (sample_ok ? 3.0 : 2.0));
            next = choice == 0 ? Action::CommitPlus : choice == 1 ? Action::CommitMinus : Action::Sample;
        }
        walker.apply(next);
    }
    return rec;
}

EnsembleSummary run_ensemble(const ValueTable& table, const EnvParams& env, std::size_t n_realizations,
                             std::uint64_t master_seed, unsigned workers) {
    require_table(table, env);
    if (n_realizations < 1) throw ConfigError("n_realizations", "must be at least 1");
    std::vector<RealizationStats> stats(n_realizations);
    parallel_for(n_realizations, workers, [&](std::size_t i) {
        stats[i] = realization_stats(run_realization(table, env, realization_seed(master_seed, i)));
    });
    return summarize(table.objective(), env, stats);
}

std::vector<RealizationRecord> run_records(const ValueTable& table, const EnvParams& env, std::size_t n_realizations,
                                           std::uint64_t master_seed) {
    std::vector<RealizationRecord> out;
    out.reserve(n_realizations);
    for (std::size_t i = 0; i < n_realizations; ++i) {
        out.push_back(run_realization(table, env, realization_seed(master_seed, i)));
    }
    return out;
}

AlignmentSummary run_alignment_ensemble(const ValueTable& table_rm, const ValueTable& table_im, const EnvParams& env,
                                        std::size_t n_realizations, std::uint64_t master_seed,
                                        AlignmentDriver driver, unsigned workers) {
    if (n_realizations < 1) throw ConfigError("n_realizations", "must be at least 1");
    std::vector<double> per(n_realizations, 0.0);
    parallel_for(n_realizations, workers, [&](std::size_t i) {
        const AlignmentRecord rec = run_aligned_pair(table_rm, table_im, env, realization_seed(master_seed, i), driver);
        per[i] = rec.pairs.empty() ? 1.0 : action_alignment(rec);
    });
    AlignmentSummary out;
    out.n = n_realizations;
    double sum = 0.0;
    for (double a : per) sum += a;
    out.alignment_mean = sum / static_cast<double>(n_realizations);
    return out;
}

}  // namespace seqforage
