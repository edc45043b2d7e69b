#include "seqforage/metrics.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "seqforage/errors.hpp"

namespace seqforage {

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::ObservationPlus: return "obs_plus";
        case Outcome::ObservationMinus: return "obs_minus";
        case Outcome::Reward: return "reward";
        case Outcome::Punish: return "punish";
    }
    return "?";
}

std::vector<Action> RealizationRecord::actions() const {
    std::vector<Action> out;
    out.reserve(steps.size());
    for (const Step& s : steps) out.push_back(s.action);
    return out;
}

namespace {

double mean_of(const std::vector<int>& v) {
    if (v.empty()) return 0.0;
    return static_cast<double>(std::accumulate(v.begin(), v.end(), 0)) / static_cast<double>(v.size());
}

}  // namespace

BurstStats extract_bursts(std::span<const Action> actions) {
    if (actions.empty()) throw DomainError("burst extraction needs at least one action");
    BurstStats s;
    bool run_is_commit = is_commit(actions.front());
    int run = 0;
    auto close_run = [&] { (run_is_commit ? s.commit_bursts : s.sample_bursts).push_back(run); };
    for (Action a : actions) {
        if (is_commit(a) != run_is_commit) {
            close_run();
            run_is_commit = is_commit(a);
            run = 0;
        }
        ++run;
    }
    close_run();
    s.mean_commit = mean_of(s.commit_bursts);
    s.mean_sample = mean_of(s.sample_bursts);
    s.ratio = s.mean_commit > 0.0 ? s.mean_sample / s.mean_commit : 0.0;
    return s;
}

double action_alignment(const AlignmentRecord& rec) {
    if (rec.pairs.empty()) throw DomainError("alignment record has no steps");
    std::size_t same = 0;
    for (const AlignedStep& p : rec.pairs) same += p.action_rm == p.action_im ? 1 : 0;
    return static_cast<double>(same) / static_cast<double>(rec.pairs.size());
}

double empirical_reward_rate(const RealizationRecord& rec) {
    return rec.total_reward / static_cast<double>(rec.env.budget_n);
}

namespace {

struct Moments {
    double mean = 0.0;
    double std = 0.0;
};

Moments population_moments(std::span<const double> xs) {
    Moments m;
    if (xs.empty()) return m;
    const double n = static_cast<double>(xs.size());
    m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.std = std::sqrt(ss / n);
    return m;
}

Robustness kappa_from(const Moments& m) {
    if (m.std < 1e-12) return {std::numeric_limits<double>::quiet_NaN(), true};
    return {m.mean / m.std, false};
}

}  // namespace

Robustness robustness(std::span<const double> rates) {
    if (rates.size() < 2) throw DomainError("robustness needs at least two reward rates");
    return kappa_from(population_moments(rates));
}

RealizationStats realization_stats(const RealizationRecord& rec) {
    RealizationStats s;
    const std::vector<Action> actions = rec.actions();
    s.actions = actions.size();
    for (Action a : actions) s.samples += a == Action::Sample ? 1 : 0;
    s.burst_ratio = actions.empty() ? 0.0 : extract_bursts(actions).ratio;
    s.reward_rate = empirical_reward_rate(rec);
    return s;
}

EnsembleSummary summarize(Objective objective, const EnvParams& env, std::span<const RealizationStats> stats) {
    EnsembleSummary out;
    out.env = env;
    out.objective = objective;
    out.n = stats.size();
    out.reward_rates.reserve(stats.size());
    double ratio_sum = 0.0;
    for (const RealizationStats& s : stats) {
        ratio_sum += s.burst_ratio;
        out.reward_rates.push_back(s.reward_rate);
        out.sample_actions += s.samples;
        out.total_actions += s.actions;
    }
    if (!stats.empty()) out.burst_ratio_mean = ratio_sum / static_cast<double>(stats.size());
    const Moments m = population_moments(out.reward_rates);
    out.rate_mean = m.mean;
    out.rate_std = m.std;
    out.kappa = stats.size() >= 2 ? kappa_from(m) : Robustness{std::numeric_limits<double>::quiet_NaN(), true};
    return out;
}

Differentials differentials(const EnsembleSummary& rm, const EnsembleSummary& im) {
    if (!(rm.env == im.env)) {
        throw ConfigError("env", "differentials need summaries of the same environment");
    }
    Differentials d;
    d.delta_rho = (rm.rate_mean - im.rate_mean) / rm.env.r_plus;
    if (rm.kappa.degenerate || im.kappa.degenerate) {
        d.delta_kappa = {std::numeric_limits<double>::quiet_NaN(), true};
    } else {
        d.delta_kappa = {rm.kappa.value - im.kappa.value, false};
    }
    return d;
}

}  // namespace seqforage
