#pragma once

#include <cstdint>

namespace seqforage {

/// Clamp bound on the log-likelihood ratio, in natural-log units.
inline constexpr double kMaxLlr = 15.0;

enum class Observation : std::int8_t { Plus = 1, Minus = -1 };
enum class Decision : std::int8_t { SPlus = 1, SMinus = -1 };
enum class Feedback : std::uint8_t { Reward, Punish };
using EnvState = Decision;  // hidden state takes the same two values as a decision

constexpr int sign(Decision d) noexcept { return static_cast<int>(d); }
constexpr Decision flip(Decision d) noexcept {
    return d == Decision::SPlus ? Decision::SMinus : Decision::SPlus;
}
constexpr Feedback flip(Feedback r) noexcept {
    return r == Feedback::Reward ? Feedback::Punish : Feedback::Reward;
}

/// Log-odds that the hidden state is s+. The llr is the ground truth; the
/// likelihood is derived on demand.
class Belief {
public:
    constexpr Belief() = default;

    /// Clamps to [-kMaxLlr, kMaxLlr] and records whether clamping occurred.
    /// Throws InvalidBelief on NaN. Infinities clamp (and saturate).
    static Belief from_llr(double llr);
    static Belief from_likelihood(double p);

    double llr() const noexcept { return llr_; }
    double likelihood() const noexcept;
    bool saturated() const noexcept { return saturated_; }

    friend bool operator==(const Belief& a, const Belief& b) noexcept { return a.llr_ == b.llr_; }

private:
    double llr_ = 0.0;
    bool saturated_ = false;
};

/// Two-atom distribution of the next likelihood after one Bernoulli sample.
struct BeliefTransfer {
    double up_likelihood;
    double up_prob;
    double down_likelihood;
    double down_prob;
};

double likelihood_from_llr(double llr);
double llr_from_likelihood(double p);

/// ln(h / (1 - h)); +inf for h = 1.
double evidence_increment(double h);

/// Within-trial update from one observation.
Belief llr_within_trial_update(Belief belief, Observation obs, double h);

/// Prior for the next trial after decision `d` received feedback `r`, then the
/// environment switched with probability epsilon.
Belief prior_across_trial_update(Belief belief, Decision d, Feedback r, double epsilon, double q);

/// The same posterior before clamping; infinite when the branch is certain.
double prior_across_trial_llr(double llr, Decision d, Feedback r, double epsilon, double q);

BeliefTransfer belief_transfer_distribution(double p, double h);

/// Probability of rewarded feedback when committing to `d` at likelihood p.
double reward_probability(double p, Decision d, double q);

}  // namespace seqforage
