#include "seqforage/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seqforage/errors.hpp"

namespace seqforage {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

double log_add_exp(double u, double v) {
    if (u == kNegInf) return v;
    if (v == kNegInf) return u;
    const double hi = std::max(u, v);
    const double lo = std::min(u, v);
    return hi + std::log1p(std::exp(lo - hi));
}

// ln[(a e^x + b) / (c e^x + d)], evaluated in the log domain.
double log_ratio(double x, double a, double b, double c, double d) {
    const double num = log_add_exp(safe_log(a) + x, safe_log(b));
    const double den = log_add_exp(safe_log(c) + x, safe_log(d));
    if (num == den) return 0.0;  // also covers both -inf
    return num - den;
}

// Posterior llr for the aligned decision (decision sign equals belief sign)
// given |y|; `rewarded` selects the feedback branch.
double aligned_update(double abs_llr, bool rewarded, double epsilon, double q) {
    const double match = rewarded ? q : 1.0 - q;
    return log_ratio(abs_llr, (1.0 - epsilon) * match, epsilon * (1.0 - match), epsilon * match,
                     (1.0 - epsilon) * (1.0 - match));
}

}  // namespace

Belief Belief::from_llr(double llr) {
    if (std::isnan(llr)) throw InvalidBelief("llr is NaN");
    Belief b;
    b.saturated_ = !(std::abs(llr) <= kMaxLlr);
    b.llr_ = std::clamp(llr, -kMaxLlr, kMaxLlr);
    return b;
}

Belief Belief::from_likelihood(double p) { return from_llr(llr_from_likelihood(p)); }

namespace {

// For y > 0 the complement is formed first so p near 1 is rounded once.
double logistic(double y) noexcept {
    const double e = std::exp(-std::abs(y));
    const double small = e / (1.0 + e);
    return y > 0.0 ? 1.0 - small : small;
}

}  // namespace

double Belief::likelihood() const noexcept { return logistic(llr_); }

double likelihood_from_llr(double llr) {
    if (!std::isfinite(llr)) throw InvalidBelief("llr must be finite");
    return logistic(llr);
}

double llr_from_likelihood(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DegenerateBelief("likelihood must lie in (0, 1), got " + std::to_string(p));
    }
    return std::log(p) - std::log1p(-p);
}

double evidence_increment(double h) { return std::log(h / (1.0 - h)); }

Belief llr_within_trial_update(Belief belief, Observation obs, double h) {
    const double step = evidence_increment(h);
    return Belief::from_llr(obs == Observation::Plus ? belief.llr() + step : belief.llr() - step);
}

Belief prior_across_trial_update(Belief belief, Decision d, Feedback r, double epsilon, double q) {
    return Belief::from_llr(prior_across_trial_llr(belief.llr(), d, r, epsilon, q));
}

double prior_across_trial_llr(double y, Decision d, Feedback r, double epsilon, double q) {
    if (std::isnan(y)) throw InvalidBelief("llr is NaN");
    // y = 0 is grouped with s+, so (s-, r) and (s+, flip r) coincide bit for bit.
    const int belief_sign = y >= 0.0 ? 1 : -1;
    const bool aligned = sign(d) == belief_sign;
    const Feedback effective = aligned ? r : flip(r);
    const double magnitude = aligned_update(std::abs(y), effective == Feedback::Reward, epsilon, q);
    return belief_sign * magnitude;
}

BeliefTransfer belief_transfer_distribution(double p, double h) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DegenerateBelief("belief transfer needs p in (0, 1), got " + std::to_string(p));
    }
    BeliefTransfer t{};
    t.up_prob = p * h + (1.0 - p) * (1.0 - h);
    t.down_prob = p * (1.0 - h) + (1.0 - p) * h;
    t.up_likelihood = h * p / (h * p + (1.0 - h) * (1.0 - p));
    t.down_likelihood = (1.0 - h) * p / ((1.0 - h) * p + h * (1.0 - p));
    return t;
}

double reward_probability(double p, Decision d, double q) {
    const double correct = d == Decision::SPlus ? p : 1.0 - p;
    return correct * q + (1.0 - correct) * (1.0 - q);
}

}  // namespace seqforage
