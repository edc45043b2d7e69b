#pragma once

// Grid-free reference computations used by the unit and acceptance tests.
// Nothing here calls the library's update or utility code: posteriors come
// from unnormalized joint weights over the hidden state, entropies from p.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "seqforage/env_params.hpp"
#include "seqforage/policy.hpp"

namespace oracle {

// Unnormalized P(current state, data so far).
struct Weights {
    double plus = 0.5;
    double minus = 0.5;

    double p() const { return plus / (plus + minus); }
    double llr() const { return std::log(plus) - std::log(minus); }
};

inline Weights from_p(double p) { return {p, 1.0 - p}; }

inline Weights observe(Weights w, int obs, double h) {
    return {w.plus * (obs > 0 ? h : 1.0 - h), w.minus * (obs > 0 ? 1.0 - h : h)};
}

// Decision d (+1 / -1) answered by feedback, then the state persists with
// probability 1 - eps. Marginalizes over (s_i, s_{i+1}) directly.
inline Weights feedback(Weights w, int d, bool rewarded, double eps, double q) {
    const double like_plus = ((d > 0) == rewarded) ? q : 1.0 - q;   // P(r | s_i = +)
    const double like_minus = ((d < 0) == rewarded) ? q : 1.0 - q;  // P(r | s_i = -)
    const double a = w.plus * like_plus;
    const double b = w.minus * like_minus;
    return {a * (1.0 - eps) + b * eps, a * eps + b * (1.0 - eps)};
}

inline double h2(double p) {
    double v = 0.0;
    if (p > 0.0) v -= p * std::log2(p);
    if (p < 1.0) v -= (1.0 - p) * std::log2(1.0 - p);
    return v;
}

// Exhaustive expectimax over the outcome tree, from the budget rules alone:
// a commit fits while k + tau_d <= N, a sample while k + tau_s + tau_d <= N;
// with no commit left the value is 0. An infomax commit after which no commit
// fits gains nothing.
class Expectimax {
public:
    Expectimax(seqforage::Objective objective, const seqforage::EnvParams& env) : obj_(objective), env_(env) {}

    struct Options {
        double commit_plus = 0.0;
        double commit_minus = 0.0;
        double sample = 0.0;
        bool can_commit = false;
        bool can_sample = false;
    };

    double value(double p, int k) const {
        const Options o = options(p, k);
        if (!o.can_commit) return 0.0;
        double v = std::max(o.commit_plus, o.commit_minus);
        if (o.can_sample) v = std::max(v, o.sample);
        return v;
    }

    Options options(double p, int k) const {
        Options o;
        const int n = env_.budget_n;
        o.can_commit = k + env_.tau_d <= n;
        o.can_sample = k + env_.tau_s + env_.tau_d <= n;
        if (!o.can_commit) return o;
        o.commit_plus = commit(p, k, +1);
        o.commit_minus = commit(p, k, -1);
        if (o.can_sample) o.sample = sample(p, k);
        return o;
    }

    // Calls visit(p, k) at every belief the tree can reach from (p0, 0).
    void walk(double p0, const std::function<void(double, int)>& visit) const { walk_from(from_p(p0), 0, visit); }

private:
    double commit(double p, int k, int d) const {
        const double q = env_.q;
        const double eps = env_.epsilon;
        const double correct = d > 0 ? p : 1.0 - p;
        const double a = correct * q + (1.0 - correct) * (1.0 - q);
        const double p_r = feedback(from_p(p), d, true, eps, q).p();
        const double p_x = feedback(from_p(p), d, false, eps, q).p();
        const int kc = k + env_.tau_d;
        // zero-probability outcomes (q = 1) have no defined posterior
        const double v_r = a > 0.0 ? value(p_r, kc) : 0.0;
        const double v_x = a < 1.0 ? value(p_x, kc) : 0.0;
        if (obj_ == seqforage::Objective::Rewardmax) {
            return a * (env_.r_plus + env_.gamma * v_r) + (1.0 - a) * (env_.r_minus + env_.gamma * v_x);
        }
        if (kc + env_.tau_d > env_.budget_n) return 0.0;
        const double base = p * (1.0 - eps) + (1.0 - p) * eps;
        const double h_r = a > 0.0 ? a * h2(p_r) : 0.0;
        const double h_x = a < 1.0 ? (1.0 - a) * h2(p_x) : 0.0;
        return h2(base) - h_r - h_x + env_.gamma * (a * v_r + (1.0 - a) * v_x);
    }

    double sample(double p, int k) const {
        const double h = env_.h;
        const double up = p * h + (1.0 - p) * (1.0 - h);
        const double p_up = observe(from_p(p), +1, h).p();
        const double p_dn = observe(from_p(p), -1, h).p();
        const int ks = k + env_.tau_s;
        const double future = up * value(p_up, ks) + (1.0 - up) * value(p_dn, ks);
        if (obj_ == seqforage::Objective::Rewardmax) return env_.gamma * future;
        return h2(p) - up * h2(p_up) - (1.0 - up) * h2(p_dn) + env_.gamma * future;
    }

    void walk_from(Weights w, int k, const std::function<void(double, int)>& visit) const {
        const double p = w.p();
        visit(p, k);
        const int n = env_.budget_n;
        if (k + env_.tau_d > n) return;
        for (int d : {+1, -1}) {
            for (bool r : {true, false}) {
                const Weights next = feedback(w, d, r, env_.epsilon, env_.q);
                if (next.plus + next.minus > 0.0) walk_from(from_p(next.p()), k + env_.tau_d, visit);
            }
        }
        if (k + env_.tau_s + env_.tau_d <= n) {
            for (int obs : {+1, -1}) walk_from(from_p(observe(w, obs, env_.h).p()), k + env_.tau_s, visit);
        }
    }

    seqforage::Objective obj_;
    seqforage::EnvParams env_;
};

// Largest |table - expectimax| over every belief reachable from p = 1/2.
inline double max_gap(const seqforage::ValueTable& table) {
    const Expectimax ex(table.objective(), table.env());
    double worst = 0.0;
    ex.walk(0.5, [&](double p, int k) {
        const double y = std::log(p) - std::log1p(-p);
        worst = std::max(worst, std::abs(table.interpolate(k, y) - ex.value(p, k)));
    });
    return worst;
}

}  // namespace oracle
