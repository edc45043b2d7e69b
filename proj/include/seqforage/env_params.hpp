#pragma once

#include <string>

namespace seqforage {

/// Task parameterization shared by the solver and the simulator.
struct EnvParams {
    double epsilon = 0.1;     ///< per-decision state-change probability
    double q = 0.8;           ///< feedback reliability (reward given a correct choice)
    double h = 0.75;          ///< probability an observation matches the hidden state
    double r_plus = 100.0;    ///< payoff on rewarded feedback
    double r_minus = -100.0;  ///< payoff on punished feedback
    int tau_d = 1;            ///< time steps consumed by a commitment
    int tau_s = 1;            ///< time steps consumed by a sample
    int budget_n = 10;        ///< total time-step budget
    double gamma = 1.0;       ///< discount on future utility

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    friend bool operator==(const EnvParams&, const EnvParams&) = default;
};

std::string describe(const EnvParams& env);

}  // namespace seqforage
