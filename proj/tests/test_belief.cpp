#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "seqforage/belief.hpp"
#include "seqforage/errors.hpp"

using namespace seqforage;

namespace {

const double kLn3 = std::log(3.0);

// One step of an event sequence: an observation or a commitment with feedback.
struct Event {
    bool is_obs;
    int obs;  // +1 / -1
    Decision d;
    Feedback r;
};

std::vector<Event> alphabet() {
    std::vector<Event> ev{{true, +1, Decision::SPlus, Feedback::Reward}, {true, -1, Decision::SPlus, Feedback::Reward}};
    for (Decision d : {Decision::SPlus, Decision::SMinus})
        for (Feedback r : {Feedback::Reward, Feedback::Punish}) ev.push_back({false, 0, d, r});
    return ev;
}

}  // namespace

TEST_SUITE("belief") {

TEST_CASE("within-trial update examples") {
    const Belief b0 = Belief::from_llr(0.0);
    CHECK(llr_within_trial_update(b0, Observation::Plus, 0.75).llr() == doctest::Approx(1.098612).epsilon(1e-6));
    for (double y : {-3.0, 0.0, 0.7, 12.0}) {
        CHECK(llr_within_trial_update(Belief::from_llr(y), Observation::Minus, 0.5).llr() == y);
        CHECK(llr_within_trial_update(Belief::from_llr(y), Observation::Plus, 0.5).llr() == y);
    }
    const Belief up = llr_within_trial_update(b0, Observation::Plus, 0.75);
    CHECK(llr_within_trial_update(up, Observation::Minus, 0.75).llr() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("across-trial update examples") {
    for (double y : {-4.0, 0.0, 2.5})
        for (Decision d : {Decision::SPlus, Decision::SMinus})
            for (Feedback r : {Feedback::Reward, Feedback::Punish})
                CHECK(prior_across_trial_update(Belief::from_llr(y), d, r, 0.5, 0.8).llr() == doctest::Approx(0.0));

    CHECK(prior_across_trial_update(Belief::from_llr(0.0), Decision::SPlus, Feedback::Reward, 0.2, 0.5).llr() ==
          doctest::Approx(0.0));

    const double y1 = prior_across_trial_update(Belief::from_llr(kLn3), Decision::SPlus, Feedback::Reward, 0.1, 0.8).llr();
    CHECK(y1 == doctest::Approx(std::log(2.18 / 0.42)).epsilon(1e-12));
    CHECK(y1 == doctest::Approx(1.646826).epsilon(1e-6));  // ln(2.18/0.42); the quoted 1.64678 is a rounding slip

    for (double y : {0.3, 2.0, 7.5}) {
        for (double q : {0.6, 0.8, 0.95}) {
            const double got = prior_across_trial_update(Belief::from_llr(y), Decision::SPlus, Feedback::Reward, 0.0, q).llr();
            CHECK(got == doctest::Approx(y + std::log(q / (1.0 - q))).epsilon(1e-12));
        }
    }
}

TEST_CASE("likelihood conversions") {
    CHECK(likelihood_from_llr(0.0) == 0.5);
    CHECK(likelihood_from_llr(kLn3) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(likelihood_from_llr(-kLn3) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(llr_from_likelihood(0.0), DegenerateBelief);
    CHECK_THROWS_AS(llr_from_likelihood(1.0), DegenerateBelief);
    CHECK_THROWS_AS(likelihood_from_llr(std::nan("")), InvalidBelief);

    // p is a double, so near the clamp its spacing bounds the round trip:
    // |dy| <= ulp(p) / (2 p (1 - p)), about 1.8e-10 at |y| = 15.
    double worst_inner = 0.0;
    double worst_outer = 0.0;
    for (int i = -3000; i <= 3000; ++i) {
        const double y = i * 0.005;
        const double err = std::abs(llr_from_likelihood(likelihood_from_llr(y)) - y);
        double& slot = std::abs(y) <= 12.0 ? worst_inner : worst_outer;
        slot = std::max(slot, err);
    }
    CHECK(worst_inner < 1e-10);
    CHECK(worst_outer < 2e-10);
}

TEST_CASE("belief transfer examples") {
    const BeliefTransfer a = belief_transfer_distribution(0.5, 0.75);
    CHECK(a.up_likelihood == doctest::Approx(0.75));
    CHECK(a.up_prob == doctest::Approx(0.5));
    CHECK(a.down_likelihood == doctest::Approx(0.25));
    CHECK(a.down_prob == doctest::Approx(0.5));

    const BeliefTransfer b = belief_transfer_distribution(0.75, 0.75);
    CHECK(b.up_likelihood == doctest::Approx(0.9));
    CHECK(b.up_prob == doctest::Approx(0.625));
    CHECK(b.down_likelihood == doctest::Approx(0.5));
    CHECK(b.down_prob == doctest::Approx(0.375));

    for (double p : {0.1, 0.5, 0.93}) {
        const BeliefTransfer c = belief_transfer_distribution(p, 0.5);
        CHECK(c.up_likelihood == doctest::Approx(p));
        CHECK(c.down_likelihood == doctest::Approx(p));
        CHECK(c.up_prob == doctest::Approx(0.5));
    }
    CHECK_THROWS_AS(belief_transfer_distribution(0.0, 0.75), DegenerateBelief);
    CHECK_THROWS_AS(belief_transfer_distribution(1.0, 0.75), DegenerateBelief);
}

TEST_CASE("belief transfer: normalization, ordering, martingale") {
    for (double h : {0.5, 0.6, 0.75, 0.9, 0.99}) {
        for (int i = 1; i < 200; ++i) {
            const double p = i / 200.0;
            const BeliefTransfer t = belief_transfer_distribution(p, h);
            CHECK(std::abs(t.up_prob + t.down_prob - 1.0) <= 1e-12);
            CHECK(t.up_likelihood >= t.down_likelihood);
            CHECK(std::abs(t.up_prob * t.up_likelihood + t.down_prob * t.down_likelihood - p) <= 1e-10);
        }
    }
}

TEST_CASE("observation sequences match brute-force posteriors") {
    for (double h : {0.55, 0.75, 0.9}) {
        double worst = 0.0;
        for (int len = 1; len <= 6; ++len) {
            for (int code = 0; code < (1 << len); ++code) {
                Belief b;
                oracle::Weights w;
                for (int j = 0; j < len; ++j) {
                    const int obs = (code >> j) & 1 ? +1 : -1;
                    b = llr_within_trial_update(b, obs > 0 ? Observation::Plus : Observation::Minus, h);
                    w = oracle::observe(w, obs, h);
                }
                worst = std::max(worst, std::abs(b.llr() - w.llr()));
            }
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("mixed observation / feedback sequences match brute-force posteriors") {
    struct P {
        double eps, q, h;
    };
    const std::vector<Event> ev = alphabet();
    const int m = static_cast<int>(ev.size());
    for (const P& prm : {P{0.1, 0.8, 0.75}, P{0.05, 0.95, 0.9}, P{0.3, 0.6, 0.55}, P{0.0, 0.9, 0.75},
                         P{0.5, 0.7, 0.8}, P{0.2, 0.5, 0.75}, P{0.45, 0.99, 0.6}}) {
        double worst = 0.0;
        std::vector<int> idx;
        for (int len = 1; len <= 6; ++len) {
            idx.assign(static_cast<std::size_t>(len), 0);
            while (true) {
                Belief b;
                oracle::Weights w;
                for (int j : idx) {
                    const Event& e = ev[static_cast<std::size_t>(j)];
                    if (e.is_obs) {
                        b = llr_within_trial_update(b, e.obs > 0 ? Observation::Plus : Observation::Minus, prm.h);
                        w = oracle::observe(w, e.obs, prm.h);
                    } else {
                        b = prior_across_trial_update(b, e.d, e.r, prm.eps, prm.q);
                        w = oracle::feedback(w, sign(e.d), e.r == Feedback::Reward, prm.eps, prm.q);
                    }
                    // keep the weights in range; only their ratio matters
                    const double s = w.plus + w.minus;
                    w = {w.plus / s, w.minus / s};
                }
                worst = std::max(worst, std::abs(b.llr() - w.llr()));
                int j = 0;
                while (j < len && ++idx[static_cast<std::size_t>(j)] == m) idx[static_cast<std::size_t>(j++)] = 0;
                if (j == len) break;
            }
        }
        INFO("eps=" << prm.eps << " q=" << prm.q << " h=" << prm.h);
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("across-trial update matches marginalization on a grid") {
    double worst = 0.0;
    for (double y = -10.0; y <= 10.0; y += 0.25) {
        for (double eps : {0.0, 0.01, 0.1, 0.25, 0.4, 0.5}) {
            for (double q : {0.5, 0.55, 0.7, 0.9, 0.99}) {
                for (Decision d : {Decision::SPlus, Decision::SMinus}) {
                    for (Feedback r : {Feedback::Reward, Feedback::Punish}) {
                        const double got = prior_across_trial_update(Belief::from_llr(y), d, r, eps, q).llr();
                        // weights from the llr directly, so |y| = 10 keeps full precision
                        const oracle::Weights w = oracle::feedback({1.0, std::exp(-y)}, sign(d), r == Feedback::Reward, eps, q);
                        worst = std::max(worst, std::abs(got - w.llr()));
                    }
                }
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("antisymmetry") {
    for (double y = -15.0; y <= 15.0; y += 0.37) {
        for (double eps : {0.0, 0.1, 0.3}) {
            for (double q : {0.5, 0.8, 0.97}) {
                for (Decision d : {Decision::SPlus, Decision::SMinus}) {
                    for (Feedback r : {Feedback::Reward, Feedback::Punish}) {
                        const double a = prior_across_trial_update(Belief::from_llr(-y), flip(d), r, eps, q).llr();
                        const double b = prior_across_trial_update(Belief::from_llr(y), d, r, eps, q).llr();
                        CHECK(a == -b);
                    }
                }
            }
        }
    }
    // y = 0 itself, where the sign convention matters
    for (Feedback r : {Feedback::Reward, Feedback::Punish}) {
        CHECK(prior_across_trial_update(Belief{}, Decision::SMinus, r, 0.1, 0.8).llr() ==
              -prior_across_trial_update(Belief{}, Decision::SPlus, r, 0.1, 0.8).llr());
    }
}

TEST_CASE("saturation bound") {
    for (double eps : {0.01, 0.05, 0.2, 0.5}) {
        for (double q : {0.5, 0.7, 0.95, 0.999}) {
            const double bound = std::log((1.0 - eps) / eps) + std::log(q / (1.0 - q));
            for (double y = -15.0; y <= 15.0; y += 0.1) {
                for (Decision d : {Decision::SPlus, Decision::SMinus}) {
                    for (Feedback r : {Feedback::Reward, Feedback::Punish}) {
                        CHECK(std::abs(prior_across_trial_update(Belief::from_llr(y), d, r, eps, q).llr()) <=
                              bound + 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("clamp and saturation flag") {
    CHECK_THROWS_AS(Belief::from_llr(std::nan("")), InvalidBelief);
    const Belief b = llr_within_trial_update(Belief::from_llr(14.5), Observation::Plus, 0.75);
    CHECK(b.llr() == kMaxLlr);
    CHECK(b.saturated());
    CHECK_FALSE(Belief::from_llr(3.0).saturated());

    // epsilon = 0 at the clamp keeps growing: the result clamps and flags
    const Belief top = prior_across_trial_update(Belief::from_llr(kMaxLlr), Decision::SPlus, Feedback::Reward, 0.0, 0.9);
    CHECK(top.llr() == kMaxLlr);
    CHECK(top.saturated());
    const Belief bottom = prior_across_trial_update(Belief::from_llr(-kMaxLlr), Decision::SMinus, Feedback::Reward, 0.0, 0.9);
    CHECK(bottom.llr() == -kMaxLlr);
    CHECK(bottom.saturated());

    // no overflow at the clamp for any parameters
    for (double eps : {0.0, 1e-9, 0.3})
        for (double q : {0.5, 0.9, 1.0})
            for (Feedback r : {Feedback::Reward, Feedback::Punish})
                CHECK(std::isfinite(prior_across_trial_update(Belief::from_llr(kMaxLlr), Decision::SPlus, r, eps, q).llr()));
}

TEST_CASE("reward probability") {
    CHECK(reward_probability(0.9, Decision::SPlus, 0.8) == doctest::Approx(0.9 * 0.8 + 0.1 * 0.2));
    CHECK(reward_probability(0.9, Decision::SMinus, 0.8) == doctest::Approx(0.1 * 0.8 + 0.9 * 0.2));
    CHECK(reward_probability(0.3, Decision::SPlus, 0.5) == doctest::Approx(0.5));
}

}  // TEST_SUITE
