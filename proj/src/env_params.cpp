#include "seqforage/env_params.hpp"

#include <cmath>
#include <sstream>

#include "seqforage/errors.hpp"

namespace seqforage {

namespace {

void require_range(const char* field, double value, double lo, double hi) {
    if (!std::isfinite(value) || value < lo || value > hi) {
        std::ostringstream os;
        os << "value " << value << " outside [" << lo << ", " << hi << "]";
        throw ConfigError(field, os.str());
    }
}

void require_positive(const char* field, int value) {
    if (value < 1) {
        throw ConfigError(field, "must be a positive integer, got " + std::to_string(value));
    }
}

}  // namespace

void EnvParams::validate() const {
    require_range("epsilon", epsilon, 0.0, 0.5);
    require_range("q", q, 0.5, 1.0);
    require_range("h", h, 0.5, 1.0);
    if (!std::isfinite(r_plus)) throw ConfigError("r_plus", "must be finite");
    if (!std::isfinite(r_minus)) throw ConfigError("r_minus", "must be finite");
    require_positive("tau_d", tau_d);
    require_positive("tau_s", tau_s);
    require_positive("budget_n", budget_n);
    require_range("gamma", gamma, 0.0, 1.0);
}

std::string describe(const EnvParams& env) {
    std::ostringstream os;
    os << "epsilon=" << env.epsilon << " q=" << env.q << " h=" << env.h << " r_plus=" << env.r_plus
       << " r_minus=" << env.r_minus << " tau_d=" << env.tau_d << " tau_s=" << env.tau_s
       << " budget_n=" << env.budget_n << " gamma=" << env.gamma;
    return os.str();
}

}  // namespace seqforage
