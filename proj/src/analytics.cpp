#include "seqforage/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqforage/errors.hpp"

namespace seqforage {

double expected_feedback_llr_gain(double epsilon, double q) {
    const double num = (1.0 - epsilon) * q + epsilon * (1.0 - q);
    const double den = epsilon * q + (1.0 - epsilon) * (1.0 - q);
    if (num == den) return 0.0;
    return std::abs(std::log(num / den));
}

double sampling_llr_gain(double h) {
    if (!(h > 0.0 && h < 1.0)) throw DomainError("sampling gain is infinite for h = " + std::to_string(h));
    return std::abs(std::log(h / (1.0 - h)));
}

BoundarySides boundary_sides(double h, double epsilon, double q) {
    return {(1.0 - h) * ((1.0 - epsilon) * q + epsilon * (1.0 - q)),
            h * (epsilon * q + (1.0 - epsilon) * (1.0 - q))};
}

BoundaryCurve phase_boundary(double h, std::span<const double> q_grid) {
    if (!(h > 0.5 && h < 1.0)) {
        throw DomainError("phase boundary needs h in (0.5, 1); at h = 0.5 every (q, epsilon) satisfies it");
    }
    BoundaryCurve curve;
    curve.h = h;
    for (double q : q_grid) {
        if (!(q >= 0.5 && q <= 1.0)) throw DomainError("q outside [0.5, 1]: " + std::to_string(q));
        // Expanding both sides, the equation is linear in epsilon:
        //   (1-h) q - h (1-q) = epsilon (2q - 1) [(1-h) + h]
        // so epsilon = (q - h) / (2q - 1). At q = 1/2 feedback carries no
        // information and there is no solution.
        const double slope = 2.0 * q - 1.0;
        if (slope <= 0.0) continue;
        const double epsilon = (q - h) / slope;
        if (epsilon < 0.0 || epsilon > 0.5) continue;
        curve.points.push_back({q, epsilon});
    }
    std::sort(curve.points.begin(), curve.points.end(),
              [](const BoundaryCurve::Point& a, const BoundaryCurve::Point& b) { return a.q < b.q; });
    return curve;
}

}  // namespace seqforage
