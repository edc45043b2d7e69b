#pragma once

#include <span>
#include <vector>

namespace seqforage {

/// Points (q, epsilon) where the expected llr change from feedback at a
/// neutral belief equals the change from one sample.
struct BoundaryCurve {
    struct Point {
        double q;
        double epsilon;
    };
    double h = 0.75;
    std::vector<Point> points;  ///< sorted by q ascending
};

/// |ln[((1-e)q + e(1-q)) / (e q + (1-e)(1-q))]|
double expected_feedback_llr_gain(double epsilon, double q);

/// |ln(h / (1-h))|; throws DomainError for h = 1 (or h = 0).
double sampling_llr_gain(double h);

/// Both sides of (1-h)[(1-e)q + e(1-q)] = h[e q + (1-e)(1-q)].
struct BoundarySides {
    double lhs;
    double rhs;
};
BoundarySides boundary_sides(double h, double epsilon, double q);

/// Solves the boundary equation for epsilon at each q. Points outside
/// epsilon in [0, 0.5] (or with no solution) are dropped. Throws DomainError
/// for h outside (0.5, 1) and for q outside [0.5, 1].
BoundaryCurve phase_boundary(double h, std::span<const double> q_grid);

}  // namespace seqforage
