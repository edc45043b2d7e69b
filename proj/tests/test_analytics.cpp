#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqforage/analytics.hpp"
#include "seqforage/errors.hpp"

using namespace seqforage;

TEST_SUITE("analytics") {

TEST_CASE("feedback gain") {
    for (double q : {0.5, 0.7, 0.99}) CHECK(expected_feedback_llr_gain(0.5, q) == 0.0);
    for (double e : {0.0, 0.2, 0.5}) CHECK(expected_feedback_llr_gain(e, 0.5) == 0.0);
    for (double q : {0.6, 0.8, 0.95}) {
        CHECK(expected_feedback_llr_gain(0.0, q) == doctest::Approx(std::log(q / (1.0 - q))).epsilon(1e-14));
    }
    CHECK(std::isinf(expected_feedback_llr_gain(0.0, 1.0)));
}

TEST_CASE("sampling gain") {
    CHECK(sampling_llr_gain(0.5) == 0.0);
    CHECK(sampling_llr_gain(0.75) == doctest::Approx(1.098612).epsilon(1e-6));
    for (double h : {0.55, 0.75, 0.9}) CHECK(sampling_llr_gain(h) == doctest::Approx(sampling_llr_gain(1.0 - h)));
    CHECK_THROWS_AS(sampling_llr_gain(1.0), DomainError);
}

TEST_CASE("phase boundary") {
    const std::vector<double> one{1.0};
    const BoundaryCurve c = phase_boundary(0.75, one);
    REQUIRE(c.points.size() == 1);
    CHECK(c.points[0].q == 1.0);
    CHECK(c.points[0].epsilon == 0.25);

    const std::vector<double> half{0.5};
    CHECK(phase_boundary(0.75, half).points.empty());
    CHECK_THROWS_AS(phase_boundary(0.5, one), DomainError);
    CHECK_THROWS_AS(phase_boundary(1.0, one), DomainError);
    const std::vector<double> bad{1.1};
    CHECK_THROWS_AS(phase_boundary(0.75, bad), DomainError);

    std::vector<double> grid;
    for (int i = 20; i >= 0; --i) grid.push_back(0.5 + 0.025 * i);  // descending on purpose
    for (double h : {0.55, 0.75, 0.95}) {
        const BoundaryCurve curve = phase_boundary(h, grid);
        CHECK(curve.h == h);
        CHECK_FALSE(curve.points.empty());
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            const auto [q, e] = curve.points[i];
            if (i > 0) CHECK(curve.points[i - 1].q < q);
            CHECK(e >= 0.0);
            CHECK(e <= 0.5);
            const BoundarySides s = boundary_sides(h, e, q);
            CHECK(std::abs(s.lhs - s.rhs) < 1e-10);
            if (q < 1.0) CHECK(std::abs(expected_feedback_llr_gain(e, q) - sampling_llr_gain(h)) < 1e-10);
        }
    }
}

}  // TEST_SUITE
