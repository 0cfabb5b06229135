// Copyright 2026 The bilip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "bilip/circle.hpp"
#include "bilip/errors.hpp"
#include "bilip/testkit.hpp"
#include "doctest.h"

using namespace bilip;

namespace {

ClosedPLCurve ngon(int n, double rx = 1.0, double ry = 1.0) {
    std::vector<double> as;
    std::vector<Point2> ps;
    for (int i = 0; i < n; ++i) {
        const double a = kTwoPi * i / n;
        as.push_back(a);
        ps.push_back({rx * std::cos(a), ry * std::sin(a)});
    }
    return ClosedPLCurve(as, ps);
}

}  // namespace

TEST_CASE("lift agrees with the covering map") {
    const ClosedPLCurve c = ngon(64);
    const PLCurve half = c.lift(0.0, kPi);
    SplitMix64 rng(2);
    for (int i = 0; i < 40; ++i) {
        const double t = rng.uniform(0.0, kPi);
        CHECK(dist(half.eval(t), c.eval(t)) < 1e-12);
    }
    // seam chart
    const PLCurve seam = c.lift(-0.5, 0.5);
    for (int i = 0; i < 40; ++i) {
        const double t = rng.uniform(-0.5, 0.5);
        CHECK(dist(seam.eval(t), c.eval(t)) < 1e-12);
    }
    // breakpoints lift exactly (up to one wrap rounding)
    for (double t : half.breakpoints()) CHECK(dist(half.eval(t), c.eval(t)) < 1e-15);
    CHECK_THROWS_AS(c.lift(0.0, kTwoPi), DomainError);
}

TEST_CASE("choose_theta solves the chord-arc equation") {
    const double t1 = choose_theta(0.01);
    CHECK(t1 == doctest::Approx(0.4899).epsilon(2e-2));  // near sqrt(24 * eps')
    CHECK(2.0 * std::sin(0.5 * t1) / t1 >= 1.0 - 0.01 - 1e-12);
    CHECK(2.0 * std::sin(0.5 * t1) / t1 <= 1.0);
    // residual at the boundary of the feasible set
    CHECK(2.0 * std::sin(0.5 * (t1 + 1e-9)) / (t1 + 1e-9) <= 1.0 - 0.01 + 1e-9);

    // theta -> 0 with eps'
    CHECK(choose_theta(1e-4) < choose_theta(1e-2));
    CHECK(choose_theta(1e-6) < 0.01);

    // large eps': capped at pi/2
    CHECK(choose_theta(0.5) == 0.5 * kPi);
}

TEST_CASE("chart metric distortion") {
    // for chart length <= theta(eps'): (1-eps')|y-x| <= chord <= |y-x|
    const double eps_prime = 1.0 / 64.0;
    const double theta = choose_theta(eps_prime);
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double base = rng.uniform(0.0, kTwoPi);
        double x = base + rng.uniform(0.0, theta);
        double y = base + rng.uniform(0.0, theta);
        const double chord = chord_distance(x, y);
        CHECK(chord <= std::abs(y - x) + 1e-12);
        CHECK(chord >= (1.0 - eps_prime) * std::abs(y - x) - 1e-12);
    }
}

TEST_CASE("approximate_closed certifies a regular polygon") {
    const ClosedPLCurve c = ngon(64);
    const double L = measure_closed(c, kTwoPi / 2048.0).constant() * (1.0 + 1e-9);
    const auto res = approximate_closed(c, std::max(L, 1.05), 0.25);
    CHECK(res.certified);
    CHECK(res.sup_dist <= 0.25);
    // theta satisfies its equation to 1e-12
    const double ratio = 2.0 * std::sin(0.5 * res.theta) / res.theta;
    CHECK(ratio >= 1.0 - res.eps_prime - 1e-12);
    CHECK(ratio <= 1.0);
    // straightened arcs pairwise disjoint
    for (std::size_t i = 0; i + 1 < res.charts.size(); ++i)
        CHECK(res.charts[i].t < res.charts[i + 1].s + 1e-12);
    // vertex growth: strip-chord-strip writes at most 4 breakpoints per
    // input corner, plus two pin joints per arc
    CHECK(res.output.size() <= 4 * c.size() + 2 * res.charts.size() + 8);
    // constant chain
    const double inv = 1.0 / (1.0 - res.eps_prime);
    const double chain = ((std::max(L, 1.05) * inv + res.eps_prime) * inv + res.eps_prime) * inv;
    CHECK(chain <= std::max(L, 1.05) + 0.25);
}

TEST_CASE("approximate_closed on an ellipse-like polygon") {
    const ClosedPLCurve c = ngon(48, 1.0, 0.5);
    const double L = measure_closed(c, kTwoPi / 2048.0).constant() * (1.0 + 1e-9);
    REQUIRE(L > 1.0);
    const auto res = approximate_closed(c, L, 0.25);
    CHECK(res.certified);
    CHECK(res.sup_dist <= 0.25);
    CHECK(res.report.passes(L + 0.25, 1e-6));
}

TEST_CASE("approximate_closed on generated closed curves") {
    for (int it = 0; it < 3; ++it) {
        const ClosedPLCurve c = gen_bilip_closed_curve(
            {.seed = 9100 + static_cast<std::uint64_t>(it), .target_L = 1.4, .vertex_count = 24});
        const auto res = approximate_closed(c, 1.4, 0.25);
        CHECK(res.certified);
        CHECK(res.sup_dist <= 0.25);
    }
}
