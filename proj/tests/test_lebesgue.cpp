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

#include "bilip/errors.hpp"
#include "bilip/lebesgue.hpp"
#include "bilip/testkit.hpp"
#include "bilip/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

TEST_CASE("deviation is the exact piecewise average") {
    const PLCurve s = straight(1.5);
    CHECK(deviation(s, 0.3, 0.1, 0.9) == 0.0);

    // right angle, x = 0.5: (1*0 + 1*|(0,1)-(1,0)|) / 2 = sqrt(2)/2
    const PLCurve ra = right_angle();
    CHECK(deviation(ra, 0.5, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));

    // p, q inside the segment of x
    CHECK(deviation(ra, 0.5, 0.2, 0.8) == 0.0);

    // genuine corner: ambiguous derivative
    CHECK_THROWS_AS(deviation(ra, 1.0, 0.0, 2.0), PreconditionError);
}

TEST_CASE("bad_set on benign inputs is empty") {
    const PLCurve s = straight(1.0, 2.0);
    const BadSet empty = bad_set(s, 1.0, 0.5, 0.25, 1.5);
    CHECK(empty.intervals.empty());
    CHECK(empty.total_measure == 0.0);

    // threshold above the max deviation: empty even across a corner
    const PLCurve ra = right_angle();
    const BadSet loose = bad_set(ra, 0.5, 0.4999, 100.0, 1.0);
    CHECK(loose.intervals.empty());
}

TEST_CASE("bad_set isolates a corner") {
    // corner at x + h/2: one inflated interval containing it
    const PLCurve ra = right_angle();
    const double x = 0.75, h = 0.5;  // corner at 1.0 = x + h/2
    const BadSet bs = bad_set(ra, x, h, 0.2, std::sqrt(2.0));
    REQUIRE_FALSE(bs.intervals.empty());
    const auto merged = merge_intervals(bs.inflated());
    bool covers_corner = false;
    for (const auto& iv : merged)
        if (iv.lo <= 1.0 && 1.0 <= iv.hi) covers_corner = true;
    CHECK(covers_corner);

    // verification property: M(p, q) < eps/(2L) once one endpoint escapes
    const double thr = 0.2 / (2.0 * std::sqrt(2.0));
    auto inside = [&](double t) {
        for (const auto& iv : merged)
            if (t >= iv.lo - 1e-12 && t <= iv.hi + 1e-12) return true;
        return false;
    };
    for (double p = x - h; p <= x + h + 1e-9; p += h / 64.0) {
        for (double q = p + 1e-4; q <= x + h + 1e-9; q += h / 64.0) {
            if (inside(p) && inside(q)) continue;
            CHECK(deviation(ra, x, p, q) < thr + 1e-12);
        }
    }
}

TEST_CASE("bad_set greedy trace invariants") {
    // a curve with several corners inside the window
    const PLCurve c = gen_bilip_curve({.seed = 77, .target_L = 2.0, .vertex_count = 12});
    const double x = 0.5 - 1.0 / 4096.0;  // keep x off the breakpoint lattice
    const double h = 0.45;
    const BadSet bs = bad_set(c, x, h, 0.02, 2.0);
    for (std::size_t j = 0; j < bs.intervals.size(); ++j) {
        const auto& iv = bs.intervals[j];
        CHECK(iv.p_minus == doctest::Approx(iv.p - (iv.q - iv.p)).epsilon(1e-12));
        CHECK(iv.q_plus == doctest::Approx(iv.q + (iv.q - iv.p)).epsilon(1e-12));
        // generators pairwise disjoint
        for (std::size_t i = 0; i < j; ++i) {
            const auto& prev = bs.intervals[i];
            CHECK((iv.q <= prev.p + 1e-12 || iv.p >= prev.q - 1e-12));
        }
        // uncovered measures non-increasing
        if (j > 0) CHECK(iv.uncovered <= bs.intervals[j - 1].uncovered + 1e-12);
    }
    // measure bound: |A| <= (6L/eps) * integral of the deviation
    double integral = 0.0;
    const Point2 vx = c.velocity(c.segment_of(x));
    for (std::size_t i = 0; i + 1 < c.breakpoints().size(); ++i) {
        const double lo = std::max(x - h, c.breakpoints()[i]);
        const double hi = std::min(x + h, c.breakpoints()[i + 1]);
        if (hi > lo) integral += dist(c.velocity(i), vx) * (hi - lo);
    }
    CHECK(bs.total_measure <= 6.0 * 2.0 / 0.02 * integral + 1e-9);
}

TEST_CASE("lebesgue_window basics") {
    const PLCurve s = straight(1.0, 2.0);
    const auto w = lebesgue_window(s, 1.0, 0.125, 0.25, 1.5, 1.0 / 64.0);
    CHECK(w.measure == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(w.parts.size() == 1);
    CHECK(w.parts[0].lo == doctest::Approx(0.875));
    CHECK(w.parts[0].hi == doctest::Approx(1.125));

    // corner-adjacent window loses the inflated interval
    const PLCurve ra = right_angle();
    // x on the first leg; the corner at 1.0 sits inside the deviation window
    const double x = 0.8, ell = 0.05, eps = 0.25, L = std::sqrt(2.0);
    const auto wc = lebesgue_window(ra, x, ell, eps, L, 0.25);
    CHECK(wc.measure >= (2.0 - eps) * ell);
    for (const auto& part : wc.parts) {
        CHECK(part.hi <= 1.0 + 1e-12);  // nothing beyond the corner
    }

    // window at the corner itself fails (ambiguous derivative)
    CHECK_THROWS(lebesgue_window(ra, 1.0, 0.05, eps, L, 0.25));

    // ell -> 0 at an interior segment point: full window for all small ell
    for (double ell : {1e-2, 1e-4, 1e-6}) {
        const auto w = lebesgue_window(ra, 0.4, ell, eps, L, 0.25);
        CHECK(w.measure == doctest::Approx(2.0 * ell).epsilon(1e-12));
    }
}

TEST_CASE("windowed replacements stay (L+eps)-biLipschitz") {
    const PLCurve ra = right_angle();
    const double eps = 0.25, L = std::sqrt(2.0);
    const auto w = lebesgue_window(ra, 0.8, 0.05, eps, L, 0.25);
    SplitMix64 rng(5);
    REQUIRE_FALSE(w.parts.empty());
    for (int it = 0; it < 10; ++it) {
        const auto& part = w.parts[static_cast<std::size_t>(rng.next_u64() % w.parts.size())];
        double s = rng.uniform(part.lo, part.hi);
        double t = rng.uniform(part.lo, part.hi);
        if (s > t) std::swap(s, t);
        if (t - s < 1e-9) continue;
        const PLCurve rep = segment_replace(ra, s, t);
        CHECK(check_bilip(rep, L + eps, default_grid_step(rep), 1e-9).pass);
        CHECK(sup_distance(ra, rep, 1e-3) < eps);
    }
}

TEST_CASE("direction coherence near a window") {
    // chords through s in a corner-free stretch share their direction 2eps
    const PLCurve c = gen_bilip_curve({.seed = 8, .target_L = 1.5, .vertex_count = 8});
    const double eps = 0.2;
    SplitMix64 rng(9);
    for (int it = 0; it < 40; ++it) {
        const double x = rng.uniform(0.05, 0.95);
        double ell;
        try {
            const auto w = lebesgue_window(c, x, 0.01, eps, 1.5, 0.5);
            if (w.parts.empty()) continue;
            ell = 0.01;
            const double s = std::clamp(x, w.parts[0].lo + 1e-6, w.parts[0].hi - 1e-6);
            const double lo = std::max(c.domain_lo(), x - ell / eps);
            const double hi = std::min(c.domain_hi(), x + ell / eps);
            const double t1 = rng.uniform(lo, s - 1e-6);
            const double t2 = rng.uniform(s + 1e-6, hi);
            if (!(t1 < s && s < t2)) continue;
            const Point2 d1 = c.eval(s) - c.eval(t1);
            const Point2 d2 = c.eval(t2) - c.eval(s);
            if (norm(d1) < 1e-9 || norm(d2) < 1e-9) continue;
            CHECK(angle_between(d1, d2) <= 2.0 * eps + 1e-9);
        } catch (const PreconditionError&) {
            continue;  // x too close to a corner at this scale
        }
    }
}

TEST_CASE("straighten_lebesgue on a straight segment") {
    const PLCurve s = straight(1.2);
    const auto budget = choose_constants(2.0, 0.25);
    const auto res = straighten_lebesgue(s, 0.25, 2.0, budget);
    CHECK(res.report.good_complement_measure == 0.0);
    CHECK(res.report.non_admissible_measure == 0.0);
    REQUIRE(res.report.good_set.size() == 1);
    CHECK(res.report.good_set[0].lo == 0.0);
    CHECK(res.report.good_set[0].hi == 1.0);
    CHECK(sup_distance(s, res.curve, 1e-3) == 0.0);
}

TEST_CASE("straighten_lebesgue isolates the right-angle corner") {
    const PLCurve ra = right_angle_unit_domain();
    const double L = std::sqrt(2.0), eps = 0.25;
    const auto budget = choose_constants(L, eps);
    const auto res = straighten_lebesgue(ra, eps, L, budget);
    CHECK(res.report.good_complement_measure <= eps);
    CHECK(res.report.good_complement_measure > 0.0);
    // the complement is a single cluster around the corner parameter 0.5
    const auto bad = subtract_intervals({0.0, 1.0}, res.report.good_set);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].lo < 0.5);
    CHECK(bad[0].hi > 0.5);
    // output curve passes at L + eps and is unchanged
    CHECK(check_bilip(res.curve, L + eps, default_grid_step(res.curve)).pass);
    CHECK(res.report.sup_distance <= eps);
    // endpoints preserved exactly
    CHECK(res.curve.front() == ra.front());
    CHECK(res.curve.back() == ra.back());
}

TEST_CASE("straighten_lebesgue on generated curves") {
    for (int it = 0; it < 5; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 4000 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.0,
                                           .vertex_count = 15});
        const auto budget = choose_constants(2.0, 0.25);
        const auto res = straighten_lebesgue(c, 0.25, 2.0, budget, {.assume_bilip = true});
        CHECK(res.report.good_complement_measure <= 0.25);
        // phi1 linear on every good component
        for (const auto& g : res.report.good_set) {
            if (g.length() < 1e-9) continue;
            CHECK(res.curve.restrict_to(g.lo, g.hi).is_linear(1e-9));
        }
        // anchor invariants: x_m in the central part, x_m^- near the cell edge
        const double cell = 1.0 / static_cast<double>(res.report.N);
        const double et = budget.eps_tilde;
        for (const auto& a : res.report.edge_anchors) {
            const double clo = (static_cast<double>(a.m) + 0.5) * cell - 0.5 * et * cell;
            const double chi = (static_cast<double>(a.m) + 0.5) * cell + 0.5 * et * cell;
            CHECK(a.x >= clo - 1e-12);
            CHECK(a.x <= chi + 1e-12);
            CHECK(a.x_minus > static_cast<double>(a.m) * cell - 1e-12);
            CHECK(a.x_minus < static_cast<double>(a.m) * cell + 2.0 * et * cell + 1e-12);
            CHECK(a.x_plus > static_cast<double>(a.m + 1) * cell - 2.0 * et * cell - 1e-12);
            CHECK(a.x_plus < static_cast<double>(a.m + 1) * cell + 1e-12);
        }
    }
}

TEST_CASE("choose_constants pinned values") {
    const auto b = choose_constants(2.0, 0.1);
    CHECK(b.xi == doctest::Approx(0.1 / 60.0).epsilon(1e-12));
    CHECK(b.eps_tilde == std::pow(2.0, -11.0));
    b.validate();

    // monotone in eps
    CHECK(choose_constants(2.0, 10.0).eps_tilde >= choose_constants(2.0, 0.1).eps_tilde);
    CHECK(choose_constants(2.0, 1.0).eps_tilde >= choose_constants(2.0, 0.5).eps_tilde);
}
