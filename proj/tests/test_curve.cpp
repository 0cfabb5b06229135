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

#include "bilip/curve.hpp"
#include "bilip/errors.hpp"
#include "bilip/testkit.hpp"
#include "bilip/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

TEST_CASE("eval interpolates linearly") {
    const PLCurve c({0.0, 1.0}, {{0.0, 0.0}, {2.0, 0.0}});
    CHECK(c.eval(0.5).x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.eval(0.5).y == 0.0);

    const PLCurve ra = right_angle();
    CHECK(ra.eval(1.5).x == doctest::Approx(1.0));
    CHECK(ra.eval(1.5).y == doctest::Approx(0.5));

    // exact at breakpoints
    for (std::size_t i = 0; i < ra.breakpoints().size(); ++i) {
        const Point2 p = ra.eval(ra.breakpoints()[i]);
        CHECK(p == ra.vertices()[i]);
    }

    CHECK_THROWS_AS(ra.eval(2.5), DomainError);
    CHECK_THROWS_AS(ra.eval(-0.5), DomainError);
}

TEST_CASE("speed per segment") {
    const PLCurve c({0.0, 1.0}, {{0.0, 0.0}, {2.0, 0.0}});
    CHECK(c.speed(0) == doctest::Approx(2.0));
    CHECK(right_angle().speed(1) == doctest::Approx(1.0));
    const PLCurve degen({0.0, 1.0, 2.0}, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
    CHECK(degen.speed(1) == 0.0);
    CHECK_THROWS_AS(c.speed(5), DomainError);
}

TEST_CASE("arclength and additivity") {
    const PLCurve ra = right_angle();
    CHECK(ra.arclength(0.0, 2.0) == doctest::Approx(2.0));
    CHECK(ra.arclength(0.5, 1.5) == doctest::Approx(1.0));
    CHECK(straight(2.0).arclength(0.0, 1.0) == doctest::Approx(2.0));

    SplitMix64 rng(7);
    for (int it = 0; it < 50; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 100 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.0,
                                           .vertex_count = 12});
        double u = rng.uniform(0.0, 1.0), v = rng.uniform(0.0, 1.0), w = rng.uniform(0.0, 1.0);
        if (u > v) std::swap(u, v);
        if (v > w) std::swap(v, w);
        if (u > v) std::swap(u, v);
        CHECK(c.arclength(u, w) ==
              doctest::Approx(c.arclength(u, v) + c.arclength(v, w)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ra.arclength(1.5, 0.5), DomainError);
}

TEST_CASE("segment_replace basics") {
    const PLCurve ra = right_angle();
    const PLCurve rep = segment_replace(ra, 0.5, 1.5);
    // outside (s,t) unchanged
    CHECK(dist(rep.eval(0.25), ra.eval(0.25)) == 0.0);
    CHECK(dist(rep.eval(1.75), ra.eval(1.75)) == 0.0);
    // on [s,t] the chord from (0.5,0) to (1,0.5)
    CHECK(rep.eval(1.0).x == doctest::Approx(0.75));
    CHECK(rep.eval(1.0).y == doctest::Approx(0.25));
    CHECK(rep.domain_hi() == ra.domain_hi());

    // idempotent on straight pieces
    const PLCurve s = straight(1.5);
    const PLCurve srep = segment_replace(s, 0.25, 0.75);
    CHECK(sup_distance(s, srep, 1e-3) == doctest::Approx(0.0).epsilon(1e-14));

    // s == t: unchanged
    const PLCurve same = segment_replace(ra, 1.0, 1.0);
    CHECK(same.breakpoints().size() == ra.breakpoints().size());

    CHECK_THROWS_AS(segment_replace(ra, -1.0, 1.0), DomainError);
}

TEST_CASE("segment_replace surgery bounds") {
    // Lipschitz never increases and the sup-distance estimate holds
    SplitMix64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 500 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.5,
                                           .vertex_count = 10});
        const double L = lipschitz_upper(c);
        double s = rng.uniform(0.0, 1.0), t = rng.uniform(0.0, 1.0);
        if (s > t) std::swap(s, t);
        if (t - s < 1e-6) continue;
        const PLCurve rep = segment_replace(c, s, t);
        CHECK(lipschitz_upper(rep) <= L + 1e-12);
        CHECK(sup_distance(c, rep, 1e-3) <= 2.0 * L * (t - s) + 1e-12);
    }
}

TEST_CASE("fast_reparam_segment") {
    const double L = std::sqrt(2.0);
    const auto [c, t_plus] = fast_reparam_segment(right_angle(), 0.0, 2.0, L);
    CHECK(t_plus == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.domain_hi() == doctest::Approx(1.0));
    CHECK(c.segment_count() == 1);
    CHECK(c.speed(0) == doctest::Approx(L).epsilon(1e-15));
    CHECK(dist(c.back(), {1.0, 1.0}) == 0.0);

    // already at speed L: unchanged
    const PLCurve sL = straight(2.0);
    const auto r2 = fast_reparam_segment(sL, 0.0, 1.0, 2.0);
    CHECK(r2.t_plus == doctest::Approx(1.0));
    CHECK(sup_distance(sL, r2.curve, 1e-3) == doctest::Approx(0.0).epsilon(1e-14));

    // chord 1 at L=2: domain shrinks by 0.5
    const auto r3 = fast_reparam_segment(straight(1.0), 0.0, 1.0, 2.0);
    CHECK(r3.t_plus == doctest::Approx(0.5));
    CHECK(r3.curve.domain_hi() == doctest::Approx(0.5));

    // degenerate chord
    const PLCurve degen({0.0, 1.0, 2.0}, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(fast_reparam_segment(degen, 0.0, 2.0, 2.0), DomainError);

    // chord longer than L*(t-s): the input was not L-Lipschitz
    CHECK_THROWS_AS(fast_reparam_segment(straight(2.0), 0.0, 1.0, 1.0), PreconditionError);

    // speed exactly L on the replaced stretch, original elsewhere (shifted)
    const PLCurve g = gen_bilip_curve({.seed = 42, .target_L = 2.0, .vertex_count = 9});
    const auto r4 = fast_reparam_segment(g, 0.25, 0.75, 2.0);
    const std::size_t i = r4.curve.segment_of(0.5 * (0.25 + r4.t_plus));
    CHECK(r4.curve.speed(i) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dist(r4.curve.eval(0.1), g.eval(0.1)) == 0.0);
    const double shift = 0.75 - r4.t_plus;
    CHECK(dist(r4.curve.eval(0.9 - shift), g.eval(0.9)) < 1e-12);
}

TEST_CASE("concat restrict shift round trips") {
    const PLCurve ra = right_angle();
    const PLCurve a = ra.restrict_to(0.0, 1.0);
    const PLCurve b = ra.restrict_to(1.0, 2.0);
    CHECK(a.segment_count() == 1);
    CHECK(dist(a.back(), {1.0, 0.0}) == 0.0);
    const PLCurve glued = concat(a, b);
    CHECK(glued.breakpoints().size() == ra.breakpoints().size());
    CHECK(sup_distance(glued, ra, 1e-3) == doctest::Approx(0.0).epsilon(1e-14));

    const PLCurve shifted = ra.shift_domain(1.0);
    CHECK(dist(shifted.eval(1.5), ra.eval(0.5)) == 0.0);

    const PLCurve bad({0.0, 1.0}, {{5.0, 5.0}, {6.0, 5.0}});
    CHECK_THROWS_AS(concat(a, bad), DomainError);
}

TEST_CASE("simplified drops collinear breakpoints only") {
    const PLCurve s = straight(1.0).with_breakpoints(0.25, 0.5);
    CHECK(s.breakpoints().size() == 4);
    CHECK(s.simplified().breakpoints().size() == 2);
    CHECK(right_angle().simplified().breakpoints().size() == 3);
    // speed change without turning is kept
    const PLCurve kink({0.0, 1.0, 2.0}, {{0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}});
    CHECK(kink.simplified().breakpoints().size() == 3);
}
