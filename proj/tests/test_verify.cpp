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

#include "bilip/testkit.hpp"
#include "bilip/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("lipschitz_upper is the max segment speed") {
    CHECK(lipschitz_upper(straight(2.0)) == doctest::Approx(2.0));
    CHECK(lipschitz_upper(right_angle()) == doctest::Approx(1.0));
    const PLCurve mixed({0.0, 1.0, 2.0, 3.0},
                        {{0.0, 0.0}, {1.0, 0.0}, {4.0, 0.0}, {4.5, 0.0}});
    CHECK(lipschitz_upper(mixed) == doctest::Approx(3.0));
}

TEST_CASE("inverse_lipschitz on the right angle") {
    const PLCurve ra = right_angle();
    const auto [v, w] = inverse_lipschitz(ra, default_grid_step(ra));
    CHECK(v == doctest::Approx(kInvSqrt2).epsilon(1e-9));
    CHECK(w.p == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(w.q == doctest::Approx(2.0).epsilon(1e-6));
    // witness realizes the value
    CHECK(dist(ra.eval(w.q), ra.eval(w.p)) / (w.q - w.p) == doctest::Approx(v).epsilon(1e-9));
}

TEST_CASE("inverse_lipschitz on straight and semicircle") {
    const PLCurve s = straight(2.0);
    CHECK(inverse_lipschitz(s, default_grid_step(s)).first == doctest::Approx(2.0));

    const PLCurve semi = semicircle(64);
    const auto [v, w] = inverse_lipschitz(semi, default_grid_step(semi));
    CHECK(v == doctest::Approx(2.0 / kPi).epsilon(1e-3));
    CHECK(std::abs(w.q - w.p) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("inverse_lipschitz flags coincident points") {
    // a stall: two equal vertices at distinct parameters
    const PLCurve stall({0.0, 1.0, 2.0}, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    const auto [v, w] = inverse_lipschitz(stall, default_grid_step(stall));
    CHECK(v <= 1e-6);
    CHECK(std::abs(w.q - w.p) > 1e-3);
}

TEST_CASE("check_bilip pass and fail") {
    const PLCurve ra = right_angle();
    const double g = default_grid_step(ra);
    CHECK(check_bilip(ra, std::sqrt(2.0), g, 1e-6).pass);
    const auto fail = check_bilip(ra, 1.2, g, 1e-6);
    CHECK_FALSE(fail.pass);
    CHECK(fail.report.witness_min.p == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(fail.report.witness_min.q == doctest::Approx(2.0).epsilon(1e-5));

    const PLCurve s = straight(2.0);
    CHECK(check_bilip(s, 2.0, default_grid_step(s), 0.0).pass);
}

TEST_CASE("corner_angle_check") {
    const double L = std::sqrt(2.0);
    // at L = sqrt(2) the unit-speed corner sits below the speed-L threshold
    CHECK(corner_angle_check(right_angle(), L).empty());
    // at L = 1 it qualifies and must be straight; pi/2 turning violates
    CHECK_FALSE(corner_angle_check(right_angle(), 1.0).empty());

    // speed-L corner turning by pi (backtracking) violates for any L
    const PLCurve hairpin({0.0, 1.0, 2.0},
                          {{0.0, 0.0}, {L, 0.0}, {0.0, 0.0}});
    CHECK_FALSE(corner_angle_check(hairpin, L).empty());

    CHECK(corner_angle_check(straight(1.0), 2.0).empty());

    // right angle at speed sqrt(2): turning pi/2 <= pi - 2*asin(1/2) = 2*pi/3
    const PLCurve fast_ra({0.0, 1.0, 2.0}, {{0.0, 0.0}, {L, 0.0}, {L, L}});
    CHECK(corner_angle_check(fast_ra, L).empty());
}

TEST_CASE("corner law holds on measured-constant passes") {
    for (int it = 0; it < 20; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 900 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.0,
                                           .vertex_count = 14});
        const auto res = check_bilip(c, 2.0, default_grid_step(c), 0.0);
        REQUIRE(res.pass);
        const double l_meas = res.report.constant();
        CHECK(corner_angle_check(c, l_meas).empty());
    }
}

TEST_CASE("refinement monotonicity in the grid") {
    for (int it = 0; it < 10; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 1300 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.0,
                                           .vertex_count = 10});
        const double g = default_grid_step(c);
        const double coarse = inverse_lipschitz(c, g).first;
        const double fine = inverse_lipschitz(c, 0.5 * g).first;
        CHECK(coarse >= fine - 1e-9);
        CHECK(fine <= lipschitz_upper(c) + 1e-12);
    }
}

TEST_CASE("kernel agrees with the naive oracle") {
    // small instances, dense oracle
    const PLCurve ra = right_angle();
    CHECK(oracle_inverse_lipschitz(ra, 4097) == doctest::Approx(kInvSqrt2).epsilon(1e-9));
    for (int it = 0; it < 6; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 2200 + static_cast<std::uint64_t>(it),
                                           .target_L = 1.8,
                                           .vertex_count = 9});
        const double fast = inverse_lipschitz(c, default_grid_step(c)).first;
        const double naive = oracle_inverse_lipschitz(c, 4097);
        CHECK(fast == doctest::Approx(naive).epsilon(2e-6));
    }
    // one exhaustive pass at step 2^-14 (the reference density)
    const PLCurve dense = gen_bilip_curve({.seed = 2210, .target_L = 1.8, .vertex_count = 9});
    const double fast = inverse_lipschitz(dense, default_grid_step(dense)).first;
    CHECK(std::abs(fast - oracle_inverse_lipschitz(dense, (1 << 14) + 1)) <= 1e-6);
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    for (int it = 0; it < 5; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 3100 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.2,
                                           .vertex_count = 12});
        const double g = default_grid_step(c);
        const auto par = inverse_lipschitz(c, g, Exec::parallel);
        const auto ser = inverse_lipschitz(c, g, Exec::serial);
        CHECK(par.first == ser.first);
        CHECK(par.second.p == ser.second.p);
        CHECK(par.second.q == ser.second.q);
    }
}

TEST_CASE("mixed-pair kernel handles empty and restricted sets") {
    const PLCurve ra = right_angle();
    const double g = default_grid_step(ra);
    // empty exterior: vacuous
    const auto vac = min_ratio_between(ra, {}, {{0.5, 1.5}}, g);
    CHECK(std::isinf(vac.first));
    // of the pairs straddling the corner from [0,0.5] x [1.5,2] the closest
    // approach is realized at the extreme pair (0, 2)
    const auto res = min_ratio_between(ra, {{0.0, 0.5}}, {{1.5, 2.0}}, g);
    CHECK(res.first == doctest::Approx(kInvSqrt2).epsilon(1e-9));
}

TEST_CASE("closed-curve measurement on polygons") {
    // regular n-gon: constants tend to 1 from above as n grows
    auto ngon = [](int n) {
        std::vector<double> as;
        std::vector<Point2> ps;
        for (int i = 0; i < n; ++i) {
            const double a = kTwoPi * i / n;
            as.push_back(a);
            ps.push_back({std::cos(a), std::sin(a)});
        }
        return ClosedPLCurve(as, ps);
    };
    double prev = 1e9;
    for (int n : {16, 32, 64}) {
        const auto rep = measure_closed(ngon(n), kTwoPi / 2048.0);
        const double c = rep.constant();
        CHECK(c >= 1.0 - 1e-9);
        CHECK(c < prev + 1e-12);
        prev = c;
    }
    const auto rep64 = measure_closed(ngon(64), kTwoPi / 2048.0);
    CHECK(rep64.constant() == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(check_bilip_closed(ngon(64), 1.05, kTwoPi / 2048.0, 0.0).pass);
}
