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
#include "bilip/io.hpp"
#include "bilip/testkit.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

TEST_CASE("curve files round-trip bit-exactly") {
    for (int it = 0; it < 20; ++it) {
        const PLCurve c = gen_bilip_curve({.seed = 6000 + static_cast<std::uint64_t>(it),
                                           .target_L = 2.7,
                                           .vertex_count = 10 + it});
        const CurveFile f = to_curve_file(c, {{"seed", 6000 + it}});
        const CurveFile g = parse_curve_file(serialize(f));
        const PLCurve back = g.open_curve();
        REQUIRE(back.breakpoints().size() == c.breakpoints().size());
        for (std::size_t i = 0; i < c.breakpoints().size(); ++i) {
            CHECK(back.breakpoints()[i] == c.breakpoints()[i]);
            CHECK(back.vertices()[i] == c.vertices()[i]);
        }
        CHECK(g.metadata.at("seed") == 6000 + it);
    }
    // awkward doubles survive
    const PLCurve nasty({0.0, 0.1, 1.0 / 3.0, 0.7000000000000001, 1.0},
                        {{1e-17, -0.0}, {0.1 + 0.2, 1e300}, {-1e-300, 3.0},
                         {0.3333333333333333, -2.5}, {4.0, 5.0}});
    const PLCurve back = parse_curve_file(serialize(to_curve_file(nasty))).open_curve();
    for (std::size_t i = 0; i < nasty.breakpoints().size(); ++i) {
        CHECK(back.breakpoints()[i] == nasty.breakpoints()[i]);
        CHECK(back.vertices()[i] == nasty.vertices()[i]);
    }
}

TEST_CASE("closed curve files round-trip") {
    const ClosedPLCurve c =
        gen_bilip_closed_curve({.seed = 7, .target_L = 1.5, .vertex_count = 16});
    const CurveFile f = to_curve_file(c);
    CHECK(f.kind == "closed");
    const ClosedPLCurve back = parse_curve_file(serialize(f)).closed_curve();
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.angles()[i] == c.angles()[i]);
        CHECK(back.vertices()[i] == c.vertices()[i]);
    }
}

TEST_CASE("parse failures carry context") {
    CHECK_THROWS_AS(parse_curve_file("{"), DomainError);
    CHECK_THROWS_AS(parse_curve_file("{\"kind\":\"open\"}"), DomainError);
    CHECK_THROWS_AS(parse_curve_file(
                        R"({"kind":"weird","breakpoints":[0,1],"points":[[0,0],[1,1]]})"),
                    DomainError);
    CHECK_THROWS_AS(
        parse_curve_file(R"({"kind":"open","breakpoints":[0],"points":[[0,0],[1,1]]})"),
        DomainError);
}

TEST_CASE("svg rendering is deterministic and structurally sound") {
    const CurveFile a = to_curve_file(right_angle());
    const CurveFile b = to_curve_file(straight(2.0));
    const std::string svg = render_svg({a, b}, 640, 480);
    CHECK(svg == render_svg({a, b}, 640, 480));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("viewBox=") != std::string::npos);
    std::size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        pos += 1;
    }
    CHECK(polylines == 2);
    // vertex markers: one circle per point
    std::size_t circles = 0;
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 1;
    }
    CHECK(circles == a.points.size() + b.points.size());

    const CurveFile closed =
        to_curve_file(gen_bilip_closed_curve({.seed = 3, .target_L = 1.5, .vertex_count = 12}));
    CHECK(render_svg({closed}, 100, 100).find("<polygon") != std::string::npos);
}
