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

#ifndef BILIP_TEST_UTIL_HPP
#define BILIP_TEST_UTIL_HPP

#include <cmath>

#include "bilip/curve.hpp"

namespace bilip::testing {

/// {(0,(0,0)), (1,(1,0)), (2,(1,1))}: two unit-speed legs meeting at a right
/// angle. The workhorse fixture.
inline PLCurve right_angle() {
    return PLCurve({0.0, 1.0, 2.0}, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}});
}

/// Same corner at unit speed on [0,1].
inline PLCurve right_angle_unit_domain() {
    return PLCurve({0.0, 0.5, 1.0}, {{0.0, 0.0}, {0.5, 0.0}, {0.5, 0.5}});
}

/// Straight segment from the origin with the given velocity.
inline PLCurve straight(double speed, double t1 = 1.0) {
    return PLCurve({0.0, t1}, {{0.0, 0.0}, {speed * t1, 0.0}});
}

/// Polygonal semicircle on [0,1] with all segment speeds exactly 1. Its
/// inverse-Lipschitz value sits at the endpoint pair and tends to 2/pi as
/// `verts` grows.
inline PLCurve semicircle(int verts) {
    std::vector<double> ts;
    std::vector<Point2> ps;
    const double seg_angle = bilip::kPi / (verts - 1);
    // radius such that every chord between consecutive samples has length
    // equal to the parameter step
    const double radius = (1.0 / (verts - 1)) / (2.0 * std::sin(0.5 * seg_angle));
    for (int i = 0; i < verts; ++i) {
        const double f = static_cast<double>(i) / (verts - 1);
        ts.push_back(f);
        const double a = bilip::kPi * f;
        ps.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return PLCurve(std::move(ts), std::move(ps));
}

}  // namespace bilip::testing

#endif  // BILIP_TEST_UTIL_HPP
