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

#ifndef BILIP_CLOSED_CURVE_HPP
#define BILIP_CLOSED_CURVE_HPP

#include <cstddef>
#include <vector>

#include "bilip/curve.hpp"
#include "bilip/geometry.hpp"

namespace bilip {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Normalize an angle into [0, 2*pi).
double wrap_angle(double t);

/// Euclidean distance in the plane between the unit-circle points of two
/// angle parameters (the chordal metric on S^1).
inline double chord_distance(double a, double b) {
    return 2.0 * std::abs(std::sin(0.5 * (b - a)));
}

/// Closed piecewise-linear curve parametrized by angle on S^1.
///
/// Angular breakpoints 0 <= a0 < a1 < ... < a(M-1) < 2*pi, one vertex each;
/// evaluation interpolates linearly in the angle, wrapping from a(M-1) back
/// to a0 + 2*pi.
class ClosedPLCurve {
  public:
    ClosedPLCurve(std::vector<double> angles, std::vector<Point2> vertices);

    const std::vector<double>& angles() const { return as_; }
    const std::vector<Point2>& vertices() const { return ps_; }
    std::size_t size() const { return as_.size(); }

    Point2 eval(double angle) const;

    /// Angular width of segment i (the last one wraps).
    double segment_width(std::size_t i) const;

    /// |P(i+1)-P(i)| / angular width; derivative magnitude w.r.t. the angle.
    double speed(std::size_t i) const;
    Point2 velocity(std::size_t i) const;

    /// Open PLCurve phi(pi(t)) on [a, b], b - a < 2*pi (unwraps the seam).
    PLCurve lift(double a, double b) const;

    /// Drops vertices whose adjacent segments share a velocity vector.
    ClosedPLCurve simplified(double tol = 1e-13) const;

  private:
    std::vector<double> as_;
    std::vector<Point2> ps_;
};

}  // namespace bilip

#endif  // BILIP_CLOSED_CURVE_HPP
