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

#ifndef BILIP_CIRCLE_HPP
#define BILIP_CIRCLE_HPP

#include <vector>

#include "bilip/closed_curve.hpp"
#include "bilip/verify.hpp"

namespace bilip {

/// Largest theta <= pi/2 with 2*sin(theta/2)/theta >= 1 - eps_prime, found
/// by bisection of the strictly decreasing map.
double choose_theta(double eps_prime);

/// One processed arc between consecutive anchors.
struct ChartSpec {
    double a{0.0}, b{0.0};   // unwrapped chart bounds (b - a < 2*pi)
    double anchor{0.0};      // p_i, interior to a segment
    double s{0.0}, t{0.0};   // straightened arc around the anchor
    double a_pin{0.0};       // pinned strip width of the per-arc run
    double a_pin_prime{0.0};
};

struct ClosedApproxResult {
    ClosedPLCurve output;
    BiLipReport report;
    bool certified{false};
    double sup_dist{0.0};
    double eps_prime{0.0};
    double theta{0.0};
    double eta{0.0};
    double delta{0.0};
    std::vector<ChartSpec> charts;
};

/// Closed-curve approximation in the chordal metric: anchors with arc gaps
/// below theta, local straightenings, one pinned open-curve run per arc, and
/// a certified reassembly at L + eps.
ClosedApproxResult approximate_closed(const ClosedPLCurve& curve, double L, double eps);

}  // namespace bilip

#endif  // BILIP_CIRCLE_HPP
