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

#ifndef BILIP_VERIFY_HPP
#define BILIP_VERIFY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bilip/closed_curve.hpp"
#include "bilip/curve.hpp"
#include "bilip/exec.hpp"
#include "bilip/geometry.hpp"

namespace bilip {

/// Parameter pair realizing an extremal chord/parameter ratio.
struct Witness {
    double p{0.0};
    double q{0.0};
};

/// Measured two-sided Lipschitz data of a curve.
///
/// lip_upper is the supremum and inv_lip_lower the infimum of
/// |f(q)-f(p)| / d(p,q) over parameter pairs; the witnesses realize the
/// reported values within 1e-9. inv_lip_lower == 0 is a reportable state
/// (self-intersection or stall), not an error.
struct BiLipReport {
    double lip_upper{0.0};
    double inv_lip_lower{0.0};
    Witness witness_max{};
    Witness witness_min{};
    double grid_step{0.0};

    /// max(lip_upper, 1/inv_lip_lower); infinity when inv_lip_lower == 0.
    double constant() const;
    bool passes(double L, double slack) const;
};

struct CheckResult {
    bool pass{false};
    BiLipReport report{};
};

struct CornerViolation {
    std::size_t breakpoint_index{0};
    double t{0.0};
    double turning{0.0};
    double bound{0.0};
};

/// Default verification grid: (domain length) / 2048.
double default_grid_step(const PLCurve& curve);

/// Exact supremum of chord/parameter ratios: the max segment speed.
double lipschitz_upper(const PLCurve& curve);

/// Infimum of |f(q)-f(p)|/|q-p| over all parameter pairs, computed per
/// ordered segment pair by grid sampling at grid_step plus golden-section
/// refinement, with exact seeds at corner straddles.
std::pair<double, Witness> inverse_lipschitz(const PLCurve& curve, double grid_step,
                                             Exec exec = Exec::parallel);

/// Same infimum restricted to pairs with one parameter in U and the other in
/// V. Returns +infinity with a zero witness when the pair set is empty.
/// axis_cap > 0 bounds the per-box sample counts (screening use); zero keeps
/// the full grid density.
std::pair<double, Witness> min_ratio_between(const PLCurve& curve,
                                             const std::vector<Interval>& u_set,
                                             const std::vector<Interval>& v_set, double grid_step,
                                             Exec exec = Exec::parallel, long axis_cap = 0);

/// pass iff lip_upper <= L*(1+slack) and inv_lip_lower >= 1/(L*(1+slack)).
CheckResult check_bilip(const PLCurve& curve, double L, double grid_step, double slack = 1e-6,
                        Exec exec = Exec::parallel);

/// Interior breakpoints whose adjacent segments both run at speed
/// >= L*(1-1e-9) must turn by at most pi - 2*asin(1/L^2) + 1e-9.
std::vector<CornerViolation> corner_angle_check(const PLCurve& curve, double L);

/// Closed-curve analogues in the chordal metric on S^1.
BiLipReport measure_closed(const ClosedPLCurve& curve, double grid_step,
                           Exec exec = Exec::parallel);
CheckResult check_bilip_closed(const ClosedPLCurve& curve, double L, double grid_step,
                               double slack = 1e-6, Exec exec = Exec::parallel);

/// Max over an angular grid of |a(t) - b(t)| for closed curves.
double sup_distance_closed(const ClosedPLCurve& a, const ClosedPLCurve& b, double grid_step);

}  // namespace bilip

#endif  // BILIP_VERIFY_HPP
