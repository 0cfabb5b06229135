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

#ifndef BILIP_CURVE_HPP
#define BILIP_CURVE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bilip/geometry.hpp"

namespace bilip {

/// Open piecewise-linear parametric curve.
///
/// Breakpoints t0 < t1 < ... < tn carry one vertex each; evaluation is the
/// linear interpolation between consecutive vertices. Values are immutable
/// after construction and every operation returns a new curve.
class PLCurve {
  public:
    PLCurve(std::vector<double> breakpoints, std::vector<Point2> vertices);

    const std::vector<double>& breakpoints() const { return ts_; }
    const std::vector<Point2>& vertices() const { return ps_; }
    std::size_t segment_count() const { return ts_.size() - 1; }

    double domain_lo() const { return ts_.front(); }
    double domain_hi() const { return ts_.back(); }
    double domain_length() const { return ts_.back() - ts_.front(); }

    Point2 front() const { return ps_.front(); }
    Point2 back() const { return ps_.back(); }

    Point2 eval(double t) const;

    /// |P(i+1) - P(i)| / (t(i+1) - t(i)).
    double speed(std::size_t segment_index) const;

    /// Velocity vector of a segment (difference quotient).
    Point2 velocity(std::size_t segment_index) const;

    /// Max segment speed; the Lipschitz constant of a PL curve.
    double max_speed() const;

    /// Index of the segment containing t (breakpoints resolve rightward,
    /// except tn which belongs to the last segment).
    std::size_t segment_of(double t) const;

    /// Sum of chord lengths of the restriction to [u, v].
    double arclength(double u, double v) const;
    double arclength() const { return arclength(domain_lo(), domain_hi()); }

    /// Same geometry with breakpoints at s and t added (snapped to existing
    /// ones within kParamTol).
    PLCurve with_breakpoints(double s, double t) const;

    PLCurve restrict_to(double u, double v) const;
    PLCurve shift_domain(double offset) const;

    /// Drops breakpoints whose adjacent segments share the same velocity
    /// vector (componentwise within tol), leaving evaluation unchanged.
    PLCurve simplified(double tol = 1e-13) const;

    /// True if the whole curve is a single constant-velocity segment
    /// (all interior breakpoints removable within tol).
    bool is_linear(double tol = 1e-13) const;

    /// Max turning angle over interior breakpoints strictly inside (u, v);
    /// 0 if none.
    double max_turning_angle(double u, double v) const;

  private:
    std::vector<double> ts_;
    std::vector<Point2> ps_;
};

/// Glues two curves whose domains abut and whose junction vertices agree
/// within kParamTol.
PLCurve concat(const PLCurve& left, const PLCurve& right);

/// The sub-arc on (s, t) replaced by its chord, linearly parametrized over
/// the same interval; identity for s == t.
PLCurve segment_replace(const PLCurve& curve, double s, double t);

struct FastReparamResult {
    PLCurve curve;
    double t_plus;
};

/// The sub-arc on (s, t) replaced by its chord parametrized at speed exactly
/// L; the domain shrinks by t - t_plus where t_plus = s + chord / L.
FastReparamResult fast_reparam_segment(const PLCurve& curve, double s, double t, double L);

/// Max over a uniform grid (step <= grid_step, endpoints included) of
/// |a(x) - b(x)|; the domains must agree within kParamTol.
double sup_distance(const PLCurve& a, const PLCurve& b, double grid_step);

}  // namespace bilip

#endif  // BILIP_CURVE_HPP
