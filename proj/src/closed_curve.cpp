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

#include "bilip/closed_curve.hpp"

#include <algorithm>
#include <cmath>

#include "bilip/errors.hpp"

namespace bilip {

double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

ClosedPLCurve::ClosedPLCurve(std::vector<double> angles, std::vector<Point2> vertices)
    : as_(std::move(angles)), ps_(std::move(vertices)) {
    if (as_.size() != ps_.size())
        throw DomainError("ClosedPLCurve: angle/vertex count mismatch");
    if (as_.size() < 3) throw DomainError("ClosedPLCurve: need at least three vertices");
    if (as_.front() < 0.0 || as_.back() >= kTwoPi)
        throw DomainError("ClosedPLCurve: angles must lie in [0, 2*pi)");
    for (std::size_t i = 0; i + 1 < as_.size(); ++i)
        if (!(as_[i] < as_[i + 1]))
            throw DomainError("ClosedPLCurve: angles must be strictly increasing");
    for (const auto& p : ps_)
        if (!finite(p)) throw DomainError("ClosedPLCurve: vertex coordinates must be finite");
}

double ClosedPLCurve::segment_width(std::size_t i) const {
    if (i >= as_.size()) throw DomainError("ClosedPLCurve: segment index out of range");
    if (i + 1 < as_.size()) return as_[i + 1] - as_[i];
    return as_.front() + kTwoPi - as_.back();
}

double ClosedPLCurve::speed(std::size_t i) const {
    const Point2 a = ps_[i];
    const Point2 b = ps_[(i + 1) % ps_.size()];
    return dist(a, b) / segment_width(i);
}

Point2 ClosedPLCurve::velocity(std::size_t i) const {
    const Point2 a = ps_[i];
    const Point2 b = ps_[(i + 1) % ps_.size()];
    const double w = segment_width(i);
    return {(b.x - a.x) / w, (b.y - a.y) / w};
}

Point2 ClosedPLCurve::eval(double angle) const {
    double t = wrap_angle(angle);
    // segments cover [a0, a0 + 2*pi); pull t into that window
    if (t < as_.front()) t += kTwoPi;
    auto it = std::upper_bound(as_.begin(), as_.end(), t);
    std::size_t i = (it == as_.begin()) ? as_.size() - 1 : static_cast<std::size_t>(it - as_.begin()) - 1;
    const double w = segment_width(i);
    const double u = (t - as_[i]) / w;
    const Point2 a = ps_[i];
    const Point2 b = ps_[(i + 1) % ps_.size()];
    return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

PLCurve ClosedPLCurve::lift(double a, double b) const {
    if (!(b - a < kTwoPi)) throw DomainError("lift: chart must be shorter than 2*pi");
    if (!(a < b)) throw DomainError("lift: need a < b");
    std::vector<double> ts;
    ts.push_back(a);
    // unwrap angular breakpoints into (a, b)
    const double base = std::floor((a - as_.front()) / kTwoPi) * kTwoPi;
    for (double off = base; off < b + kTwoPi; off += kTwoPi) {
        for (double alpha : as_) {
            const double t = alpha + off;
            if (t > a + kParamTol && t < b - kParamTol) ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.push_back(b);
    std::vector<Point2> ps;
    ps.reserve(ts.size());
    for (double t : ts) ps.push_back(eval(t));
    return PLCurve(std::move(ts), std::move(ps));
}

ClosedPLCurve ClosedPLCurve::simplified(double tol) const {
    const std::size_t n = as_.size();
    std::vector<double> as;
    std::vector<Point2> ps;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 va = velocity((i + n - 1) % n);
        const Point2 vb = velocity(i);
        const double scale = std::max({1.0, norm(va), norm(vb)});
        if (std::abs(va.x - vb.x) <= tol * scale && std::abs(va.y - vb.y) <= tol * scale) continue;
        as.push_back(as_[i]);
        ps.push_back(ps_[i]);
    }
    if (as.size() < 3) return *this;
    return ClosedPLCurve(std::move(as), std::move(ps));
}

}  // namespace bilip
