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

#include "bilip/curve.hpp"

#include <algorithm>
#include <cmath>

#include "bilip/errors.hpp"

namespace bilip {

std::vector<Interval> merge_intervals(std::vector<Interval> xs, double touch_tol) {
    if (xs.empty()) return xs;
    std::sort(xs.begin(), xs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.push_back(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i].lo <= out.back().hi + touch_tol)
            out.back().hi = std::max(out.back().hi, xs[i].hi);
        else
            out.push_back(xs[i]);
    }
    return out;
}

std::vector<Interval> subtract_intervals(Interval window, const std::vector<Interval>& cut) {
    std::vector<Interval> merged = merge_intervals(cut);
    std::vector<Interval> out;
    double lo = window.lo;
    for (const auto& c : merged) {
        if (c.hi <= window.lo || c.lo >= window.hi) continue;
        const double a = std::max(c.lo, window.lo);
        const double b = std::min(c.hi, window.hi);
        if (a > lo) out.push_back({lo, a});
        lo = std::max(lo, b);
    }
    if (lo < window.hi) out.push_back({lo, window.hi});
    return out;
}

PLCurve::PLCurve(std::vector<double> breakpoints, std::vector<Point2> vertices)
    : ts_(std::move(breakpoints)), ps_(std::move(vertices)) {
    if (ts_.size() != ps_.size()) throw DomainError("PLCurve: breakpoint/vertex count mismatch");
    if (ts_.size() < 2) throw DomainError("PLCurve: need at least two breakpoints");
    for (std::size_t i = 0; i + 1 < ts_.size(); ++i)
        if (!(ts_[i] < ts_[i + 1]))
            throw DomainError("PLCurve: breakpoints must be strictly increasing");
    for (const auto& p : ps_)
        if (!finite(p)) throw DomainError("PLCurve: vertex coordinates must be finite");
    if (!std::isfinite(ts_.front()) || !std::isfinite(ts_.back()))
        throw DomainError("PLCurve: breakpoints must be finite");
}

std::size_t PLCurve::segment_of(double t) const {
    if (t < ts_.front() - kParamTol || t > ts_.back() + kParamTol)
        throw DomainError("PLCurve: parameter outside domain");
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts_.begin());
    if (i == 0) return 0;
    if (i >= ts_.size()) return ts_.size() - 2;
    return i - 1;
}

Point2 PLCurve::eval(double t) const {
    const std::size_t i = segment_of(t);
    const double dt = ts_[i + 1] - ts_[i];
    const double w = (t - ts_[i]) / dt;
    return {ps_[i].x + w * (ps_[i + 1].x - ps_[i].x), ps_[i].y + w * (ps_[i + 1].y - ps_[i].y)};
}

double PLCurve::speed(std::size_t i) const {
    if (i + 1 >= ts_.size()) throw DomainError("PLCurve::speed: segment index out of range");
    return dist(ps_[i + 1], ps_[i]) / (ts_[i + 1] - ts_[i]);
}

Point2 PLCurve::velocity(std::size_t i) const {
    if (i + 1 >= ts_.size()) throw DomainError("PLCurve::velocity: segment index out of range");
    const double dt = ts_[i + 1] - ts_[i];
    return {(ps_[i + 1].x - ps_[i].x) / dt, (ps_[i + 1].y - ps_[i].y) / dt};
}

double PLCurve::max_speed() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < ts_.size(); ++i) m = std::max(m, speed(i));
    return m;
}

double PLCurve::arclength(double u, double v) const {
    if (u > v + kParamTol) throw DomainError("arclength: u > v");
    if (u >= v) return 0.0;
    const std::size_t iu = segment_of(u);
    const std::size_t iv = segment_of(v);
    if (iu == iv) return dist(eval(v), eval(u));
    double len = dist(ps_[iu + 1], eval(u));
    for (std::size_t i = iu + 1; i < iv; ++i) len += dist(ps_[i + 1], ps_[i]);
    len += dist(eval(v), ps_[iv]);
    return len;
}

PLCurve PLCurve::with_breakpoints(double s, double t) const {
    for (double u : {s, t})
        if (u < ts_.front() - kParamTol || u > ts_.back() + kParamTol)
            throw DomainError("with_breakpoints: parameter outside domain");
    std::vector<double> extra{std::min(s, t), std::max(s, t)};
    std::vector<double> ts;
    std::vector<Point2> ps;
    ts.reserve(ts_.size() + 2);
    ps.reserve(ps_.size() + 2);
    std::size_t e = 0;
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        while (e < extra.size() && extra[e] < ts_[i] - kParamTol) {
            if (ts.empty() || extra[e] > ts.back() + kParamTol) {
                ts.push_back(extra[e]);
                ps.push_back(eval(extra[e]));
            }
            ++e;
        }
        ts.push_back(ts_[i]);
        ps.push_back(ps_[i]);
        while (e < extra.size() && extra[e] <= ts_[i] + kParamTol) ++e;  // snap to existing
    }
    return PLCurve(std::move(ts), std::move(ps));
}

PLCurve PLCurve::restrict_to(double u, double v) const {
    if (u < ts_.front() - kParamTol || v > ts_.back() + kParamTol || !(u < v))
        throw DomainError("restrict_to: invalid range");
    std::vector<double> ts;
    std::vector<Point2> ps;
    ts.push_back(u);
    ps.push_back(eval(u));
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        if (ts_[i] > u + kParamTol && ts_[i] < v - kParamTol) {
            ts.push_back(ts_[i]);
            ps.push_back(ps_[i]);
        }
    }
    ts.push_back(v);
    ps.push_back(eval(v));
    return PLCurve(std::move(ts), std::move(ps));
}

PLCurve PLCurve::shift_domain(double offset) const {
    std::vector<double> ts = ts_;
    for (double& t : ts) t += offset;
    return PLCurve(std::move(ts), ps_);
}

PLCurve PLCurve::simplified(double tol) const {
    std::vector<double> ts;
    std::vector<Point2> ps;
    ts.push_back(ts_.front());
    ps.push_back(ps_.front());
    for (std::size_t i = 1; i + 1 < ts_.size(); ++i) {
        const Point2 va = velocity(i - 1);
        const Point2 vb = velocity(i);
        const double scale = std::max({1.0, norm(va), norm(vb)});
        if (std::abs(va.x - vb.x) <= tol * scale && std::abs(va.y - vb.y) <= tol * scale) {
            // collinear through this breakpoint at matching speed: drop it
            continue;
        }
        ts.push_back(ts_[i]);
        ps.push_back(ps_[i]);
    }
    ts.push_back(ts_.back());
    ps.push_back(ps_.back());
    return PLCurve(std::move(ts), std::move(ps));
}

bool PLCurve::is_linear(double tol) const {
    for (std::size_t i = 1; i + 1 < ts_.size(); ++i) {
        const Point2 va = velocity(i - 1);
        const Point2 vb = velocity(i);
        const double scale = std::max({1.0, norm(va), norm(vb)});
        if (std::abs(va.x - vb.x) > tol * scale || std::abs(va.y - vb.y) > tol * scale)
            return false;
    }
    return true;
}

double PLCurve::max_turning_angle(double u, double v) const {
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < ts_.size(); ++i) {
        if (ts_[i] <= u + kParamTol || ts_[i] >= v - kParamTol) continue;
        const Point2 va = velocity(i - 1);
        const Point2 vb = velocity(i);
        if (norm(va) <= 0.0 || norm(vb) <= 0.0) continue;
        worst = std::max(worst, angle_between(va, vb));
    }
    return worst;
}

PLCurve concat(const PLCurve& left, const PLCurve& right) {
    if (std::abs(left.domain_hi() - right.domain_lo()) > kParamTol)
        throw DomainError("concat: domains do not abut");
    if (dist(left.back(), right.front()) > kParamTol)
        throw DomainError("concat: junction vertices differ");
    std::vector<double> ts = left.breakpoints();
    std::vector<Point2> ps = left.vertices();
    const auto& rts = right.breakpoints();
    const auto& rps = right.vertices();
    for (std::size_t i = 1; i < rts.size(); ++i) {
        ts.push_back(rts[i]);
        ps.push_back(rps[i]);
    }
    return PLCurve(std::move(ts), std::move(ps));
}

PLCurve segment_replace(const PLCurve& curve, double s, double t) {
    if (s > t) std::swap(s, t);
    if (s < curve.domain_lo() - kParamTol || t > curve.domain_hi() + kParamTol)
        throw DomainError("segment_replace: parameters outside domain");
    if (t - s <= kParamTol) return curve;
    const PLCurve cut = curve.with_breakpoints(s, t);
    std::vector<double> ts;
    std::vector<Point2> ps;
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u > s + kParamTol && u < t - kParamTol) continue;
        ts.push_back(u);
        ps.push_back(cut.vertices()[i]);
    }
    return PLCurve(std::move(ts), std::move(ps));
}

FastReparamResult fast_reparam_segment(const PLCurve& curve, double s, double t, double L) {
    if (!(s < t)) throw DomainError("fast_reparam_segment: need s < t");
    if (s < curve.domain_lo() - kParamTol || t > curve.domain_hi() + kParamTol)
        throw DomainError("fast_reparam_segment: parameters outside domain");
    const Point2 A = curve.eval(s);
    const Point2 B = curve.eval(t);
    const double chord = dist(A, B);
    if (chord <= kParamTol) throw DomainError("fast_reparam_segment: degenerate chord");
    const double t_plus = s + chord / L;
    if (t_plus > t + 1e-9)
        throw PreconditionError("fast_reparam_segment: chord exceeds L*(t-s); input not L-Lipschitz");
    const double shift = t - t_plus;
    const PLCurve cut = curve.with_breakpoints(s, t);
    std::vector<double> ts;
    std::vector<Point2> ps;
    // prefix up to and including s
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u > s + kParamTol) break;
        ts.push_back(u);
        ps.push_back(cut.vertices()[i]);
    }
    // chord at speed L
    if (t_plus > ts.back() + kParamTol) {
        ts.push_back(t_plus);
        ps.push_back(B);
    }
    // suffix after t, shifted
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u <= t + kParamTol) continue;
        ts.push_back(u - shift);
        ps.push_back(cut.vertices()[i]);
    }
    return {PLCurve(std::move(ts), std::move(ps)), t_plus};
}

double sup_distance(const PLCurve& a, const PLCurve& b, double grid_step) {
    if (std::abs(a.domain_lo() - b.domain_lo()) > kParamTol ||
        std::abs(a.domain_hi() - b.domain_hi()) > kParamTol)
        throw DomainError("sup_distance: domains differ");
    const double lo = a.domain_lo();
    const double hi = std::min(a.domain_hi(), b.domain_hi());
    const long n = std::max(2L, static_cast<long>(std::ceil((hi - lo) / grid_step)) + 1);
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long k = 0; k < n; ++k) {
        const double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
        worst = std::max(worst, dist(a.eval(t), b.eval(t)));
    }
    return worst;
}

}  // namespace bilip
