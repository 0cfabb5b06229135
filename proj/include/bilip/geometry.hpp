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

#ifndef BILIP_GEOMETRY_HPP
#define BILIP_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bilip {

// Absolute tolerance for comparisons of domain parameters.
inline constexpr double kParamTol = 1e-12;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Point2 {
    double x{0.0};
    double y{0.0};

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Unit direction in the plane (|u| = 1 within 1e-12).
struct DirVec {
    double ux{1.0};
    double uy{0.0};

    DirVec() = default;
    DirVec(double x, double y) : ux(x), uy(y) {
        const double n = std::sqrt(ux * ux + uy * uy);
        if (!(std::abs(n - 1.0) <= 1e-12))
            throw std::invalid_argument("DirVec: components must be normalized");
    }

    static DirVec of(Point2 v) {
        const double n = norm(v);
        if (n <= 0.0) throw std::invalid_argument("DirVec: zero vector has no direction");
        DirVec d;
        d.ux = v.x / n;
        d.uy = v.y / n;
        return d;
    }
};

inline double dot(DirVec a, DirVec b) { return a.ux * b.ux + a.uy * b.uy; }

// Angle between two directions, in [0, pi].
inline double angle_between(DirVec a, DirVec b) {
    const double c = std::clamp(dot(a, b), -1.0, 1.0);
    return std::acos(c);
}

// Angle between two nonzero vectors, in [0, pi].
inline double angle_between(Point2 a, Point2 b) {
    const double na = norm(a), nb = norm(b);
    if (na <= 0.0 || nb <= 0.0)
        throw std::invalid_argument("angle_between: zero vector");
    const double c = std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

/// Open parameter interval (lo, hi) with lo < hi.
struct Interval {
    double lo{0.0};
    double hi{0.0};

    double length() const { return hi - lo; }
    bool contains(double t) const { return lo <= t && t <= hi; }
};

/// Total measure of a list of pairwise disjoint intervals.
inline double total_measure(const std::vector<Interval>& xs) {
    double m = 0.0;
    for (const auto& iv : xs) m += iv.length();
    return m;
}

/// Sorted union of intervals, overlapping or touching ones merged.
std::vector<Interval> merge_intervals(std::vector<Interval> xs, double touch_tol = kParamTol);

/// Set difference (lo,hi) minus a list of intervals; result sorted and disjoint.
std::vector<Interval> subtract_intervals(Interval window, const std::vector<Interval>& cut);

}  // namespace bilip

#endif  // BILIP_GEOMETRY_HPP
