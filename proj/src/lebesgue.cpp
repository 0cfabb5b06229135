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

#include "bilip/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bilip/errors.hpp"
#include "bilip/verify.hpp"

namespace bilip {
namespace {

constexpr int kMaxBadIntervals = 10000;

// Derivative of the curve at x; throws at genuine corners.
Point2 derivative_at(const PLCurve& c, double x) {
    const auto& ts = c.breakpoints();
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (std::abs(ts[k] - x) > kParamTol) continue;
        if (k == 0) return c.velocity(0);
        if (k + 1 == ts.size()) return c.velocity(k - 1);
        const Point2 va = c.velocity(k - 1);
        const Point2 vb = c.velocity(k);
        const double scale = std::max({1.0, norm(va), norm(vb)});
        if (std::abs(va.x - vb.x) <= 1e-12 * scale && std::abs(va.y - vb.y) <= 1e-12 * scale)
            return va;
        throw PreconditionError("deviation: ambiguous derivative at a corner");
    }
    return c.velocity(c.segment_of(x));
}

// Prefix integral of z -> |phi'(z) - v| from `from`, evaluable at any t.
class DeviationIntegral {
  public:
    DeviationIntegral(const PLCurve& c, Point2 v, double from, double to) {
        const auto& ts = c.breakpoints();
        knots_.push_back(from);
        values_.push_back(0.0);
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double lo = std::max(from, ts[i]);
            const double hi = std::min(to, ts[i + 1]);
            if (hi - lo <= 0.0) continue;
            const double dev = dist(c.velocity(i), v);
            acc += dev * (hi - lo);
            knots_.push_back(hi);
            values_.push_back(acc);
            slopes_.push_back(dev);
        }
    }

    double at(double t) const {
        if (t <= knots_.front()) return 0.0;
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - knots_.begin());
        if (i >= knots_.size()) return values_.back();
        // value on [knots_[i-1], knots_[i]] grows at slopes_[i-1]
        return values_[i - 1] + slopes_[i - 1] * (t - knots_[i - 1]);
    }

    double average(double p, double q) const {
        if (!(q > p)) throw DomainError("deviation: need p < q");
        return (at(q) - at(p)) / (q - p);
    }

  private:
    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

bool inside_closed_union(double t, const std::vector<Interval>& merged) {
    for (const auto& iv : merged)
        if (t >= iv.lo - kParamTol && t <= iv.hi + kParamTol) return true;
    return false;
}

double uncovered_measure(double p, double q, const std::vector<Interval>& merged) {
    double covered = 0.0;
    for (const auto& iv : merged) {
        const double lo = std::max(p, iv.lo);
        const double hi = std::min(q, iv.hi);
        if (hi > lo) covered += hi - lo;
    }
    return (q - p) - covered;
}

// Genuine corner parameters (velocity changes) of a curve.
std::vector<double> corner_params(const PLCurve& c) {
    std::vector<double> out;
    const auto& ts = c.breakpoints();
    for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
        const Point2 va = c.velocity(k - 1);
        const Point2 vb = c.velocity(k);
        const double scale = std::max({1.0, norm(va), norm(vb)});
        if (std::abs(va.x - vb.x) > 1e-12 * scale || std::abs(va.y - vb.y) > 1e-12 * scale)
            out.push_back(ts[k]);
    }
    return out;
}

double dist_to_set(double x, const std::vector<double>& sorted) {
    if (sorted.empty()) return std::numeric_limits<double>::infinity();
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    double d = std::numeric_limits<double>::infinity();
    if (it != sorted.end()) d = std::min(d, *it - x);
    if (it != sorted.begin()) d = std::min(d, x - *(it - 1));
    return d;
}

}  // namespace

double deviation(const PLCurve& curve, double x, double p, double q) {
    if (!(p < q)) throw DomainError("deviation: need p < q");
    if (p < curve.domain_lo() - kParamTol || q > curve.domain_hi() + kParamTol)
        throw DomainError("deviation: [p,q] outside domain");
    const Point2 v = derivative_at(curve, x);
    const DeviationIntegral integral(curve, v, p, q);
    return integral.average(p, q);
}

BadSet bad_set(const PLCurve& curve, double x, double h, double eps, double L) {
    if (!(h > 0.0)) throw DomainError("bad_set: h must be positive");
    if (x - h < curve.domain_lo() - kParamTol || x + h > curve.domain_hi() + kParamTol)
        throw PreconditionError("bad_set: window (x-h, x+h) must lie inside the domain");
    if (!(eps > 0.0) || !(L >= 1.0)) throw DomainError("bad_set: need eps > 0, L >= 1");
    const double threshold = eps / (2.0 * L);
    const double wlo = x - h, whi = x + h;
    const Point2 v = derivative_at(curve, x);
    const DeviationIntegral integral(curve, v, wlo, whi);

    BadSet out;
    std::vector<Interval> merged;  // union of inflated intervals
    for (int iter = 0; iter <= kMaxBadIntervals; ++iter) {
        // candidate parameters: window ends, breakpoints inside, interval ends
        std::vector<double> cands{wlo, whi};
        for (double t : curve.breakpoints())
            if (t > wlo + kParamTol && t < whi - kParamTol) cands.push_back(t);
        for (const auto& iv : out.intervals) {
            for (double t : {iv.p_minus, iv.q_plus})
                if (t > wlo + kParamTol && t < whi - kParamTol) cands.push_back(t);
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end(),
                                [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
                    cands.end());

        bool violated = false;
        bool found_selectable = false;
        double best_unc = -1.0;
        double best_p = 0.0, best_q = 0.0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                const double p = cands[i], q = cands[j];
                if (q - p <= kParamTol) continue;
                const double m = integral.average(p, q);
                if (m < threshold - 1e-15) continue;
                if (!inside_closed_union(p, merged) || !inside_closed_union(q, merged))
                    violated = true;
                const double unc = uncovered_measure(p, q, merged);
                if (unc > best_unc + 1e-15 ||
                    (std::abs(unc - best_unc) <= 1e-15 &&
                     (p < best_p - 1e-15 ||
                      (std::abs(p - best_p) <= 1e-15 && q > best_q + 1e-15)))) {
                    best_unc = unc;
                    best_p = p;
                    best_q = q;
                    found_selectable = true;
                }
            }
        }
        if (!violated) {
            out.total_measure = total_measure(merge_intervals(out.inflated()));
            return out;
        }
        if (iter == kMaxBadIntervals || !found_selectable)
            throw ConvergenceError("bad_set: interval budget exhausted (pathological input)");
        const double width = best_q - best_p;
        out.intervals.push_back({best_p, best_q, best_p - width, best_q + width, best_unc});
        merged = merge_intervals(out.inflated());
    }
    throw ConvergenceError("bad_set: unreachable");
}

LebesgueWindow lebesgue_window(const PLCurve& curve, double x, double ell, double eps, double L,
                               double eps_tilde) {
    if (!(ell > 0.0) || !(eps_tilde > 0.0))
        throw DomainError("lebesgue_window: need ell, eps_tilde > 0");
    const double lo = curve.domain_lo(), hi = curve.domain_hi();
    if (!(x > lo && x < hi)) throw PreconditionError("lebesgue_window: x must be interior");
    LebesgueWindow out;
    // the deviation window is clipped to the domain near the endpoints
    out.h = std::min({ell / eps_tilde, x - lo, hi - x});
    if (out.h <= 0.0) throw PreconditionError("lebesgue_window: window does not fit the domain");
    out.h = std::max(out.h, std::min(ell, std::min(x - lo, hi - x)));
    out.bad = bad_set(curve, x, out.h, eps, L);
    const Interval window{std::max(lo, x - ell), std::min(hi, x + ell)};
    out.parts = subtract_intervals(window, out.bad.inflated());
    out.measure = total_measure(out.parts);
    if (out.measure < (2.0 - eps) * ell)
        throw PreconditionError("lebesgue_window: window too small at this scale");
    return out;
}

namespace {

struct CellGeometry {
    double t0, cell, w;  // domain origin, cell width, central-part width
    double central_lo(std::int64_t m) const { return t0 + (m + 0.5) * cell - 0.5 * w; }
    double central_hi(std::int64_t m) const { return t0 + (m + 0.5) * cell + 0.5 * w; }
    double cell_lo(std::int64_t m) const { return t0 + m * cell; }
    double cell_hi(std::int64_t m) const { return t0 + (m + 1) * cell; }
};

// Anchor of an admissible cell: the central-part point farthest from the
// corner set, window inset by eps_tilde.
CellAnchors make_anchors(const CellGeometry& g, std::int64_t m, const std::vector<double>& corners,
                         double eps_tilde) {
    const double clo = g.central_lo(m), chi = g.central_hi(m);
    double best_x = 0.5 * (clo + chi);
    double best_d = dist_to_set(best_x, corners);
    for (double cand : {clo, chi}) {
        const double d = dist_to_set(cand, corners);
        if (d > best_d) {
            best_d = d;
            best_x = cand;
        }
    }
    // local peaks of the corner-distance function (midpoints of corner gaps)
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
        const double mid = 0.5 * (corners[i] + corners[i + 1]);
        if (mid > clo && mid < chi) {
            const double d = dist_to_set(mid, corners);
            if (d > best_d) {
                best_d = d;
                best_x = mid;
            }
        }
    }
    const double ell = std::min(best_x - g.cell_lo(m), g.cell_hi(m) - best_x);
    CellAnchors a;
    a.m = m;
    a.x = best_x;
    a.x_minus = best_x - (1.0 - eps_tilde) * ell;
    a.x_plus = best_x + (1.0 - eps_tilde) * ell;
    return a;
}

struct Assembly {
    PartitionReport report;
    bool pin_ok = true;
};

Assembly assemble_partition(const PLCurve& curve, std::int64_t N, double eps_tilde,
                            const std::vector<double>& corners, const StraightenOptions& opt) {
    const double t0 = curve.domain_lo();
    const double tn = curve.domain_hi();
    const double D = tn - t0;
    const CellGeometry g{t0, D / static_cast<double>(N), eps_tilde * D / static_cast<double>(N)};
    const double R = 0.5 * g.cell;

    Assembly out;
    PartitionReport& rep = out.report;
    rep.N = N;

    // blocked cells: central part entirely within R of the corner set
    std::vector<Interval> regions;
    for (double c : corners) regions.push_back({c - R, c + R});
    regions = merge_intervals(regions);
    std::vector<std::pair<std::int64_t, std::int64_t>> blocked;  // [lo, hi] inclusive
    for (const auto& r : regions) {
        const double lo_center = r.lo + 0.5 * g.w;
        const double hi_center = r.hi - 0.5 * g.w;
        std::int64_t mlo = static_cast<std::int64_t>(std::ceil((lo_center - t0) / g.cell - 0.5 - 1e-12));
        std::int64_t mhi = static_cast<std::int64_t>(std::floor((hi_center - t0) / g.cell - 0.5 + 1e-12));
        mlo = std::max<std::int64_t>(mlo, 0);
        mhi = std::min<std::int64_t>(mhi, N - 1);
        if (mlo <= mhi) blocked.emplace_back(mlo, mhi);
    }
    std::sort(blocked.begin(), blocked.end());
    // merge adjacent ranges
    std::vector<std::pair<std::int64_t, std::int64_t>> branges;
    for (auto& b : blocked) {
        if (!branges.empty() && b.first <= branges.back().second + 1)
            branges.back().second = std::max(branges.back().second, b.second);
        else
            branges.push_back(b);
    }

    // cell runs and admissible-run anchors
    std::int64_t cursor = 0;
    std::int64_t blocked_cells = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> admissible_runs;  // [lo, hi] inclusive
    for (const auto& b : branges) {
        if (cursor < b.first) {
            rep.runs.push_back({cursor, b.first, true});
            admissible_runs.emplace_back(cursor, b.first - 1);
        }
        rep.runs.push_back({b.first, b.second + 1, false});
        blocked_cells += b.second + 1 - b.first;
        cursor = b.second + 1;
    }
    if (cursor < N) {
        rep.runs.push_back({cursor, N, true});
        admissible_runs.emplace_back(cursor, N - 1);
    }
    rep.admissible_cells = N - blocked_cells;
    rep.non_admissible_measure = static_cast<double>(blocked_cells) * g.cell;

    // hulls per admissible run, split at corners via anchor positions,
    // trimmed to keep a margin of R/4 from every genuine corner
    const double margin = 0.25 * R;
    std::vector<Interval> components;
    for (const auto& run : admissible_runs) {
        const CellAnchors first = make_anchors(g, run.first, corners, eps_tilde);
        const CellAnchors last =
            run.second == run.first ? first : make_anchors(g, run.second, corners, eps_tilde);
        rep.edge_anchors.push_back(first);
        if (run.second != run.first) rep.edge_anchors.push_back(last);
        // corners strictly inside the hull split it
        std::vector<double> cuts;
        for (double c : corners)
            if (c > first.x_minus && c < last.x_plus) cuts.push_back(c);
        double lo = first.x_minus;
        if (run.first == 0) lo = t0;  // boundary-linear extension
        for (std::size_t ci = 0; ci <= cuts.size(); ++ci) {
            double hi = ci < cuts.size() ? cuts[ci] - margin : last.x_plus;
            if (ci == cuts.size() && run.second == N - 1) hi = tn;
            if (hi > lo) components.push_back({lo, hi});
            if (ci < cuts.size()) lo = cuts[ci] + margin;
        }
    }
    components = merge_intervals(components);
    rep.good_set = components;
    rep.good_complement_measure = D - total_measure(components);

    if (opt.pin_a_prime > 0.0) {
        // bad intervals must not reach the pinned end strips
        const auto bad = subtract_intervals({t0, tn}, components);
        for (const auto& b : bad) {
            if (b.lo < t0 + opt.pin_a_prime + kParamTol) out.pin_ok = false;
            if (b.hi > tn - opt.pin_a_prime - kParamTol) out.pin_ok = false;
        }
    }
    return out;
}

}  // namespace

StraightenResult straighten_lebesgue(const PLCurve& curve, double eps, double L,
                                     const ConstantBudget& budget,
                                     const StraightenOptions& opt) {
    if (!(eps > 0.0) || !(L > 1.0)) throw DomainError("straighten_lebesgue: need eps > 0, L > 1");
    const double D = curve.domain_length();
    if (!opt.assume_bilip) {
        const auto pre = check_bilip(curve, L, budget.grid_step * D, budget.slack);
        if (!pre.pass)
            throw PreconditionError("straighten_lebesgue: input fails check_bilip(L)");
    }
    std::vector<double> corners = corner_params(curve);
    if (opt.pin_a > 0.0) {
        for (double c : corners)
            if (c < curve.domain_lo() + opt.pin_a - kParamTol ||
                c > curve.domain_hi() - opt.pin_a + kParamTol)
                throw PreconditionError("straighten_lebesgue: pinned strips are not linear");
    }

    // N escalation: start near 1/eps^2, double until the good-set complement
    // is small enough (and pinned strips are clear of every bad interval)
    const double start = std::clamp(1.0 / (eps * eps), 64.0, 65536.0);
    std::int64_t N = 64;
    while (static_cast<double>(N) < start) N *= 2;
    // the cell half-width must stay below the Lebesgue-scale cap 1/(4L)
    while (static_cast<double>(N) <= 2.0 * L * D) N *= 2;

    for (; N <= opt.max_cells; N *= 2) {
        Assembly a = assemble_partition(curve, N, budget.eps_tilde, corners, opt);
        if (a.report.good_complement_measure <= eps * D && a.pin_ok) {
            a.report.sup_distance = 0.0;  // every replacement here is the identity
            return {curve, std::move(a.report)};
        }
    }
    throw ConvergenceError(
        "straighten_lebesgue: cannot reach the measure bound within the cell cap");
}

}  // namespace bilip
