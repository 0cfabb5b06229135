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

#include "bilip/circle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "bilip/constants.hpp"
#include "bilip/errors.hpp"
#include "bilip/lebesgue.hpp"
#include "bilip/pipeline.hpp"

namespace bilip {
namespace {

double chord_arc_ratio(double theta) { return 2.0 * std::sin(0.5 * theta) / theta; }

// ((L/(1-e') + e')/(1-e') + e')/(1-e'): the constant chain of the closed
// construction for a given chart distortion budget.
double constant_chain(double L, double eps_prime) {
    const double inv = 1.0 / (1.0 - eps_prime);
    return ((L * inv + eps_prime) * inv + eps_prime) * inv;
}

struct Anchor {
    double angle;       // p_i in [0, 2*pi)
    double clearance;   // distance to the nearest breakpoint of its segment
};

}  // namespace

double choose_theta(double eps_prime) {
    if (!(eps_prime > 0.0 && eps_prime < 1.0))
        throw PreconditionError("choose_theta: need 0 < eps_prime < 1");
    const double target = 1.0 - eps_prime;
    double hi = 0.5 * kPi;
    if (chord_arc_ratio(hi) >= target) return hi;
    double lo = 1e-9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chord_arc_ratio(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;  // ratio(lo) >= 1 - eps_prime by construction
}

ClosedApproxResult approximate_closed(const ClosedPLCurve& curve, double L, double eps) {
    if (!(L > 1.0) || !(eps > 0.0))
        throw PreconditionError("approximate_closed: need L > 1, eps > 0");
    const double grid = kTwoPi / 2048.0;
    const auto pre = check_bilip_closed(curve, L, grid, 1e-6);
    if (!pre.pass)
        throw PreconditionError("approximate_closed: input fails the chordal check at L");

    // Step 0: chart distortion budget and chord/arc constant
    double eps_prime = 0.5;
    for (int k = 1; k <= 60; ++k, eps_prime *= 0.5)
        if (eps_prime < 0.5 && constant_chain(L, eps_prime) <= L + 0.5 * eps) break;
    const double theta = choose_theta(eps_prime);
    const double inv = 1.0 / (1.0 - eps_prime);

    // Step I: anchors on a uniform grid, nudged to stay clear of corners
    const int M = static_cast<int>(std::floor(kTwoPi / (0.75 * theta))) + 1;
    std::vector<Anchor> anchors;
    const auto& as = curve.angles();
    const std::size_t n = curve.size();
    for (int i = 0; i < M; ++i) {
        double g = kTwoPi * (i + 0.5) / M;
        // containing segment; grid points below the first breakpoint live on
        // the wrap segment and are clamped in unwrapped coordinates
        auto it = std::upper_bound(as.begin(), as.end(), g);
        const std::size_t seg = (it == as.begin()) ? n - 1 : static_cast<std::size_t>(it - as.begin()) - 1;
        const double lo = as[seg];
        const double hi = lo + curve.segment_width(seg);
        if (g < lo) g += kTwoPi;
        const double clearance = std::min(theta / 16.0, 0.25 * (hi - lo));
        const double pc = std::clamp(g, lo + clearance, hi - clearance);
        anchors.push_back({wrap_angle(pc), std::min(pc - lo, hi - pc)});
    }
    std::sort(anchors.begin(), anchors.end(),
              [](const Anchor& x, const Anchor& y) { return x.angle < y.angle; });
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
        if (!(anchors[i].angle < anchors[i + 1].angle - kParamTol))
            throw PreconditionError("approximate_closed: anchor placement collapsed");

    // gaps between consecutive anchors must stay below theta
    std::vector<double> gaps(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const double next =
            i + 1 < anchors.size() ? anchors[i + 1].angle : anchors[0].angle + kTwoPi;
        gaps[i] = next - anchors[i].angle;
        if (!(gaps[i] < theta))
            throw PreconditionError("approximate_closed: anchor gap reached theta");
    }

    // local straightenings at the anchors (identity on the PL carrier, but
    // they fix the linear strips (s_i, t_i) the per-arc runs pin to)
    const double L1 = L * inv;
    const ConstantBudget lemma_budget = choose_constants(L1, eps_prime);
    ClosedApproxResult res{curve, {}, false, 0.0, eps_prime, theta, 0.0, 0.0, {}};
    std::vector<double> ell(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const double gap_prev = gaps[(i + anchors.size() - 1) % anchors.size()];
        ell[i] = std::min({gaps[i] / 8.0, gap_prev / 8.0, 0.5 * anchors[i].clearance});
        const PLCurve chart = curve.lift(anchors[i].angle - 0.5 * theta, anchors[i].angle + 0.5 * theta);
        // keep the deviation window inside the anchor's corner-free scale
        const double eps_tilde_eff =
            std::max(lemma_budget.eps_tilde, ell[i] / (0.9 * anchors[i].clearance));
        const auto window =
            lebesgue_window(chart, anchors[i].angle, ell[i], eps_prime, L1, eps_tilde_eff);
        const double s = anchors[i].angle - (1.0 - eps_prime) * ell[i];
        const double t = anchors[i].angle + (1.0 - eps_prime) * ell[i];
        bool s_ok = false, t_ok = false;
        for (const auto& part : window.parts) {
            if (part.lo - kParamTol <= s && s <= part.hi + kParamTol) s_ok = true;
            if (part.lo - kParamTol <= t && t <= part.hi + kParamTol) t_ok = true;
        }
        if (!s_ok || !t_ok)
            throw PreconditionError("approximate_closed: anchor window lost its straightening arc");
        // segment_replace(chart, s, t) is the identity here: the window is
        // corner-free by the anchor clearance
        res.charts.push_back({anchors[i].angle, anchors[i].angle + gaps[i], anchors[i].angle, s, t,
                              0.0, 0.0});
    }

    // Step II: per-arc pinned runs
    double min_margin = kTwoPi;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const std::size_t next = (i + 1) % anchors.size();
        const double left = res.charts[i].t - res.charts[i].anchor;
        const double right = res.charts[next].anchor - res.charts[next].s;
        res.charts[i].a_pin = std::min({left, right, 0.24 * gaps[i]});
        res.charts[i].a_pin_prime = 0.5 * res.charts[i].a_pin;
        min_margin = std::min(min_margin, res.charts[i].a_pin_prime);
    }
    res.eta = 2.0 * std::sin(0.5 * min_margin);
    res.delta = std::min(0.25 * eps, 0.25 * res.eta);
    const double eps_pinned = std::min(eps_prime, res.delta);
    const double L_arc = L1;

    std::vector<std::pair<double, Point2>> assembled;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const ChartSpec& ch = res.charts[i];
        const PLCurve chart = curve.lift(ch.a, ch.b).shift_domain(-ch.a);
        PinSpec pin{ch.a_pin, ch.a_pin_prime};
        std::optional<ApproxResult> arc;
        try {
            arc = approximate_core(chart, L_arc, eps_pinned, &pin, false);
        } catch (const Error& e) {
            throw PreconditionError(std::string("approximate_closed: arc ") + std::to_string(i) +
                                    " failed: " + e.what());
        }
        if (!arc->certified)
            throw PreconditionError("approximate_closed: arc " + std::to_string(i) +
                                    " failed certification");
        const auto& ts = arc->output.breakpoints();
        const auto& ps = arc->output.vertices();
        for (std::size_t k = 0; k + 1 < ts.size(); ++k)  // drop the shared right anchor
            assembled.emplace_back(wrap_angle(ts[k] + ch.a), ps[k]);
    }
    std::sort(assembled.begin(), assembled.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<double> oas;
    std::vector<Point2> ops;
    for (const auto& [angle, p] : assembled) {
        if (!oas.empty() && angle <= oas.back() + kParamTol) continue;
        oas.push_back(angle);
        ops.push_back(p);
    }
    res.output = ClosedPLCurve(std::move(oas), std::move(ops)).simplified();

    // Step III: certification
    res.sup_dist = sup_distance_closed(res.output, curve, grid);
    const auto cert = check_bilip_closed(res.output, L + eps, grid, 1e-6);
    res.report = cert.report;
    res.certified = cert.pass && res.sup_dist <= eps;
    return res;
}

}  // namespace bilip
