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

#include "bilip/shorten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bilip/errors.hpp"

namespace bilip {
namespace {

constexpr int kMaxAcceptedSteps = 10000;
constexpr double kAcceptSlack = 1e-9;

// Sweep-internal screening uses capped sampling; the final certificate and
// every caller-facing check run at full density.
constexpr long kSweepAxisCap = 96;

// A candidate whose acceptance would shrink b' by less than this fraction of
// the grid step is treated as converged rather than applied; re-chording a
// joint that flat gains nothing the certificates can see, and applying it
// anyway degenerates into fractal chipping around blocked obstacles.
constexpr double kMinShrinkGridFraction = 0.1;

// Nonempty outside pieces of the domain relative to [a, b_prime].
std::vector<Interval> outside_of(const PLCurve& c, double a, double b_prime) {
    std::vector<Interval> out;
    if (a - c.domain_lo() > kParamTol) out.push_back({c.domain_lo(), a});
    if (c.domain_hi() - b_prime > kParamTol) out.push_back({b_prime, c.domain_hi()});
    return out;
}

// Requires a linear stretch at speed L on the given side of t, unless the
// domain ends there.
void require_speed_L_strip(const PLCurve& c, double t, double L, bool left, const char* what) {
    if (left && t - c.domain_lo() <= kParamTol) return;
    if (!left && c.domain_hi() - t <= kParamTol) return;
    const double probe = left ? t - 2.0 * kParamTol : t + 2.0 * kParamTol;
    const double s = c.speed(c.segment_of(probe));
    if (std::abs(s - L) > 1e-9 * std::max(1.0, L)) throw PreconditionError(what);
}

}  // namespace

std::pair<PLCurve, double> speed_L_reparam(const PLCurve& curve, double a, double b, double L) {
    if (!(a < b)) throw DomainError("speed_L_reparam: need a < b");
    if (a < curve.domain_lo() - kParamTol || b > curve.domain_hi() + kParamTol)
        throw DomainError("speed_L_reparam: [a,b] outside domain");
    const PLCurve cut = curve.with_breakpoints(a, b);
    for (std::size_t i = 0; i + 1 < cut.breakpoints().size(); ++i) {
        const double mid = 0.5 * (cut.breakpoints()[i] + cut.breakpoints()[i + 1]);
        if (mid > a && mid < b && cut.speed(i) > L * (1.0 + 1e-12))
            throw PreconditionError("speed_L_reparam: a segment in [a,b] is faster than L");
    }
    const double len = curve.arclength(a, b);
    if (len <= kParamTol) throw PreconditionError("speed_L_reparam: arc has no length");
    const double b_prime = a + len / L;
    std::vector<double> ts;
    std::vector<Point2> ps;
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u > a + kParamTol) break;
        ts.push_back(u);
        ps.push_back(cut.vertices()[i]);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u <= a + kParamTol || u > b + kParamTol) continue;
        acc = curve.arclength(a, u);
        const double sigma = a + acc / L;
        if (sigma > ts.back() + kParamTol) {
            ts.push_back(sigma);
            ps.push_back(cut.vertices()[i]);
        }
    }
    const double shift = b - b_prime;
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        if (u <= b + kParamTol) continue;
        ts.push_back(u - shift);
        ps.push_back(cut.vertices()[i]);
    }
    return {PLCurve(std::move(ts), std::move(ps)), b_prime};
}

FastCertificate is_fast(const PLCurve& curve, double a, double b_prime, double L,
                        double grid_step, Exec exec) {
    FastCertificate cert;
    cert.a = a;
    cert.b_prime = b_prime;
    cert.mild_report = std::numeric_limits<double>::infinity();
    if (b_prime - a <= kParamTol) return cert;  // empty interval: vacuous pass
    const PLCurve cut = curve.with_breakpoints(a, b_prime);
    for (std::size_t i = 0; i + 1 < cut.breakpoints().size(); ++i) {
        const double mid = 0.5 * (cut.breakpoints()[i] + cut.breakpoints()[i + 1]);
        if (mid > a && mid < b_prime)
            cert.speed_dev = std::max(cert.speed_dev, std::abs(cut.speed(i) - L));
    }
    const auto outside = outside_of(curve, a, b_prime);
    if (!outside.empty()) {
        auto [value, wit] = min_ratio_between(curve, outside, {{a, b_prime}}, grid_step, exec);
        cert.mild_report = value;
        cert.mild_witness = wit;
    }
    return cert;
}

namespace {

StepResult straightening_step_impl(const PLCurve& curve, double a, double b_prime, double r,
                                   double s, double L, double grid_step, Exec exec,
                                   long axis_cap) {
    if (!(a <= r + kParamTol && r < s && s <= b_prime + kParamTol))
        throw DomainError("straightening_step: need a <= r < s <= b_prime");
    StepResult out{false, false, s, curve};
    const double chord = dist(curve.eval(s), curve.eval(r));
    if (chord <= kParamTol) {
        out.degenerate = true;
        return out;
    }
    auto rep = fast_reparam_segment(curve, r, s, L);
    out.s_plus = rep.t_plus;
    const double shrink = s - rep.t_plus;
    if (shrink <= 1e-15 * std::max(1.0, curve.domain_length())) {
        out.accepted = true;  // already straight at speed L; nothing changes
        out.s_plus = s;
        return out;
    }
    const double b_after = b_prime - shrink;
    const auto outside = outside_of(rep.curve, a, b_after);
    bool pass = true;
    if (!outside.empty()) {
        const auto [value, wit] =
            min_ratio_between(rep.curve, outside, {{r, rep.t_plus}}, grid_step, exec, axis_cap);
        pass = value >= (1.0 - kAcceptSlack) / L;
    }
    if (pass) {
        out.accepted = true;
        out.curve = std::move(rep.curve);
    }
    return out;
}

}  // namespace

StepResult straightening_step(const PLCurve& curve, double a, double b_prime, double r, double s,
                              double L, double grid_step, Exec exec) {
    return straightening_step_impl(curve, a, b_prime, r, s, L, grid_step, exec, 0);
}

ShortenResult shorten(const PLCurve& curve, double a, double b, double L, double grid_step,
                      Exec exec, bool assume_bilip) {
    if (!(a < b)) throw DomainError("shorten: need a < b");
    if (a < curve.domain_lo() - kParamTol || b > curve.domain_hi() + kParamTol)
        throw DomainError("shorten: [a,b] outside domain");
    require_speed_L_strip(curve, a, L, true, "shorten: no speed-L linear strip before a");
    require_speed_L_strip(curve, b, L, false, "shorten: no speed-L linear strip after b");
    if (!assume_bilip && !check_bilip(curve, L, grid_step, 1e-6, exec).pass)
        throw PreconditionError("shorten: input fails check_bilip(L)");

    ShortenResult res{curve, b, {}, {}};
    {
        auto [reparam, bp] = speed_L_reparam(curve, a, b, L);
        res.curve = std::move(reparam);
        res.b_prime = bp;
    }
    const double min_shrink = kMinShrinkGridFraction * grid_step;
    int accepted = 0;
    // try one candidate; on acceptance apply it, log it, and greedily widen
    // the window around the accepted chord to swallow the joint corners that
    // a replacement leaves behind
    auto try_candidate = [&](double r, double s) {
        if (s - r <= kParamTol || r >= res.b_prime - kParamTol) return false;
        r = std::max(r, a);
        s = std::min(s, res.b_prime);
        if (res.curve.restrict_to(r, s).is_linear(1e-12)) return false;
        bool applied = false;
        for (int grow = 0; grow < 60; ++grow) {
            auto step = straightening_step_impl(res.curve, a, res.b_prime, r, s, L, grid_step,
                                                exec, kSweepAxisCap);
            const double shrink = step.accepted ? s - step.s_plus : 0.0;
            if (!step.accepted || shrink < min_shrink) {
                if (!applied || !step.accepted)
                    res.trace.iterations.push_back(
                        {r, s, step.s_plus, step.accepted, res.b_prime});
                break;
            }
            res.curve = std::move(step.curve);
            res.b_prime -= shrink;
            res.trace.iterations.push_back({r, s, step.s_plus, true, res.b_prime});
            applied = true;
            if (++accepted > kMaxAcceptedSteps)
                throw ConvergenceError("shorten: sweep did not converge");
            const double w = s - r;
            r = std::max(a, r - 0.5 * w);
            s = std::min(res.b_prime, step.s_plus + 0.5 * w);
            if (s - r <= kParamTol) break;
        }
        return applied;
    };
    bool progressed = true;
    while (progressed) {
        progressed = false;
        // dyadic hierarchy with half-offset cells, so features sitting on a
        // dyadic boundary still fall inside some candidate; the whole
        // interval is tried even when it is already below the grid scale
        for (double width = res.b_prime - a; !progressed; width *= 0.5) {
            const int cells = static_cast<int>(std::ceil((res.b_prime - a) / width - 1e-12));
            for (int i = 0; i < 2 * cells && !progressed; ++i) {
                const double r = a + width * (i % cells) + (i >= cells ? 0.5 * width : 0.0);
                progressed = try_candidate(r, r + width);
            }
            if (width <= grid_step) break;
        }
    }
    res.trace.final_b_prime = res.b_prime;
    res.certificate = is_fast(res.curve, a, res.b_prime, L, grid_step, exec);
    return res;
}

DirectionEstimate direction_estimates(Point2 P, Point2 Q, Point2 S, double ell, double eta,
                                      double L) {
    if (!(dist(P, Q) >= 0.5 * ell))
        throw PreconditionError("direction_estimates: need |PQ| >= ell/2");
    if (!(dist(Q, S) > 0.0)) throw PreconditionError("direction_estimates: coincident Q and S");
    if (!(dist(P, S) > 0.0)) throw PreconditionError("direction_estimates: coincident P and S");
    DirectionEstimate est;
    est.ell = ell;
    est.eta = eta;
    est.L = L;
    est.delta = dist(Q, S);
    est.theta = DirVec::of(Q - P);
    est.theta_prime = DirVec::of(S - P);
    est.nu = DirVec::of(S - Q);
    const double eta_l2 = eta / (L * L);
    est.residual1 = angle_between(est.theta, est.theta_prime) - eta_l2;
    const double secant = (dist(P, S) - dist(P, Q)) / est.delta;
    const double tn = dot(est.theta, est.nu);
    est.residual2_lo = (tn - eta_l2) - secant;
    est.residual2_hi = secant - (tn + eta_l2);
    return est;
}

double discrete_smoothness(const PLCurve& curve, double a, double b_prime) {
    return curve.max_turning_angle(a, b_prime);
}

}  // namespace bilip
