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

#include "bilip/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bilip/errors.hpp"

namespace bilip {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Pairs closer than this are not evaluated: below it the chord computation
// cancels catastrophically and the ratio becomes noise. Straddle limits at
// breakpoints are scale-invariant, so clamping the separation loses nothing.
constexpr double kPairSep = 1e-9;

// A ratio landscape over one (p-range x q-range) box. `same_segment` marks
// boxes on a single segment where the ratio is constant.
struct Box {
    double plo, phi;
    double qlo, qhi;
    bool same_segment;
    double const_value;  // ratio when same_segment
};

struct Candidate {
    double value = kInf;
    double p = 0.0, q = 0.0;
};

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters) {
    constexpr double invphi = 0.6180339887498949;
    if (!(hi > lo)) return lo;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

// Generic 2-D kernel: extremize ratio(p, q) over a list of boxes, coarse grid
// plus golden-section coordinate refinement, plus explicit seed pairs.
// `ratio` must return +inf (for minimize) on excluded pairs.
// axis_cap > 0 bounds the per-box sample count; certification paths leave it
// unset and sample at full grid density.
class PairKernel {
  public:
    PairKernel(std::function<double(double, double)> ratio, bool minimize, long axis_cap = 0)
        : ratio_(std::move(ratio)), minimize_(minimize), axis_cap_(axis_cap) {}

    void add_box(Box b) {
        if (b.phi - b.plo < 0.0 || b.qhi - b.qlo < 0.0) return;
        boxes_.push_back(b);
    }
    void add_seed(double p, double q) { seeds_.push_back({p, q}); }

    Candidate run(double grid_step, Exec exec) const {
        std::vector<Candidate> results(boxes_.size());
        const long nb = static_cast<long>(boxes_.size());
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < nb; ++i) results[i] = solve_box(boxes_[i], grid_step);
        } else {
            for (long i = 0; i < nb; ++i) results[i] = solve_box(boxes_[i], grid_step);
        }
        Candidate best;
        if (!minimize_) best.value = -kInf;
        for (const auto& c : results) take(best, c);
        for (const auto& s : seeds_) {
            const double r = ratio_(s.first, s.second);
            if (!std::isfinite(r)) continue;
            Candidate c{r, s.first, s.second};
            // refine the seed within a small ball
            refine(c, {s.first - grid_step, s.first + grid_step},
                   {s.second - grid_step, s.second + grid_step}, grid_step);
            take(best, c);
        }
        return best;
    }

  private:
    // Strict improvement, or a more separated witness on a value tie. The
    // ratio field has exactly flat valleys (straddle rays, straight runs);
    // preferring the widest pair keeps witnesses at the natural extremes.
    bool better(const Candidate& c, const Candidate& best) const {
        if (!std::isfinite(c.value)) return false;
        if (std::isfinite(best.value) &&
            std::abs(c.value - best.value) <= 1e-12 * std::max(1.0, std::abs(best.value)))
            return std::abs(c.q - c.p) > std::abs(best.q - best.p);
        return minimize_ ? c.value < best.value : c.value > best.value;
    }

    void take(Candidate& best, const Candidate& c) const {
        if (better(c, best)) best = c;
    }

    Candidate solve_box(const Box& b, double grid_step) const {
        Candidate out;
        if (!minimize_) out.value = -kInf;
        if (b.same_segment) {
            // constant landscape: any admissible pair realizes it
            double p = b.plo, q = b.qhi;
            if (std::abs(q - p) <= kPairSep) {
                p = b.plo;
                q = b.qlo;
                if (std::abs(q - p) <= kPairSep) {
                    p = b.phi;
                    q = b.qhi;
                }
            }
            if (std::abs(q - p) <= kPairSep) return out;
            out = {b.const_value, p, q};
            return out;
        }
        long np = std::max(2L, static_cast<long>(std::ceil((b.phi - b.plo) / grid_step)) + 1);
        long nq = std::max(2L, static_cast<long>(std::ceil((b.qhi - b.qlo) / grid_step)) + 1);
        if (axis_cap_ > 0) {
            np = std::min(np, axis_cap_);
            nq = std::min(nq, axis_cap_);
        }
        Candidate best;
        if (!minimize_) best.value = -kInf;
        for (long i = 0; i < np; ++i) {
            const double p = b.plo + (b.phi - b.plo) * static_cast<double>(i) / static_cast<double>(np - 1);
            for (long j = 0; j < nq; ++j) {
                const double q = b.qlo + (b.qhi - b.qlo) * static_cast<double>(j) / static_cast<double>(nq - 1);
                if (std::abs(q - p) <= kPairSep) continue;
                const Candidate c{ratio_(p, q), p, q};
                if (better(c, best)) best = c;
            }
        }
        if (!std::isfinite(best.value)) return out;
        refine(best, {b.plo, b.phi}, {b.qlo, b.qhi}, grid_step);
        return best;
    }

    void refine(Candidate& c, std::pair<double, double> pbox, std::pair<double, double> qbox,
                double grid_step) const {
        const int kGoldenIters = 50;
        double h = grid_step;
        double p = c.p, q = c.q;
        Candidate seen = c;
        auto clampp = [&](double x) { return std::clamp(x, pbox.first, pbox.second); };
        auto clampq = [&](double y) { return std::clamp(y, qbox.first, qbox.second); };
        auto consider = [&]() {
            const Candidate t{ratio_(p, q), p, q};
            if (better(t, seen)) seen = t;
        };
        for (int pass = 0; pass < 5; ++pass) {
            p = golden_min([&](double x) { return guarded(x, q); }, clampp(p - h), clampp(p + h),
                           kGoldenIters);
            q = golden_min([&](double y) { return guarded(p, y); }, clampq(q - h), clampq(q + h),
                           kGoldenIters);
            consider();
            // diagonal passes: coordinate descent stalls on diagonal valleys
            // (near-parallel segment pairs), a joint move does not
            const double u = golden_min(
                [&](double x) { return guarded(clampp(p + x), clampq(q + x)); }, -h, h,
                kGoldenIters);
            p = clampp(p + u);
            q = clampq(q + u);
            consider();
            const double w = golden_min(
                [&](double x) { return guarded(clampp(p + x), clampq(q - x)); }, -h, h,
                kGoldenIters);
            p = clampp(p + w);
            q = clampq(q - w);
            consider();
            h *= 0.35;
        }
        if (better(seen, c)) c = seen;
    }

    // refinement objective: +inf outside the admissible set, signed for min/max
    double guarded(double p, double q) const {
        if (std::abs(q - p) <= kPairSep) return kInf;
        const double r = ratio_(p, q);
        if (!std::isfinite(r)) return kInf;
        return minimize_ ? r : -r;
    }

    std::function<double(double, double)> ratio_;
    bool minimize_;
    long axis_cap_;
    std::vector<Box> boxes_;
    std::vector<std::pair<double, double>> seeds_;
};

// Pieces of the interval set `set` clipped to the segments of the curve.
struct Piece {
    std::size_t seg;
    double lo, hi;
};

std::vector<Piece> clip_to_segments(const PLCurve& c, const std::vector<Interval>& set) {
    std::vector<Piece> out;
    const auto& ts = c.breakpoints();
    for (const auto& iv : set) {
        const double lo = std::max(iv.lo, c.domain_lo());
        const double hi = std::min(iv.hi, c.domain_hi());
        if (!(hi - lo > 0.0)) continue;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double a = std::max(lo, ts[i]);
            const double b = std::min(hi, ts[i + 1]);
            if (b - a > 0.0) out.push_back({i, a, b});
        }
    }
    return out;
}

// Minimizer of |s*va + (1-s)*vb| over s in [0,1].
double straddle_argmin(Point2 va, Point2 vb) {
    const Point2 d = va - vb;
    const double dd = dot(d, d);
    if (dd <= 0.0) return 0.5;
    const double s = -dot(vb, d) / dd;
    return std::clamp(s, 0.0, 1.0);
}

// Seeds pairs straddling interior breakpoints where the ratio landscape has
// its sharp minima; evaluated as genuine parameter pairs.
void add_corner_seeds(PairKernel& kernel, const PLCurve& c, const std::vector<Piece>& us,
                      const std::vector<Piece>& vs) {
    const auto& ts = c.breakpoints();
    auto reach_left = [&](const std::vector<Piece>& pieces, std::size_t seg, double t) {
        double r = 0.0;
        for (const auto& p : pieces)
            if (p.seg == seg && p.hi >= t - kParamTol) r = std::max(r, t - p.lo);
        return r;
    };
    auto reach_right = [&](const std::vector<Piece>& pieces, std::size_t seg, double t) {
        double r = 0.0;
        for (const auto& p : pieces)
            if (p.seg == seg && p.lo <= t + kParamTol) r = std::max(r, p.hi - t);
        return r;
    };
    for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
        const double t = ts[k];
        const Point2 vl = c.velocity(k - 1);
        const Point2 vr = c.velocity(k);
        const double s = std::clamp(straddle_argmin(vl, vr), 1e-3, 1.0 - 1e-3);
        for (int dir = 0; dir < 2; ++dir) {
            // dir 0: p on the left segment from U, q on the right from V
            const auto& left = dir == 0 ? us : vs;
            const auto& right = dir == 0 ? vs : us;
            const double hl = reach_left(left, k - 1, t);
            const double hr = reach_right(right, k, t);
            if (hl <= kPairSep || hr <= kPairSep) continue;
            const double w = 0.5 * std::min(hl / s, hr / (1.0 - s));
            if (w <= kPairSep) continue;
            kernel.add_seed(t - s * w, t + (1.0 - s) * w);
        }
    }
}

Candidate run_open_kernel(const PLCurve& c, const std::vector<Interval>& u_set,
                          const std::vector<Interval>& v_set, double grid_step, Exec exec,
                          bool minimize, bool symmetric, long axis_cap = 0) {
    const double lo = c.domain_lo(), hi = c.domain_hi();
    auto ratio = [&c, lo, hi](double p, double q) {
        if (p < lo || p > hi || q < lo || q > hi) return kInf;
        return dist(c.eval(p), c.eval(q)) / std::abs(q - p);
    };
    PairKernel kernel(ratio, minimize, axis_cap);
    const auto us = clip_to_segments(c, u_set);
    const auto vs = symmetric ? us : clip_to_segments(c, v_set);
    for (std::size_t iu = 0; iu < us.size(); ++iu) {
        for (std::size_t iv = symmetric ? iu : 0; iv < vs.size(); ++iv) {
            const Piece& pu = us[iu];
            const Piece& pv = vs[iv];
            Box b{pu.lo, pu.hi, pv.lo, pv.hi, pu.seg == pv.seg, 0.0};
            if (b.same_segment) b.const_value = c.speed(pu.seg);
            kernel.add_box(b);
        }
    }
    if (minimize) add_corner_seeds(kernel, c, us, vs);
    return kernel.run(grid_step, exec);
}

Candidate run_closed_kernel(const ClosedPLCurve& c, double grid_step, Exec exec, bool minimize) {
    // Parameter space: [a0, a0 + 2*pi), each segment one range; pairs taken
    // with q - p in (0, 2*pi). chord(d) = 2*sin(d/2) is valid on all of it.
    auto ratio = [&c](double p, double q) {
        const double denom = chord_distance(p, q);
        if (denom <= kPairSep) return kInf;
        return dist(c.eval(p), c.eval(q)) / denom;
    };
    PairKernel kernel(ratio, minimize);
    const std::size_t n = c.size();
    std::vector<std::pair<double, double>> ranges(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = c.angles()[i];
        ranges[i] = {lo, lo + c.segment_width(i)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Box b{ranges[i].first, ranges[i].second, ranges[j].first, ranges[j].second, i == j,
                  0.0};
            if (i == j) {
                // on one segment the image is a chord; ratio varies with the
                // angular separation, so sample it like any other box unless
                // minimizing (where the infimum is the flat-limit speed)
                b.same_segment = false;
            }
            kernel.add_box(b);
        }
    }
    if (minimize) {
        // straddle seeds at every vertex, wrap vertex included
        for (std::size_t k = 0; k < n; ++k) {
            const double t = c.angles()[k];
            const Point2 vl = c.velocity((k + n - 1) % n);
            const Point2 vr = c.velocity(k);
            const double s = std::clamp(straddle_argmin(vl, vr), 1e-3, 1.0 - 1e-3);
            const double wl = c.segment_width((k + n - 1) % n);
            const double wr = c.segment_width(k);
            const double w = 0.5 * std::min(wl / s, wr / (1.0 - s));
            if (w > kPairSep) kernel.add_seed(t - s * w, t + (1.0 - s) * w);
        }
        // flat-limit speeds as direct candidates
        for (std::size_t i = 0; i < n; ++i) {
            const double mid = c.angles()[i] + 0.5 * c.segment_width(i);
            const double h = 0.25 * c.segment_width(i);
            kernel.add_seed(mid - h, mid + h);
        }
    }
    return kernel.run(grid_step, exec);
}

}  // namespace

double BiLipReport::constant() const {
    if (inv_lip_lower <= 0.0) return kInf;
    return std::max(lip_upper, 1.0 / inv_lip_lower);
}

bool BiLipReport::passes(double L, double slack) const {
    const double bound = L * (1.0 + slack);
    return lip_upper <= bound && inv_lip_lower >= 1.0 / bound;
}

double default_grid_step(const PLCurve& curve) { return curve.domain_length() / 2048.0; }

double lipschitz_upper(const PLCurve& curve) { return curve.max_speed(); }

std::pair<double, Witness> inverse_lipschitz(const PLCurve& curve, double grid_step, Exec exec) {
    if (!(grid_step > 0.0)) throw DomainError("inverse_lipschitz: grid_step must be positive");
    const std::vector<Interval> whole{{curve.domain_lo(), curve.domain_hi()}};
    const Candidate c = run_open_kernel(curve, whole, whole, grid_step, exec, true, true);
    return {c.value, Witness{std::min(c.p, c.q), std::max(c.p, c.q)}};
}

std::pair<double, Witness> min_ratio_between(const PLCurve& curve,
                                             const std::vector<Interval>& u_set,
                                             const std::vector<Interval>& v_set, double grid_step,
                                             Exec exec, long axis_cap) {
    if (!(grid_step > 0.0)) throw DomainError("min_ratio_between: grid_step must be positive");
    const Candidate c = run_open_kernel(curve, u_set, v_set, grid_step, exec, true, false, axis_cap);
    return {c.value, Witness{std::min(c.p, c.q), std::max(c.p, c.q)}};
}

CheckResult check_bilip(const PLCurve& curve, double L, double grid_step, double slack,
                        Exec exec) {
    BiLipReport rep;
    rep.grid_step = grid_step;
    rep.lip_upper = 0.0;
    std::size_t fastest = 0;
    for (std::size_t i = 0; i + 1 < curve.breakpoints().size(); ++i) {
        const double s = curve.speed(i);
        if (s > rep.lip_upper) {
            rep.lip_upper = s;
            fastest = i;
        }
    }
    rep.witness_max = {curve.breakpoints()[fastest], curve.breakpoints()[fastest + 1]};
    auto [inv, wit] = inverse_lipschitz(curve, grid_step, exec);
    rep.inv_lip_lower = std::isfinite(inv) ? inv : 0.0;
    rep.witness_min = wit;
    return {rep.passes(L, slack), rep};
}

std::vector<CornerViolation> corner_angle_check(const PLCurve& curve, double L) {
    if (!(L >= 1.0)) throw PreconditionError("corner_angle_check: need L >= 1");
    const double bound = kPi - 2.0 * std::asin(std::min(1.0, 1.0 / (L * L)));
    std::vector<CornerViolation> out;
    const auto& ts = curve.breakpoints();
    for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
        const double sl = curve.speed(k - 1);
        const double sr = curve.speed(k);
        if (sl < L * (1.0 - 1e-9) || sr < L * (1.0 - 1e-9)) continue;
        const Point2 vl = curve.velocity(k - 1);
        const Point2 vr = curve.velocity(k);
        const double turning = angle_between(vl, vr);
        if (turning > bound + 1e-9) out.push_back({k, ts[k], turning, bound});
    }
    return out;
}

BiLipReport measure_closed(const ClosedPLCurve& curve, double grid_step, Exec exec) {
    BiLipReport rep;
    rep.grid_step = grid_step;
    const Candidate mx = run_closed_kernel(curve, grid_step, exec, false);
    const Candidate mn = run_closed_kernel(curve, grid_step, exec, true);
    rep.lip_upper = mx.value;
    rep.witness_max = {mx.p, mx.q};
    rep.inv_lip_lower = std::isfinite(mn.value) ? mn.value : 0.0;
    rep.witness_min = {mn.p, mn.q};
    return rep;
}

CheckResult check_bilip_closed(const ClosedPLCurve& curve, double L, double grid_step,
                               double slack, Exec exec) {
    const BiLipReport rep = measure_closed(curve, grid_step, exec);
    BiLipReport withgrid = rep;
    withgrid.grid_step = grid_step;
    return {rep.passes(L, slack), withgrid};
}

double sup_distance_closed(const ClosedPLCurve& a, const ClosedPLCurve& b, double grid_step) {
    const long n = std::max(3L, static_cast<long>(std::ceil(kTwoPi / grid_step)));
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long k = 0; k < n; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        worst = std::max(worst, dist(a.eval(t), b.eval(t)));
    }
    return worst;
}

}  // namespace bilip
