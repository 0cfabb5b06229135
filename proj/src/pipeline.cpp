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

#include "bilip/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "bilip/errors.hpp"

namespace bilip {

TimeChange::TimeChange(std::vector<double> knots, std::vector<double> values)
    : xs_(std::move(knots)), ys_(std::move(values)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2)
        throw DomainError("TimeChange: need matching knot/value lists");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (!(xs_[i] < xs_[i + 1])) throw DomainError("TimeChange: knots must increase");
        if (!(ys_[i] < ys_[i + 1])) throw DomainError("TimeChange: values must increase");
    }
}

TimeChange TimeChange::identity(double lo, double hi) { return TimeChange({lo, hi}, {lo, hi}); }

double TimeChange::operator()(double x) const {
    if (x < xs_.front() - kParamTol || x > xs_.back() + kParamTol)
        throw DomainError("TimeChange: argument outside domain");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = (it == xs_.begin()) ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
    if (i + 1 >= xs_.size()) i = xs_.size() - 2;
    const double w = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
    return ys_[i] + w * (ys_[i + 1] - ys_[i]);
}

double TimeChange::slope(std::size_t piece) const {
    if (piece + 1 >= xs_.size()) throw DomainError("TimeChange: piece out of range");
    return (ys_[piece + 1] - ys_[piece]) / (xs_[piece + 1] - xs_[piece]);
}

TimeChange TimeChange::inverse() const { return TimeChange(ys_, xs_); }

TimeChange TimeChange::compose(const TimeChange& f, const TimeChange& g) {
    if (std::abs(g.range_lo() - f.domain_lo()) > 1e-9 ||
        std::abs(g.range_hi() - f.domain_hi()) > 1e-9)
        throw DomainError("TimeChange::compose: g's range must match f's domain");
    std::vector<double> knots = g.xs_;
    const TimeChange ginv = g.inverse();
    for (double fx : f.xs_) {
        const double x = ginv(std::clamp(fx, g.range_lo(), g.range_hi()));
        knots.push_back(std::clamp(x, g.domain_lo(), g.domain_hi()));
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
                knots.end());
    std::vector<double> values;
    values.reserve(knots.size());
    for (double x : knots) values.push_back(f(std::clamp(g(x), f.domain_lo(), f.domain_hi())));
    return TimeChange(std::move(knots), std::move(values));
}

bool TimeChange::slopes_at_most_one(double tol) const {
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        if (slope(i) > 1.0 + tol) return false;
    return true;
}

namespace {

// ell selection: half the shortest good component adjacent to a bad
// interval, capped to keep 2*ell*N strictly under xi (relative to D).
double choose_ell(const std::vector<Interval>& good, const std::vector<Interval>& bad, double xi,
                  double D) {
    double ell = xi * std::min(D, 1.0) / (8.0 * std::max<std::size_t>(bad.size(), 1));
    for (const auto& b : bad) {
        for (const auto& g : good) {
            const bool adjacent = std::abs(g.hi - b.lo) <= kParamTol ||
                                  std::abs(g.lo - b.hi) <= kParamTol;
            if (adjacent) ell = std::min(ell, 0.45 * g.length());
        }
    }
    return ell;
}

}  // namespace

SpeedupResult speedup(const PLCurve& phi1, const std::vector<Interval>& good_set,
                      const ConstantBudget& budget, double L) {
    const double lo = phi1.domain_lo(), hi = phi1.domain_hi();
    const double target = L + budget.xi;
    const auto bad = subtract_intervals({lo, hi}, good_set);

    // strips of width ell on the good side of every bad interval
    struct Strip {
        double lo, hi, slope;
    };
    std::vector<Strip> strips;
    for (const auto& b : bad) {
        if (b.lo - lo > kParamTol) {
            const double speed = phi1.speed(phi1.segment_of(b.lo - 0.5 * budget.ell));
            if (!(speed > 0.0)) throw PreconditionError("speedup: stalled strip");
            strips.push_back({b.lo - budget.ell, b.lo, speed / target});
        }
        if (hi - b.hi > kParamTol) {
            const double speed = phi1.speed(phi1.segment_of(b.hi + 0.5 * budget.ell));
            if (!(speed > 0.0)) throw PreconditionError("speedup: stalled strip");
            strips.push_back({b.hi, b.hi + budget.ell, speed / target});
        }
    }
    std::sort(strips.begin(), strips.end(), [](const Strip& a, const Strip& b) { return a.lo < b.lo; });
    for (const auto& s : strips) {
        if (!(s.slope <= 1.0 + 1e-12)) throw PreconditionError("speedup: strip faster than L+xi");
        // strip must sit inside one linear stretch of phi1
        if (!phi1.restrict_to(s.lo, s.hi).is_linear(1e-9))
            throw PreconditionError("speedup: boundary strip is not linear (shorter than ell?)");
    }

    // tau: slope 1 off the strips, slope speed/(L+xi) on them
    std::vector<double> ks{lo}, vs{lo};
    double acc = lo;
    double cursor = lo;
    for (const auto& s : strips) {
        if (s.lo > cursor + kParamTol) {
            acc += s.lo - cursor;
            ks.push_back(s.lo);
            vs.push_back(acc);
        }
        acc += (s.hi - s.lo) * s.slope;
        ks.push_back(s.hi);
        vs.push_back(acc);
        cursor = s.hi;
    }
    if (hi > cursor + kParamTol) {
        acc += hi - cursor;
        ks.push_back(hi);
        vs.push_back(acc);
    }
    TimeChange tau(std::move(ks), std::move(vs));

    // phi2(tau(x)) = phi1(x)
    std::vector<double> params = phi1.breakpoints();
    for (const auto& s : strips) {
        params.push_back(s.lo);
        params.push_back(s.hi);
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end(),
                             [](double a, double b) { return std::abs(a - b) <= kParamTol; }),
                 params.end());
    std::vector<double> ts;
    std::vector<Point2> ps;
    const auto& bps = phi1.breakpoints();
    for (double x : params) {
        const double t = tau(x);
        if (!ts.empty() && t <= ts.back() + kParamTol) continue;
        ts.push_back(t);
        // reuse stored vertices where possible so endpoints carry bitwise
        auto it = std::lower_bound(bps.begin(), bps.end(), x - kParamTol);
        if (it != bps.end() && std::abs(*it - x) <= kParamTol)
            ps.push_back(phi1.vertices()[static_cast<std::size_t>(it - bps.begin())]);
        else
            ps.push_back(phi1.eval(x));
    }
    SpeedupResult out{PLCurve(std::move(ts), std::move(ps)), tau, tau(hi), {}};
    for (const auto& b : bad) out.bad_in_phi2.push_back({tau(b.lo), tau(b.hi)});
    return out;
}

ShortenBadResult shorten_bad_intervals(const PLCurve& phi2, const std::vector<Interval>& bad,
                                       double L_eff, const ConstantBudget& budget) {
    PLCurve cur = phi2;
    const double lo = phi2.domain_lo();
    double shift = 0.0;
    std::vector<double> ks{lo}, vs{lo};
    ShortenBadResult out{cur, TimeChange::identity(lo, phi2.domain_hi()), 0.0, {}, {}};
    const double grid = budget.grid_step * phi2.domain_length();
    for (const auto& J : bad) {
        const double a = J.lo - shift;
        const double b = J.hi - shift;
        ShortenResult sres = shorten(cur, a, b, L_eff, grid, Exec::parallel, true);
        cur = sres.curve;
        out.smooth.push_back({a, sres.b_prime});
        // tau~ knots in phi2 coordinates: slope 1 outside, affine on J
        ks.push_back(J.lo);
        vs.push_back(a);
        ks.push_back(J.hi);
        vs.push_back(sres.b_prime);
        shift += b - sres.b_prime;
        out.per_interval.push_back(std::move(sres));
    }
    const double hi2 = phi2.domain_hi();
    ks.push_back(hi2);
    vs.push_back(hi2 - shift);
    // drop duplicate knots created by bad intervals touching the ends
    std::vector<double> cks, cvs;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (!cks.empty() && ks[i] <= cks.back() + kParamTol) continue;
        cks.push_back(ks[i]);
        cvs.push_back(vs[i]);
    }
    out.curve = cur;
    out.tau_tilde = TimeChange(std::move(cks), std::move(cvs));
    out.C_prime = hi2 - shift;
    return out;
}

SampleResult pl_sample_c1(const PLCurve& phi3, const std::vector<Interval>& smooth, double L_eff,
                          const ConstantBudget& budget) {
    const double grid = budget.grid_step * phi3.domain_length();
    if (smooth.empty()) return {phi3, 0, 0.0};
    for (int k = 1; k <= (1 << 16); k *= 2) {
        // resample each smooth interval at k uniform cells
        std::vector<double> ts;
        std::vector<Point2> ps;
        auto in_smooth = [&](double t) {
            for (const auto& s : smooth)
                if (t > s.lo + kParamTol && t < s.hi - kParamTol) return true;
            return false;
        };
        for (std::size_t i = 0; i < phi3.breakpoints().size(); ++i) {
            if (!in_smooth(phi3.breakpoints()[i])) {
                ts.push_back(phi3.breakpoints()[i]);
                ps.push_back(phi3.vertices()[i]);
            }
        }
        for (const auto& s : smooth) {
            for (int j = 1; j < k; ++j) {
                const double t = s.lo + (s.hi - s.lo) * static_cast<double>(j) / k;
                ts.push_back(t);
                ps.push_back(phi3.eval(t));
            }
            for (double t : {s.lo, s.hi}) {
                bool present = false;
                for (double u : ts)
                    if (std::abs(u - t) <= kParamTol) present = true;
                if (!present) {
                    ts.push_back(t);
                    ps.push_back(phi3.eval(t));
                }
            }
        }
        // sort jointly
        std::vector<std::size_t> order(ts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return ts[x] < ts[y]; });
        std::vector<double> sts;
        std::vector<Point2> sps;
        for (std::size_t i : order) {
            if (!sts.empty() && ts[i] <= sts.back() + kParamTol) continue;
            sts.push_back(ts[i]);
            sps.push_back(ps[i]);
        }
        PLCurve cand = PLCurve(std::move(sts), std::move(sps)).simplified();
        const double inc = sup_distance(cand, phi3, grid);
        if (inc <= budget.xi &&
            check_bilip(cand, L_eff * (1.0 + budget.xi), grid, budget.slack).pass)
            return {std::move(cand), k, inc};
    }
    throw ConvergenceError("pl_sample_c1: subdivision cap exceeded");
}

PLCurve rescale(const PLCurve& phi4, double C_prime, double target_length, double xi) {
    const double lo = phi4.domain_lo();
    if (std::abs(phi4.domain_length() - C_prime) > kParamTol)
        throw DomainError("rescale: C_prime must equal the domain length");
    if (C_prime < (1.0 - 2.0 * xi) * target_length - kParamTol ||
        C_prime > target_length + kParamTol)
        throw AccountingError("rescale: C_prime outside [(1-2xi)*target, target]");
    const double factor = target_length / C_prime;
    std::vector<double> ts;
    ts.reserve(phi4.breakpoints().size());
    for (double t : phi4.breakpoints()) ts.push_back(lo + (t - lo) * factor);
    ts.front() = lo;
    ts.back() = lo + target_length;
    return PLCurve(std::move(ts), phi4.vertices());
}

namespace {

// Three-piece reassembly of the pinned construction: identity on the two end
// strips of width `a`, the middle stretched from [a, C'-a] onto [a, D-a].
PLCurve pinned_reassemble(const PLCurve& phi4, double a, double D) {
    const double C_prime = phi4.domain_hi();
    if (!(C_prime - 2.0 * a > kParamTol))
        throw PreconditionError("pinned_reassemble: a too large for the contracted domain");
    const PLCurve cut = phi4.with_breakpoints(a, C_prime - a);
    const double factor = (D - 2.0 * a) / (C_prime - 2.0 * a);
    std::vector<double> ts;
    std::vector<Point2> ps;
    for (std::size_t i = 0; i < cut.breakpoints().size(); ++i) {
        const double u = cut.breakpoints()[i];
        double x;
        if (u <= a + kParamTol)
            x = u;
        else if (u < C_prime - a - kParamTol)
            x = a + (u - a) * factor;
        else
            x = u + (D - C_prime);
        if (!ts.empty() && x <= ts.back() + kParamTol) continue;
        ts.push_back(x);
        ps.push_back(cut.vertices()[i]);
    }
    ts.back() = D;
    return PLCurve(std::move(ts), std::move(ps));
}

}  // namespace

ApproxResult approximate_core(const PLCurve& curve, double L, double eps, const PinSpec* pin,
                              bool keep_stages) {
    if (std::abs(curve.domain_lo()) > kParamTol)
        throw DomainError("approximate: domain must start at 0");
    const double D = curve.domain_hi();
    ConstantBudget budget = choose_constants(L, eps);
    const double grid = budget.grid_step * D;

    const auto pre = check_bilip(curve, L, grid, budget.slack);
    if (!pre.pass)
        throw PreconditionError("approximate: input fails check_bilip(L)");

    // Step I: Lebesgue straightening at the per-stage slack xi
    StraightenOptions sopt;
    sopt.assume_bilip = true;
    if (pin) {
        sopt.pin_a = pin->a;
        sopt.pin_a_prime = pin->a_prime + budget.xi * D / 32.0;
    }
    StraightenResult s1 = straighten_lebesgue(curve, budget.xi, L, budget, sopt);
    const std::vector<Interval> good = s1.report.good_set;
    const std::vector<Interval> bad = subtract_intervals({0.0, D}, good);

    // finalize the budget: N is the bad-interval count, ell the strip width
    budget.N = std::max<std::int64_t>(1, static_cast<std::int64_t>(bad.size()));
    budget.ell = choose_ell(good, bad, budget.xi, D);
    if (pin) {
        // strips must not leak into the pinned end segments
        budget.ell = std::min(budget.ell, 0.5 * (sopt.pin_a_prime - pin->a_prime));
    }
    budget.validate();

    // Step II: speed up near the bad intervals
    SpeedupResult s2 = speedup(s1.curve, good, budget, L);
    if (s2.C < (1.0 - budget.xi) * D - kParamTol || s2.C > D + kParamTol)
        throw AccountingError("approximate: C outside [1-xi, 1] of the domain");

    // Step III: shorten every bad interval at L + xi
    ShortenBadResult s3 = shorten_bad_intervals(s2.curve, s2.bad_in_phi2, L + budget.xi, budget);
    if (s3.C_prime < (1.0 - 2.0 * budget.xi) * D - kParamTol)
        throw AccountingError("approximate: C' outside [1-2xi, 1] of the domain");

    // Step IV: finitely piecewise linear on the shortened stretches
    SampleResult s4 = pl_sample_c1(s3.curve, s3.smooth, L + budget.xi, budget);

    // Step V: stretch back onto [0, D] (or the pinned three-piece map)
    PLCurve output = pin ? pinned_reassemble(s4.curve, pin->a, D)
                         : rescale(s4.curve, s3.C_prime, D, budget.xi);

    ApproxResult res{std::move(output), {}, budget, false, 0.0, false, std::nullopt};
    res.endpoints_exact = res.output.front() == curve.front() && res.output.back() == curve.back();
    res.sup_dist = sup_distance(res.output, curve, D / 2048.0);
    const auto cert = check_bilip(res.output, L + eps, grid, budget.slack);
    res.report = cert.report;
    res.certified = cert.pass && res.endpoints_exact && res.sup_dist <= eps;
    if (keep_stages) {
        res.stages = StageDump{s1.curve,        s2.curve, s3.curve,
                               s4.curve,        s2.tau,   s3.tau_tilde,
                               s1.report,       good,     bad,
                               s3.smooth,       s2.C,     s3.C_prime};
    }
    return res;
}

ApproxResult approximate(const PLCurve& curve, double L, double eps) {
    if (std::abs(curve.domain_lo()) > kParamTol || std::abs(curve.domain_hi() - 1.0) > kParamTol)
        throw DomainError("approximate: domain must be [0, 1]");
    return approximate_core(curve, L, eps, nullptr);
}

ApproxResult approximate_pinned(const PLCurve& curve, double L, double eps, double a,
                                double a_prime) {
    if (std::abs(curve.domain_lo()) > kParamTol || std::abs(curve.domain_hi() - 1.0) > kParamTol)
        throw DomainError("approximate_pinned: domain must be [0, 1]");
    if (!(0.0 < a_prime && a_prime < a && a <= 0.25))
        throw PreconditionError("approximate_pinned: need 0 < a' < a <= 1/4");
    if (!curve.restrict_to(0.0, a).is_linear(1e-12) ||
        !curve.restrict_to(1.0 - a, 1.0).is_linear(1e-12))
        throw PreconditionError("approximate_pinned: curve must be linear on the end strips");
    PinSpec pin{a, a_prime};
    return approximate_core(curve, L, eps, &pin);
}

}  // namespace bilip
