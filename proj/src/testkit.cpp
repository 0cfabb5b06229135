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

#include "bilip/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bilip/errors.hpp"

namespace bilip {
namespace {

constexpr int kMaxRejections = 1000;
constexpr double kLattice = 4096.0;  // breakpoint quantization grid

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mix(seed ^ (0x5851f42d4c957f2dull * (stream + 1)));
    return mix.next_u64();
}

std::vector<double> random_breakpoints(SplitMix64& rng, int n) {
    std::vector<double> gaps(static_cast<std::size_t>(n) - 1);
    double total = 0.0;
    for (double& g : gaps) {
        g = rng.uniform(0.6, 1.4);
        total += g;
    }
    std::vector<double> ts(static_cast<std::size_t>(n));
    ts[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        acc += gaps[i];
        ts[i + 1] = std::round(acc / total * kLattice) / kLattice;
    }
    ts.back() = 1.0;
    return ts;
}

PLCurve attempt_open(SplitMix64& rng, const GenSpec& spec) {
    const int n = spec.vertex_count;
    const double L = spec.target_L;
    std::vector<double> ts = random_breakpoints(rng, n);
    const double corner_bound = kPi - 2.0 * std::asin(std::min(1.0, 1.0 / (L * L)));
    const double beta = std::min(0.85 * corner_bound, 2.8 / std::sqrt(static_cast<double>(n)));
    const double logL = std::log(L);
    std::vector<Point2> ps(static_cast<std::size_t>(n));
    ps[0] = {0.0, 0.0};
    double theta = rng.uniform(0.0, kTwoPi);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        if (i > 0) theta += rng.uniform(-beta, beta);
        const double speed = std::exp(rng.uniform(-0.85, 0.85) * logL);
        const double dt = ts[i + 1] - ts[i];
        ps[i + 1] = {ps[i].x + speed * dt * std::cos(theta), ps[i].y + speed * dt * std::sin(theta)};
    }
    return PLCurve(std::move(ts), std::move(ps));
}

}  // namespace

PLCurve gen_bilip_curve(const GenSpec& spec) {
    if (spec.vertex_count < 2) throw PreconditionError("gen_bilip_curve: need >= 2 vertices");
    if (!(spec.target_L > 1.0)) throw PreconditionError("gen_bilip_curve: need target_L > 1");
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        SplitMix64 rng(stream_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
        PLCurve c = attempt_open(rng, spec);
        if (spec.vertex_count == 2) return c;  // a single segment always qualifies
        const auto res = check_bilip(c, spec.target_L, default_grid_step(c), 0.0);
        if (res.pass) return c;
    }
    throw ConvergenceError("gen_bilip_curve: rejection budget exhausted (spec too tight)");
}

ClosedPLCurve gen_bilip_closed_curve(const GenSpec& spec) {
    const int n = std::max(spec.vertex_count, 8);
    if (!(spec.target_L > 1.0))
        throw PreconditionError("gen_bilip_closed_curve: need target_L > 1");
    double amp = std::min(0.25, 0.5 * (spec.target_L - 1.0));
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        SplitMix64 rng(stream_seed(spec.seed ^ 0xbadc0ffeeull, static_cast<std::uint64_t>(attempt)));
        std::vector<double> as(static_cast<std::size_t>(n));
        const double cell = kTwoPi / n;
        for (int i = 0; i < n; ++i)
            as[static_cast<std::size_t>(i)] = cell * (i + rng.uniform(-0.2, 0.2) + 0.5);
        std::sort(as.begin(), as.end());
        std::vector<Point2> ps(static_cast<std::size_t>(n));
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (as[i + 1] - as[i] < 0.2 * cell) ok = false;
        if (as.front() + kTwoPi - as.back() < 0.2 * cell) ok = false;
        if (ok) {
            for (int i = 0; i < n; ++i) {
                const double r = 1.0 + amp * rng.uniform(-1.0, 1.0);
                ps[static_cast<std::size_t>(i)] = {r * std::cos(as[static_cast<std::size_t>(i)]),
                                                   r * std::sin(as[static_cast<std::size_t>(i)])};
            }
            ClosedPLCurve c(as, ps);
            const auto res = check_bilip_closed(c, spec.target_L, kTwoPi / 2048.0, 0.0);
            if (res.pass) return c;
        }
        amp *= 0.7;
    }
    throw ConvergenceError("gen_bilip_closed_curve: rejection budget exhausted");
}

double oracle_inverse_lipschitz(const PLCurve& curve, int resolution) {
    if (resolution < 2) throw PreconditionError("oracle_inverse_lipschitz: resolution >= 2");
    const double lo = curve.domain_lo();
    const double hi = curve.domain_hi();
    std::vector<double> ts(static_cast<std::size_t>(resolution));
    std::vector<Point2> ps(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        ts[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
        ps[static_cast<std::size_t>(i)] = curve.eval(ts[static_cast<std::size_t>(i)]);
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < resolution; ++i) {
        for (int j = i + 1; j < resolution; ++j) {
            const double r = dist(ps[static_cast<std::size_t>(j)], ps[static_cast<std::size_t>(i)]) /
                             (ts[static_cast<std::size_t>(j)] - ts[static_cast<std::size_t>(i)]);
            if (r < best) best = r;
        }
    }
    return best;
}

}  // namespace bilip
