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

#ifndef BILIP_LEBESGUE_HPP
#define BILIP_LEBESGUE_HPP

#include <cstdint>
#include <vector>

#include "bilip/constants.hpp"
#include "bilip/curve.hpp"
#include "bilip/geometry.hpp"

namespace bilip {

/// One greedily selected bad interval: generators (p, q) and the inflated
/// interval (p_minus, q_plus) with p_minus = p - (q-p), q_plus = q + (q-p).
struct BadInterval {
    double p{0.0}, q{0.0};
    double p_minus{0.0}, q_plus{0.0};
    double uncovered{0.0};  // measure of (p,q) not covered by earlier intervals
};

struct BadSet {
    std::vector<BadInterval> intervals;
    double total_measure{0.0};  // measure of the union of inflated intervals

    std::vector<Interval> inflated() const {
        std::vector<Interval> out;
        out.reserve(intervals.size());
        for (const auto& iv : intervals) out.push_back({iv.p_minus, iv.q_plus});
        return out;
    }
};

/// Average of |phi'(z) - phi'(x)| over [p, q], computed exactly segment by
/// segment. x must have an unambiguous derivative (not a genuine corner).
double deviation(const PLCurve& curve, double x, double p, double q);

/// Greedy construction of the bad set inside (x-h, x+h): repeatedly selects
/// the pair (p, q) with M(p,q) >= eps/(2L) maximizing its uncovered measure
/// (ties: smallest p, then largest q) and inflates it, until M stays below
/// the threshold whenever at least one endpoint is outside the closure of
/// the union. Candidates are breakpoints, window ends, and current interval
/// endpoints.
BadSet bad_set(const PLCurve& curve, double x, double h, double eps, double L);

struct LebesgueWindow {
    std::vector<Interval> parts;  // (x-ell, x+ell) minus the bad set
    double measure{0.0};
    BadSet bad;
    double h{0.0};  // deviation window actually used
};

/// I_ell(x) = (x-ell, x+ell) \ A with A built at h = min(ell/eps_tilde,
/// distance to the domain ends). Throws PreconditionError when the remaining
/// measure drops below (2-eps)*ell (x is not an adequate Lebesgue point at
/// this scale).
LebesgueWindow lebesgue_window(const PLCurve& curve, double x, double ell, double eps, double L,
                               double eps_tilde);

/// Run of consecutive partition cells sharing one status.
struct CellRun {
    std::int64_t m_begin{0};
    std::int64_t m_end{0};  // exclusive
    bool admissible{false};
};

/// Anchor data of one admissible cell.
struct CellAnchors {
    std::int64_t m{0};
    double x{0.0};        // Lebesgue anchor in the central part
    double x_minus{0.0};  // replacement endpoints
    double x_plus{0.0};
};

/// Partition data of one straightening run. Cells are stored as runs (N can
/// be large and almost all cells repeat the pattern of their neighbors);
/// anchors are materialized for the edge cells of every admissible run.
struct PartitionReport {
    std::int64_t N{0};
    std::vector<CellRun> runs;
    std::vector<CellAnchors> edge_anchors;
    std::vector<Interval> good_set;  // hulls of admissible runs; phi1 linear on each
    std::int64_t admissible_cells{0};
    double non_admissible_measure{0.0};
    double good_complement_measure{0.0};
    double sup_distance{0.0};  // grid-checked |phi1 - phi|
};

struct StraightenOptions {
    /// Pinned ends: escalate N until the end clusters clear [0, pin_a_prime]
    /// and [D - pin_a_prime, D]. Zero disables pinning.
    double pin_a{0.0};
    double pin_a_prime{0.0};
    /// Skip the (expensive) entry bi-Lipschitz pre-check when the caller has
    /// already certified the input.
    bool assume_bilip{false};
    /// Cell-count cap for the N escalation.
    std::int64_t max_cells{std::int64_t{1} << 22};
};

struct StraightenResult {
    PLCurve curve;  // phi1
    PartitionReport report;
};

/// Global straightening pass: partitions the domain into N cells,
/// replaces (x_m^-, x_m^+) by its chord in every admissible cell, and
/// escalates N until the non-admissible measure is at most eps * domain
/// length. Output is endpoint-preserving, (L+eps)-biLipschitz, uniformly
/// within eps of the input, and linear on every good-set component.
StraightenResult straighten_lebesgue(const PLCurve& curve, double eps, double L,
                                     const ConstantBudget& budget,
                                     const StraightenOptions& options = {});

}  // namespace bilip

#endif  // BILIP_LEBESGUE_HPP
