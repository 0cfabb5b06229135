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

#ifndef BILIP_SHORTEN_HPP
#define BILIP_SHORTEN_HPP

#include <utility>
#include <vector>

#include "bilip/curve.hpp"
#include "bilip/exec.hpp"
#include "bilip/geometry.hpp"
#include "bilip/verify.hpp"

namespace bilip {

/// Certificate that a curve is "fast" on [a, b']: speed exactly L inside and
/// no mixed pair (one parameter inside, one outside) below the inverse bound.
struct FastCertificate {
    double a{0.0};
    double b_prime{0.0};
    double speed_dev{0.0};    // max | speed - L | over segments in [a, b']
    double mild_report{0.0};  // min mixed-pair ratio; +inf when nothing is outside
    Witness mild_witness{};

    bool ok(double L, double slack = 1e-6) const {
        return speed_dev <= 1e-9 && mild_report >= 1.0 / (L * (1.0 + slack));
    }
};

struct StraightenStep {
    double r{0.0}, s{0.0}, s_plus{0.0};
    bool accepted{false};
    double b_prime_after{0.0};
};

struct StraightenTrace {
    std::vector<StraightenStep> iterations;
    double final_b_prime{0.0};

    int accepted_count() const {
        int n = 0;
        for (const auto& it : iterations) n += it.accepted ? 1 : 0;
        return n;
    }
};

/// Reparametrizes [a, b] at speed exactly L; b' = a + arclength(a, b) / L.
/// The image is unchanged, the suffix shifts left by b - b'.
std::pair<PLCurve, double> speed_L_reparam(const PLCurve& curve, double a, double b, double L);

/// Measures the fastness data on [a, b_prime]. Failures are encoded in the
/// certificate, not thrown.
FastCertificate is_fast(const PLCurve& curve, double a, double b_prime, double L,
                        double grid_step, Exec exec = Exec::parallel);

struct StepResult {
    bool accepted{false};
    bool degenerate{false};
    double s_plus{0.0};
    PLCurve curve;  // new curve when accepted, the input otherwise
};

/// One straightening move: replace (r, s) by its speed-L chord and accept
/// exactly when no pair (p outside [a, b''], q inside (r, s+)) falls below
/// the inverse-L bound (slack 1e-9).
StepResult straightening_step(const PLCurve& curve, double a, double b_prime, double r, double s,
                              double L, double grid_step, Exec exec = Exec::parallel);

struct ShortenResult {
    PLCurve curve;
    double b_prime{0.0};
    FastCertificate certificate;
    StraightenTrace trace;
};

/// Speed-L reparametrization followed by a dyadic straightening sweep (whole
/// interval, halves, quarters, ... down to grid_step), restarting after every
/// acceptance, until no candidate is accepted. The input must be linear at
/// speed L just outside [a, b] (clipped at the domain ends) and L-biLipschitz.
ShortenResult shorten(const PLCurve& curve, double a, double b, double L, double grid_step,
                      Exec exec = Exec::parallel, bool assume_bilip = false);

/// Residual diagnostics of the two chord-direction estimates for a triple of
/// points with |PQ| >= ell/2 and 0 < |QS| small.
struct DirectionEstimate {
    double ell{0.0}, eta{0.0}, L{0.0}, delta{0.0};
    DirVec theta{}, theta_prime{}, nu{};
    double residual1{0.0};      // |theta - theta'| - eta / L^2
    double residual2_lo{0.0};   // (theta.nu - eta/L^2) - (PS - PQ)/delta
    double residual2_hi{0.0};   // (PS - PQ)/delta - (theta.nu + eta/L^2)
};

DirectionEstimate direction_estimates(Point2 P, Point2 Q, Point2 S, double ell, double eta,
                                      double L);

/// Max turning angle between consecutive segments strictly inside (a, b').
double discrete_smoothness(const PLCurve& curve, double a, double b_prime);

}  // namespace bilip

#endif  // BILIP_SHORTEN_HPP
