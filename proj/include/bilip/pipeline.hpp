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

#ifndef BILIP_PIPELINE_HPP
#define BILIP_PIPELINE_HPP

#include <optional>
#include <vector>

#include "bilip/constants.hpp"
#include "bilip/curve.hpp"
#include "bilip/lebesgue.hpp"
#include "bilip/shorten.hpp"
#include "bilip/verify.hpp"

namespace bilip {

/// Monotone piecewise-linear reparametrization of the domain axis.
class TimeChange {
  public:
    TimeChange(std::vector<double> knots, std::vector<double> values);

    static TimeChange identity(double lo, double hi);

    double operator()(double x) const;
    double slope(std::size_t piece) const;

    const std::vector<double>& knots() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }

    double domain_lo() const { return xs_.front(); }
    double domain_hi() const { return xs_.back(); }
    double range_lo() const { return ys_.front(); }
    double range_hi() const { return ys_.back(); }

    TimeChange inverse() const;
    /// (f o g)(x) = f(g(x)); g's range must match f's domain.
    static TimeChange compose(const TimeChange& f, const TimeChange& g);

    bool slopes_at_most_one(double tol = 1e-12) const;

  private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

struct SpeedupResult {
    PLCurve curve;  // phi2
    TimeChange tau;
    double C{0.0};                  // tau(domain end)
    std::vector<Interval> bad_in_phi2;  // bad intervals mapped through tau
};

/// Speeds the curve up to exactly L + xi on the strips of width ell adjacent
/// to every bad interval (the complement of good_set), contracting the
/// domain by at most xi relative.
SpeedupResult speedup(const PLCurve& phi1, const std::vector<Interval>& good_set,
                      const ConstantBudget& budget, double L);

struct ShortenBadResult {
    PLCurve curve;  // phi3
    TimeChange tau_tilde;
    double C_prime{0.0};
    std::vector<Interval> smooth;  // shortened intervals [a_i, b'_i], final coords
    std::vector<ShortenResult> per_interval;
};

/// Applies the shortening on every bad interval left to right, re-offsetting
/// the coordinates after each domain contraction.
ShortenBadResult shorten_bad_intervals(const PLCurve& phi2, const std::vector<Interval>& bad,
                                       double L_eff, const ConstantBudget& budget);

struct SampleResult {
    PLCurve curve;  // phi4
    int subdivisions{0};
    double sup_increment{0.0};
};

/// Resamples every smooth interval on uniform subdivisions, doubling the
/// count until the whole curve passes check_bilip at L_eff*(1+xi) and the
/// sup-distance increment stays within xi.
SampleResult pl_sample_c1(const PLCurve& phi3, const std::vector<Interval>& smooth, double L_eff,
                          const ConstantBudget& budget);

/// phi_eps(x) = phi4(C_prime/target_length * x): stretches [0, C_prime] back
/// onto [0, target_length]. C_prime must lie in [(1-2 xi)*target, target].
PLCurve rescale(const PLCurve& phi4, double C_prime, double target_length, double xi);

struct StageDump {
    PLCurve phi1, phi2, phi3, phi4;
    std::optional<TimeChange> tau, tau_tilde;
    PartitionReport partition;
    std::vector<Interval> good_set, bad_set;
    std::vector<Interval> smooth;
    double C{0.0}, C_prime{0.0};
};

struct ApproxResult {
    PLCurve output;
    BiLipReport report;
    ConstantBudget budget;
    bool certified{false};
    double sup_dist{0.0};
    bool endpoints_exact{false};
    std::optional<StageDump> stages;
};

struct PinSpec {
    double a{0.0};
    double a_prime{0.0};
};

/// Full assembly on a domain [0, D]: straighten, speed up, shorten, sample,
/// rescale, then certify endpoints, sup-distance, and the (L+eps) constant.
/// Never silently passes: `certified` and the report carry the outcome.
ApproxResult approximate_core(const PLCurve& curve, double L, double eps, const PinSpec* pin,
                              bool keep_stages = true);

/// Whole-curve entry point; the domain must be [0, 1].
ApproxResult approximate(const PLCurve& curve, double L, double eps);

/// Pinned-ends entry point: the input must be linear on [0, a] and
/// [1-a, 1]; the output coincides with the input on [0, a'] and [1-a', 1]
/// vertex for vertex.
ApproxResult approximate_pinned(const PLCurve& curve, double L, double eps, double a,
                                double a_prime);

}  // namespace bilip

#endif  // BILIP_PIPELINE_HPP
