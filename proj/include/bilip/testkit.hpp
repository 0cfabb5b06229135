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

#ifndef BILIP_TESTKIT_HPP
#define BILIP_TESTKIT_HPP

#include <cstdint>

#include "bilip/closed_curve.hpp"
#include "bilip/curve.hpp"
#include "bilip/verify.hpp"

namespace bilip {

/// Deterministic counter-based generator state (splitmix64). Streams derived
/// from the same seed are reproducible across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    std::uint64_t state_;
};

struct GenSpec {
    std::uint64_t seed{0};
    double target_L{2.0};
    int vertex_count{10};
    bool closed{false};
};

/// Rejection-samples a PL curve on [0,1] with speeds inside [1/L, L] and
/// turning angles inside the corner-rule bound until check_bilip(target_L)
/// passes with zero slack. Deterministic in the GenSpec. Breakpoints are
/// quantized to the 2^-12 lattice.
PLCurve gen_bilip_curve(const GenSpec& spec);

/// Closed counterpart: a radially perturbed polygon on S^1 passing the
/// chordal check at target_L; the perturbation shrinks on rejection.
ClosedPLCurve gen_bilip_closed_curve(const GenSpec& spec);

/// Exhaustive double loop over a uniform parameter grid; intentionally naive
/// and serial. The independent oracle for the inverse-Lipschitz infimum.
double oracle_inverse_lipschitz(const PLCurve& curve, int resolution);

}  // namespace bilip

#endif  // BILIP_TESTKIT_HPP
