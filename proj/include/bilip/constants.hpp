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

#ifndef BILIP_CONSTANTS_HPP
#define BILIP_CONSTANTS_HPP

#include <cstdint>

namespace bilip {

/// The concrete small constants the construction runs with.
///
/// xi is the per-stage slack of the final assembly; eps_tilde the window
/// constant of the Lebesgue straightening; N counts the bad intervals
/// (provisional at construction, finalized once the straightening has run);
/// ell the speed-up strip length; delta the derivative-deviation threshold.
/// grid_step and slack parametrize every certification check. grid_step is
/// relative to a unit domain and scales with the domain length in use.
struct ConstantBudget {
    double L{0.0};
    double eps{0.0};
    double xi{0.0};
    double eps_tilde{0.0};
    std::int64_t N{0};
    double ell{0.0};
    double delta{0.0};
    double grid_step{0.0};
    double slack{0.0};

    /// Asserts the four constraint inequalities:
    ///   2*ell*N < xi,  eps_tilde < eps/5,  delta <= eps^2*eps_tilde/(12 L),
    ///   and positivity of every field. Throws AccountingError otherwise.
    void validate() const;
};

/// Largest dyadic eps_tilde satisfying the window-constant constraints at
/// (L, eps), xi = min(eps,1) / (20 (L+1)), and conservative defaults for the
/// remaining fields.
ConstantBudget choose_constants(double L, double eps);

}  // namespace bilip

#endif  // BILIP_CONSTANTS_HPP
