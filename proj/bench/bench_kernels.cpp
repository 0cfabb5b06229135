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

// Timings of the inverse-Lipschitz kernel in its serial and OpenMP variants
// against the naive oracle, on generated curves of growing size.

#include <chrono>
#include <cstdio>

#include "bilip/testkit.hpp"
#include "bilip/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto dt = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return dt / reps;
}

}  // namespace

int main() {
    std::printf("%8s %10s %12s %12s %12s %10s\n", "vertices", "value", "serial[ms]",
                "parallel[ms]", "oracle[ms]", "speedup");
    for (int n : {8, 16, 24, 40, 64}) {
        const bilip::PLCurve c = bilip::gen_bilip_curve(
            {.seed = 1000 + static_cast<std::uint64_t>(n), .target_L = 2.0, .vertex_count = n});
        const double grid = bilip::default_grid_step(c);
        double value = 0.0;
        const double ser = time_ms(
            [&] { value = bilip::inverse_lipschitz(c, grid, bilip::Exec::serial).first; }, 3);
        const double par = time_ms(
            [&] { value = bilip::inverse_lipschitz(c, grid, bilip::Exec::parallel).first; }, 3);
        const double oracle =
            time_ms([&] { bilip::oracle_inverse_lipschitz(c, 2049); }, 1);
        std::printf("%8d %10.6f %12.3f %12.3f %12.3f %9.2fx\n", n, value, ser, par, oracle,
                    ser / par);
    }
    return 0;
}
