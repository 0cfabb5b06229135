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

#ifndef BILIP_EXEC_HPP
#define BILIP_EXEC_HPP

namespace bilip {

/// Execution policy for the measurement kernels. Both policies compute the
/// same per-box results and reduce them in box order, so they agree bitwise;
/// the serial one is kept as the reference for tests and benchmarks.
enum class Exec {
    serial,
    parallel,
};

}  // namespace bilip

#endif  // BILIP_EXEC_HPP
