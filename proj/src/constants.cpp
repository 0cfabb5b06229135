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

#include "bilip/constants.hpp"

#include <algorithm>
#include <cmath>

#include "bilip/errors.hpp"

namespace bilip {

void ConstantBudget::validate() const {
    auto fail = [](const char* what) { throw AccountingError(what); };
    if (!(L > 1.0 && eps > 0.0 && xi > 0.0 && eps_tilde > 0.0 && N >= 1 && ell > 0.0 &&
          delta > 0.0 && grid_step > 0.0 && slack >= 0.0))
        fail("ConstantBudget: fields must be positive");
    if (!(2.0 * ell * static_cast<double>(N) < xi))
        fail("ConstantBudget: 2*ell*N < xi violated");
    if (!(eps_tilde < eps / 5.0)) fail("ConstantBudget: eps_tilde < eps/5 violated");
    if (!(delta <= eps * eps * eps_tilde / (12.0 * L)))
        fail("ConstantBudget: delta <= eps^2*eps_tilde/(12L) violated");
}

ConstantBudget choose_constants(double L, double eps) {
    if (!(L > 1.0)) throw PreconditionError("choose_constants: need L > 1");
    if (!(eps > 0.0)) throw PreconditionError("choose_constants: need eps > 0");
    ConstantBudget b;
    b.L = L;
    b.eps = eps;
    b.xi = std::min(eps, 1.0) / (20.0 * (L + 1.0));

    const double target = 1.0 / (L + eps);
    double et = 0.5;
    for (int k = 1; k <= 60; ++k, et *= 0.5) {
        if (!(et < eps / 5.0)) continue;
        if (!(std::cos(et) / (L + et) >= target)) continue;
        if (!(1.0 / L - 4.0 * L * et / (1.0 - et) >= target)) continue;
        if (!(1.0 / L - 18.0 * L * et >= target)) continue;
        break;
    }
    b.eps_tilde = et;

    b.N = 16;  // provisional; finalized once the bad intervals are known
    b.ell = b.xi / (8.0 * static_cast<double>(b.N));
    b.delta = 0.5 * b.xi * b.xi * b.eps_tilde / (12.0 * L);
    b.grid_step = 1.0 / 2048.0;
    b.slack = 1e-6;
    b.validate();
    return b;
}

}  // namespace bilip
