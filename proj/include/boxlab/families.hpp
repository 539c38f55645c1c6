// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "boxlab/scenario.hpp"

namespace boxlab {

/// Ideal Peres box: perfect correlation in C0 and C3, even parity in C1 and
/// C2 (1/4 each), perfect anticorrelation in C4. Reaches 5 on the
/// noncontextuality inequality.
Box peres_box();

/// Uniform on C0, C3, C4; uniform over the even-parity outcomes
/// a0^b1^d = 0 and a1^b0^e = 0 in C1 and C2.
Box noise_box();

/// W * peres_box() + (1 - W) * noise_box(), W in [0, 1].
Box noisy_peres(const Rational& w);

/// Every outcome equally likely.
Box uniform_box();

}  // namespace boxlab
