// Copyright 2026 The slecft Authors
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

#include <complex>

namespace slecft {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Principal argument in (-pi, pi]. A point on the negative real axis maps to
/// +pi regardless of the sign of its zero imaginary part.
double principal_arg(cplx z);

/// ln|z| + i Arg z with Arg in (-pi, pi].
cplx principal_log(cplx z);

/// exp(e (ln|z| + i Arg z)). Zero base: 0 for e > 0, 1 for e == 0,
/// DomainError for e < 0.
cplx principal_pow(cplx base, double exponent);

}  // namespace slecft
