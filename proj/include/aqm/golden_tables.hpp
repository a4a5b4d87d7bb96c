/*
Copyright 2026 the aqm authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef AQM_GOLDEN_TABLES_HPP
#define AQM_GOLDEN_TABLES_HPP

#include <array>
#include <string>
#include <vector>

namespace aqm::golden {

// Reference tables the generators are validated against. The weighting
// matrices carry 4 decimal places, so float comparisons use kFwmTolerance;
// the integer tables must match exactly. The CLI --golden flag and the test
// suites share these as the single source of truth.

inline constexpr double kFwmTolerance = 5e-5;

/// 8x8 weighting matrix for the default viewing model.
extern const std::array<std::array<double, 8>, 8> defaultFwm;

/// Default intra quantization weights (scale 16 over defaultFwm).
extern const std::array<std::array<int, 8>, 8> defaultIntraQm;

/// Default inter quantization weights (fixed table).
extern const std::array<std::array<int, 8>, 8> defaultInterQm;

/// defaultFwm adapted to a 3840x2160 display with 65535x65535 maxima.
extern const std::array<std::array<double, 8>, 8> adaptedFwm4k;

/// Intra quantization weights derived from adaptedFwm4k.
extern const std::array<std::array<int, 8>, 8> adaptiveIntraQm4k;

struct GoldenCheck
{
    std::string name;
    bool passed = false;
    double maxError = 0.0; // absolute-difference metric (integer diff for int tables)
};

/// Recomputes every table through the library and diffs it against the
/// constants above. adaptedFwm4k is checked by adapting the stored 4-decimal
/// defaultFwm, which is the precision those reference values were derived at.
std::vector<GoldenCheck> runGoldenChecks();

} // namespace aqm::golden

#endif
