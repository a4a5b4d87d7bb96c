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

#ifndef AQM_DISPLAY_ADAPT_HPP
#define AQM_DISPLAY_ADAPT_HPP

#include <array>
#include <optional>
#include <string_view>

#include "aqm/fwm.hpp"
#include "aqm/quant_matrix.hpp"

namespace aqm {

/// Target display dimensions plus the derived resolution parameter. The
/// parameter shrinks as the display diagonal grows, which weakens the
/// high-frequency rolloff of the adapted weighting matrix.
struct DisplayGeometry
{
    int width = 0;
    int height = 0;
    int maxWidth = 65535;
    int maxHeight = 65535;

    double actualHypot = 0.0;      // sqrt(width^2 + height^2), pixels
    double maxHypot = 0.0;         // sqrt(maxWidth^2 + maxHeight^2), pixels
    double normalizedHypot = 0.0;  // actualHypot / maxHypot, in (0,1]
    double resolutionParam = 0.0;  // maxHypot^-normalizedHypot, in (0,1]
};

/// Populates the derived fields. Throws std::domain_error for non-positive
/// dimensions or dimensions exceeding the maxima.
DisplayGeometry displayParameter(int width, int height, int maxWidth = 65535, int maxHeight = 65535);

/// Per-position adaptation exponents for an 8x8 grid.
struct AdaptationField
{
    int size = 8;
    std::array<double, 64> exponents{}; // exp(-distance / resolutionParam)
    std::array<double, 64> distances{}; // normalized distance from DC
};

AdaptationField adaptationField(const DisplayGeometry& geometry);

/// Euclidean distance from the DC position (0,0), normalized so the farthest
/// position (7,7) maps to 1. Indices must lie in [0,7].
double normalizedDistance(int i, int j);

/// exp(-distance / resolutionParam), in (0,1].
double adaptationExponent(double distance, double resolutionParam);

/// Raises each weight to its adaptation exponent. Weights can only grow,
/// so the adapted matrix dominates the input element-wise. Requires an 8x8
/// input.
FrequencyWeightMatrix adaptFwm(const FrequencyWeightMatrix& fwm, const DisplayGeometry& geometry);

/// Display-adaptive quantization matrix: the default weighting matrix is
/// adapted to the geometry and rounded at scale 16. Intra and inter share the
/// derivation; the kind only tags the result for signaling.
QuantMatrix adaptiveQm(const DisplayGeometry& geometry, QmKind kind);

/// Named geometries: sd, hd, fhd, 4k, 8k, max.
std::optional<DisplayGeometry> presetGeometry(std::string_view name);

/// Parses "WIDTHxHEIGHT" (e.g. "3840x2160"). Returns nullopt on malformed
/// text or non-positive dimensions.
std::optional<DisplayGeometry> parseGeometry(std::string_view text);

} // namespace aqm

#endif
