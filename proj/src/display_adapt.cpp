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

#include "aqm/display_adapt.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqm {

DisplayGeometry displayParameter(int width, int height, int maxWidth, int maxHeight)
{
    if (width < 1 || height < 1 || maxWidth < 1 || maxHeight < 1)
        throw std::domain_error("displayParameter: dimensions must be positive");
    if (width > maxWidth || height > maxHeight)
        throw std::domain_error("displayParameter: " + std::to_string(width) + "x" +
                                std::to_string(height) + " exceeds maxima " +
                                std::to_string(maxWidth) + "x" + std::to_string(maxHeight));

    DisplayGeometry g;
    g.width = width;
    g.height = height;
    g.maxWidth = maxWidth;
    g.maxHeight = maxHeight;
    g.actualHypot = std::hypot(static_cast<double>(width), static_cast<double>(height));
    g.maxHypot = std::hypot(static_cast<double>(maxWidth), static_cast<double>(maxHeight));
    g.normalizedHypot = g.actualHypot / g.maxHypot;
    // maxHypot^-normalizedHypot, written via exp/log to keep full precision
    // for large bases.
    g.resolutionParam = std::exp(-g.normalizedHypot * std::log(g.maxHypot));
    return g;
}

double normalizedDistance(int i, int j)
{
    if (i < 0 || i > 7 || j < 0 || j > 7)
        throw std::domain_error("normalizedDistance: index outside [0,7]");
    return std::sqrt((i * i + j * j) / 98.0);
}

double adaptationExponent(double distance, double resolutionParam)
{
    if (!(resolutionParam > 0.0))
        throw std::domain_error("adaptationExponent: resolutionParam must be positive");
    return std::exp(-distance / resolutionParam);
}

AdaptationField adaptationField(const DisplayGeometry& geometry)
{
    AdaptationField field;
    for (int i = 0; i < 8; i++)
    {
        for (int j = 0; j < 8; j++)
        {
            const double d = normalizedDistance(i, j);
            field.distances[static_cast<size_t>(i) * 8 + j] = d;
            field.exponents[static_cast<size_t>(i) * 8 + j] =
                adaptationExponent(d, geometry.resolutionParam);
        }
    }
    return field;
}

FrequencyWeightMatrix adaptFwm(const FrequencyWeightMatrix& fwm, const DisplayGeometry& geometry)
{
    if (fwm.size() != 8)
        throw std::domain_error("adaptFwm: weighting matrix must be 8x8");
    const AdaptationField field = adaptationField(geometry);
    FrequencyWeightMatrix adapted(8);
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            adapted.set(i, j, std::pow(fwm.at(i, j), field.exponents[static_cast<size_t>(i) * 8 + j]));
    return adapted;
}

QuantMatrix adaptiveQm(const DisplayGeometry& geometry, QmKind kind)
{
    return fwmToQm(adaptFwm(computeFwm(), geometry), 16, kind);
}

std::optional<DisplayGeometry> presetGeometry(std::string_view name)
{
    struct Preset { std::string_view name; int width; int height; };
    static constexpr Preset presets[] = {
        {"sd", 720, 576},   {"hd", 1280, 720},   {"fhd", 1920, 1080},
        {"4k", 3840, 2160}, {"8k", 7680, 4320},  {"max", 65535, 65535},
    };
    for (const Preset& p : presets)
        if (p.name == name)
            return displayParameter(p.width, p.height);
    return std::nullopt;
}

std::optional<DisplayGeometry> parseGeometry(std::string_view text)
{
    const size_t sep = text.find('x');
    if (sep == std::string_view::npos || sep == 0 || sep + 1 >= text.size())
        return std::nullopt;
    int width = 0, height = 0;
    const auto [wp, we] = std::from_chars(text.data(), text.data() + sep, width);
    const auto [hp, he] = std::from_chars(text.data() + sep + 1, text.data() + text.size(), height);
    if (we != std::errc() || he != std::errc() || wp != text.data() + sep ||
        hp != text.data() + text.size())
        return std::nullopt;
    if (width < 1 || height < 1 || width > 65535 || height > 65535)
        return std::nullopt;
    return displayParameter(width, height);
}

} // namespace aqm
