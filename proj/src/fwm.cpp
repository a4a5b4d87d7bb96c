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

#include "aqm/fwm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aqm {

void FwmConfig::validate() const
{
    if (gridSize < 1)
        throw std::domain_error("FwmConfig: gridSize must be >= 1");
    if (!(dotPitch > 0.0))
        throw std::domain_error("FwmConfig: dotPitch must be positive");
    if (!(viewingDistance > 0.0))
        throw std::domain_error("FwmConfig: viewingDistance must be positive");
    if (!(symmetry > 0.0) || symmetry > 1.0)
        throw std::domain_error("FwmConfig: symmetry must be in (0,1]");
    if (!(peakFrequency > 0.0))
        throw std::domain_error("FwmConfig: peakFrequency must be positive");
}

FrequencyWeightMatrix::FrequencyWeightMatrix(int n)
    : m_size(n), m_values(static_cast<size_t>(n) * n, 0.0)
{
    if (n < 1)
        throw std::domain_error("FrequencyWeightMatrix: size must be >= 1");
}

FrequencyWeightMatrix::FrequencyWeightMatrix(int n, std::vector<double> values)
    : m_size(n), m_values(std::move(values))
{
    if (n < 1)
        throw std::domain_error("FrequencyWeightMatrix: size must be >= 1");
    if (m_values.size() != static_cast<size_t>(n) * n)
        throw std::domain_error("FrequencyWeightMatrix: value count does not match size");
}

double discreteFrequency(int index, const FwmConfig& config)
{
    if (index < 1 || index > config.gridSize)
        throw std::domain_error("discreteFrequency: index " + std::to_string(index) +
                                " outside [1," + std::to_string(config.gridSize) + "]");
    return (index - 1) / (config.dotPitch * 2.0 * config.gridSize);
}

double radialFrequency(double fu, double fv, double viewingDistance)
{
    const double anglePerMm = std::asin(1.0 / std::sqrt(1.0 + viewingDistance * viewingDistance));
    const double scale = M_PI / (180.0 * anglePerMm);
    return scale * std::hypot(fu, fv);
}

double angularSymmetry(double fu, double fv, double symmetry)
{
    // atan2 yields 0 at the DC position and pi/2 on the vertical axis; the
    // cos(4*theta) term evaluates to 1 in both cases, matching the symmetric
    // weighting along the axes.
    const double theta = (fu == 0.0 && fv == 0.0) ? 0.0 : std::atan2(fu, fv);
    return 0.5 * (1.0 - symmetry) * std::cos(4.0 * theta) + 0.5 * (1.0 + symmetry);
}

double mtfWeight(double normalizedRadialFrequency, const FwmConfig& config)
{
    if (normalizedRadialFrequency <= config.peakFrequency)
        return 1.0;
    const double cf = config.mtfC * normalizedRadialFrequency;
    return config.mtfA * (config.mtfB + cf) * std::exp(-std::pow(cf, config.mtfD));
}

FrequencyWeightMatrix computeFwm(const FwmConfig& config)
{
    config.validate();
    const int n = config.gridSize;
    FrequencyWeightMatrix fwm(n);
    // The weighting is symmetric in (u,v); computing one triangle and
    // mirroring keeps the symmetry bit-exact.
    for (int u = 1; u <= n; u++)
    {
        for (int v = u; v <= n; v++)
        {
            const double fu = discreteFrequency(u, config);
            const double fv = discreteFrequency(v, config);
            const double radial = radialFrequency(fu, fv, config.viewingDistance);
            const double normalized = radial / angularSymmetry(fu, fv, config.symmetry);
            const double weight = mtfWeight(normalized, config);
            fwm.set(u - 1, v - 1, weight);
            fwm.set(v - 1, u - 1, weight);
        }
    }
    return fwm;
}

} // namespace aqm
