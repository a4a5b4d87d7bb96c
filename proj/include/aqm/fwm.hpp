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

#ifndef AQM_FWM_HPP
#define AQM_FWM_HPP

#include <vector>

namespace aqm {

/// Constants of the CSF-based modulation transfer function plus the discrete
/// frequency grid it is sampled on. Defaults describe the standard viewing
/// model: 100 DPI dot pitch, 512mm viewing distance, 0.7 diagonal symmetry.
struct FwmConfig
{
    double mtfA = 2.2;
    double mtfB = 0.192;
    double mtfC = 0.114;
    double mtfD = 1.1;
    double peakFrequency = 8.0;      // cycles/degree; weights clamp to 1.0 at or below
    double dotPitch = 0.25;          // mm between display dots
    int    gridSize = 8;             // radial frequencies per axis
    double viewingDistance = 512.0;  // mm
    double symmetry = 0.7;           // in (0,1]; lowers sensitivity near 45 degrees

    // Throws std::domain_error when a field is out of range.
    void validate() const;
};

/// Square matrix of perceptual weights in (0,1]. Row u, column v, 0-based
/// storage; weight 1.0 at the DC position (0,0) and symmetric about the
/// diagonal.
class FrequencyWeightMatrix
{
public:
    explicit FrequencyWeightMatrix(int n);
    FrequencyWeightMatrix(int n, std::vector<double> values);

    int size() const { return m_size; }
    double at(int u, int v) const { return m_values[static_cast<size_t>(u) * m_size + v]; }
    void set(int u, int v, double weight) { m_values[static_cast<size_t>(u) * m_size + v] = weight; }
    const std::vector<double>& values() const { return m_values; }

private:
    int m_size;
    std::vector<double> m_values;
};

/// Horizontal/vertical grid frequency in cycles/mm for a 1-based index.
double discreteFrequency(int index, const FwmConfig& config);

/// Radial spatial frequency in cycles/degree of visual angle for a pair of
/// grid frequencies (cycles/mm) at the given viewing distance (mm).
double radialFrequency(double fu, double fv, double viewingDistance);

/// Angular sensitivity factor in [symmetry, 1]. The orientation angle is
/// taken as atan2(fu, fv), so the axes map to 1.0 and the DC position is
/// defined as angle zero.
double angularSymmetry(double fu, double fv, double symmetry);

/// MTF weight for a normalized radial frequency in cycles/degree. Exactly 1.0
/// at or below the peak frequency.
double mtfWeight(double normalizedRadialFrequency, const FwmConfig& config);

/// Full weighting matrix over the config's grid. Pure and deterministic.
FrequencyWeightMatrix computeFwm(const FwmConfig& config = FwmConfig());

} // namespace aqm

#endif
