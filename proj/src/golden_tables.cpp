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

#include "aqm/golden_tables.hpp"

#include <cmath>

#include "aqm/display_adapt.hpp"
#include "aqm/fwm.hpp"
#include "aqm/quant_matrix.hpp"

namespace aqm::golden {

const std::array<std::array<double, 8>, 8> defaultFwm = {{
    {1.0000, 1.0000, 1.0000, 1.0000, 0.9599, 0.8746, 0.7684, 0.6571},
    {1.0000, 1.0000, 1.0000, 1.0000, 0.9283, 0.8404, 0.7371, 0.6306},
    {1.0000, 1.0000, 0.9571, 0.8898, 0.8192, 0.7371, 0.6471, 0.5558},
    {1.0000, 1.0000, 0.8898, 0.7617, 0.6669, 0.5912, 0.5196, 0.4495},
    {0.9599, 0.9283, 0.8192, 0.6669, 0.5419, 0.4564, 0.3930, 0.3393},
    {0.8746, 0.8404, 0.7371, 0.5912, 0.4564, 0.3598, 0.2948, 0.2480},
    {0.7684, 0.7371, 0.6471, 0.5196, 0.3930, 0.2948, 0.2278, 0.1828},
    {0.6571, 0.6306, 0.5558, 0.4495, 0.3393, 0.2480, 0.1828, 0.1391},
}};

const std::array<std::array<int, 8>, 8> defaultIntraQm = {{
    {16, 16, 16, 16, 17, 18, 21, 24},
    {16, 16, 16, 16, 17, 19, 22, 25},
    {16, 16, 17, 18, 20, 22, 25, 29},
    {16, 16, 18, 21, 24, 27, 31, 36},
    {17, 17, 20, 24, 30, 35, 41, 47},
    {18, 19, 22, 27, 35, 44, 54, 65},
    {21, 22, 25, 31, 41, 54, 70, 88},
    {24, 25, 29, 36, 47, 65, 88, 115},
}};

const std::array<std::array<int, 8>, 8> defaultInterQm = {{
    {16, 16, 16, 16, 17, 18, 20, 24},
    {16, 16, 16, 17, 18, 20, 24, 25},
    {16, 16, 17, 18, 20, 24, 25, 28},
    {16, 17, 18, 20, 24, 25, 28, 33},
    {17, 18, 20, 24, 25, 28, 33, 41},
    {18, 20, 24, 25, 28, 33, 41, 54},
    {20, 24, 25, 28, 33, 41, 54, 71},
    {24, 25, 28, 33, 41, 54, 71, 91},
}};

const std::array<std::array<double, 8>, 8> adaptedFwm4k = {{
    {1.0000, 1.0000, 1.0000, 1.0000, 0.9798, 0.9454, 0.9114, 0.8832},
    {1.0000, 1.0000, 1.0000, 1.0000, 0.9643, 0.9309, 0.8996, 0.8739},
    {1.0000, 1.0000, 0.9736, 0.9396, 0.9125, 0.8873, 0.8652, 0.8475},
    {1.0000, 1.0000, 0.9396, 0.8780, 0.8439, 0.8265, 0.8156, 0.8085},
    {0.9798, 0.9643, 0.9125, 0.8439, 0.7953, 0.7730, 0.7662, 0.7666},
    {0.9454, 0.9309, 0.8873, 0.8265, 0.7730, 0.7418, 0.7306, 0.7319},
    {0.9114, 0.8996, 0.8652, 0.8156, 0.7662, 0.7306, 0.7132, 0.7106},
    {0.8832, 0.8739, 0.8475, 0.8085, 0.7666, 0.7319, 0.7106, 0.7030},
}};

const std::array<std::array<int, 8>, 8> adaptiveIntraQm4k = {{
    {16, 16, 16, 16, 16, 17, 18, 18},
    {16, 16, 16, 16, 17, 17, 18, 18},
    {16, 16, 16, 17, 18, 18, 18, 19},
    {16, 16, 17, 18, 19, 19, 20, 20},
    {16, 17, 18, 19, 20, 21, 21, 21},
    {17, 17, 18, 19, 21, 22, 22, 22},
    {18, 18, 18, 20, 21, 22, 22, 23},
    {18, 18, 19, 20, 21, 22, 23, 23},
}};

namespace {

FrequencyWeightMatrix tableToFwm(const std::array<std::array<double, 8>, 8>& table)
{
    FrequencyWeightMatrix fwm(8);
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            fwm.set(i, j, table[i][j]);
    return fwm;
}

GoldenCheck diffFwm(std::string name, const FrequencyWeightMatrix& computed,
                    const std::array<std::array<double, 8>, 8>& expected)
{
    GoldenCheck check{std::move(name), false, 0.0};
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            check.maxError = std::max(check.maxError, std::fabs(computed.at(i, j) - expected[i][j]));
    check.passed = check.maxError <= kFwmTolerance;
    return check;
}

GoldenCheck diffQm(std::string name, const QuantMatrix& computed,
                   const std::array<std::array<int, 8>, 8>& expected)
{
    GoldenCheck check{std::move(name), false, 0.0};
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            check.maxError = std::max(check.maxError,
                                      static_cast<double>(std::abs(computed.at(i, j) - expected[i][j])));
    check.passed = check.maxError == 0.0;
    return check;
}

} // namespace

std::vector<GoldenCheck> runGoldenChecks()
{
    std::vector<GoldenCheck> checks;
    const DisplayGeometry uhd4k = displayParameter(3840, 2160);

    checks.push_back(diffFwm("default weighting matrix", computeFwm(), golden::defaultFwm));
    checks.push_back(diffQm("default intra quantization matrix", aqm::defaultIntraQm(),
                            golden::defaultIntraQm));
    checks.push_back(diffQm("default inter quantization matrix", aqm::defaultInterQm(),
                            golden::defaultInterQm));
    checks.push_back(diffFwm("adapted weighting matrix (4k)",
                             adaptFwm(tableToFwm(golden::defaultFwm), uhd4k), adaptedFwm4k));
    checks.push_back(diffQm("adaptive intra quantization matrix (4k)",
                            adaptiveQm(uhd4k, QmKind::Intra), adaptiveIntraQm4k));
    return checks;
}

} // namespace aqm::golden
