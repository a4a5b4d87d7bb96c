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

#include "aqm/quant_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aqm/golden_tables.hpp"

namespace aqm {

namespace {

int roundHalfAwayFromZero(double x)
{
    return static_cast<int>(x >= 0.0 ? std::floor(x + 0.5) : std::ceil(x - 0.5));
}

} // namespace

const char* qmKindName(QmKind kind)
{
    return kind == QmKind::Intra ? "intra" : "inter";
}

QuantMatrix::QuantMatrix(int n, QmKind kind)
    : m_size(n), m_kind(kind), m_entries(static_cast<size_t>(n) * n, 16)
{
    if (n != 8 && n != 16 && n != 32)
        throw std::domain_error("QuantMatrix: size must be 8, 16 or 32");
}

QuantMatrix fwmToQm(const FrequencyWeightMatrix& fwm, int scale, QmKind kind)
{
    if (scale < 1)
        throw std::domain_error("fwmToQm: scale must be >= 1");
    const int n = fwm.size();
    QuantMatrix qm(n, kind);
    for (int i = 0; i < n; i++)
    {
        for (int j = 0; j < n; j++)
        {
            const double weight = fwm.at(i, j);
            if (!(weight > 0.0))
                throw std::domain_error("fwmToQm: weight at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not positive");
            const int entry = roundHalfAwayFromZero(scale / weight);
            if (entry < 1 || entry > 255)
                throw std::range_error("fwmToQm: entry " + std::to_string(entry) +
                                       " at (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside [1,255]");
            qm.set(i, j, entry);
        }
    }
    return qm;
}

QuantMatrix defaultIntraQm()
{
    return fwmToQm(computeFwm(), 16, QmKind::Intra);
}

QuantMatrix defaultInterQm()
{
    QuantMatrix qm(8, QmKind::Inter);
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            qm.set(i, j, golden::defaultInterQm[i][j]);
    return qm;
}

QuantMatrix flatQm(int n, int value, QmKind kind)
{
    if (value < 1 || value > 255)
        throw std::domain_error("flatQm: value outside [1,255]");
    QuantMatrix qm(n, kind);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            qm.set(i, j, value);
    return qm;
}

QuantMatrix upsampleQm(const QuantMatrix& source, int targetSize)
{
    if (source.size() != 8)
        throw std::domain_error("upsampleQm: source must be 8x8");
    if (targetSize != 16 && targetSize != 32)
        throw std::domain_error("upsampleQm: target size must be 16 or 32");
    const int factor = targetSize / 8;
    QuantMatrix qm(targetSize, source.kind());
    for (int i = 0; i < targetSize; i++)
        for (int j = 0; j < targetSize; j++)
            qm.set(i, j, source.at(i / factor, j / factor));
    return qm;
}

} // namespace aqm
