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

#ifndef AQM_QUANT_MATRIX_HPP
#define AQM_QUANT_MATRIX_HPP

#include <vector>

#include "aqm/fwm.hpp"

namespace aqm {

enum class QmKind
{
    Intra,
    Inter
};

const char* qmKindName(QmKind kind);

/// N x N integer quantization weighting matrix, N in {8,16,32}, entries in
/// [1,255]. Entry 16 is the neutral weight.
class QuantMatrix
{
public:
    QuantMatrix(int n, QmKind kind);

    int size() const { return m_size; }
    QmKind kind() const { return m_kind; }
    int at(int i, int j) const { return m_entries[static_cast<size_t>(i) * m_size + j]; }
    void set(int i, int j, int value) { m_entries[static_cast<size_t>(i) * m_size + j] = value; }
    const std::vector<int>& entries() const { return m_entries; }

    bool operator==(const QuantMatrix&) const = default;

private:
    int m_size;
    QmKind m_kind;
    std::vector<int> m_entries;
};

/// Derives integer weights as round(scale / weight), rounding half away from
/// zero. Throws std::domain_error for a non-positive weight and
/// std::range_error when an entry falls outside [1,255].
QuantMatrix fwmToQm(const FrequencyWeightMatrix& fwm, int scale = 16, QmKind kind = QmKind::Intra);

/// Default 8x8 intra matrix, derived from computeFwm() with scale 16.
QuantMatrix defaultIntraQm();

/// Default 8x8 inter matrix. This is a fixed constant table; it is not
/// derived from the weighting matrix.
QuantMatrix defaultInterQm();

/// All entries equal (16 by default): frequency-uniform quantization.
QuantMatrix flatQm(int n = 8, int value = 16, QmKind kind = QmKind::Intra);

/// Replicates each entry of an 8x8 matrix into a 2x2 (target 16) or 4x4
/// (target 32) region.
QuantMatrix upsampleQm(const QuantMatrix& source, int targetSize);

} // namespace aqm

#endif
