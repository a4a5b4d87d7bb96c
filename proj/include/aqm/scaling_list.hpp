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

#ifndef AQM_SCALING_LIST_HPP
#define AQM_SCALING_LIST_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aqm/errors.hpp"
#include "aqm/quant_matrix.hpp"

namespace aqm {

// MSB-first bit packing.
class BitWriter
{
public:
    void writeBit(uint32_t bit);
    void writeBits(uint32_t value, int count); // count <= 32
    void alignToByte();                        // pads with zero bits
    size_t bitsWritten() const { return m_bytes.size() * 8 - (m_fill ? 8 - m_fill : 0); }
    std::vector<uint8_t> take();

private:
    std::vector<uint8_t> m_bytes;
    int m_fill = 0; // bits used in the trailing byte, 0 when aligned
};

class BitReader
{
public:
    explicit BitReader(std::span<const uint8_t> bytes) : m_bytes(bytes) {}

    uint32_t readBit();              // throws ParseError past the end
    uint32_t readBits(int count);
    size_t bitsConsumed() const { return m_pos; }
    size_t bitsRemaining() const { return m_bytes.size() * 8 - m_pos; }

private:
    std::span<const uint8_t> m_bytes;
    size_t m_pos = 0;
};

// Exp-Golomb codes. The signed mapping is value -> 2*value-1 for positive
// values and -2*value otherwise.
void writeUe(BitWriter& writer, uint32_t value);
uint32_t readUe(BitReader& reader);
void writeSe(BitWriter& writer, int32_t value);
int32_t readSe(BitReader& reader);

/// Anti-diagonal traversal of an n x n grid: diagonals in ascending i+j,
/// rows descending within each diagonal (bottom-left to top-right).
struct ScanOrder
{
    int size = 0;
    std::vector<std::pair<int, int>> positions; // (row, col)
};

ScanOrder uprightDiagonalScan(int n);

struct ScalingList
{
    QmKind kind;
    QuantMatrix matrix; // 8x8, entries in [1,255]
};

/// Per-layer scaling lists. Layer order matches coding order (base layer
/// first).
struct ScalingListPayload
{
    std::vector<std::vector<ScalingList>> layers;
};

/// Bitstream layout: ue(layer count); per layer ue(list count); per list one
/// kind bit (0 intra, 1 inter) and 64 signed-exp-Golomb DPCM deltas in
/// up-right diagonal scan order, predictor starting at 16. Zero-padded to a
/// byte boundary.
std::vector<uint8_t> encodeScalingLists(const ScalingListPayload& payload);

/// Exact inverse of encodeScalingLists. Throws ParseError for truncated or
/// trailing-garbage streams and IntegrityError when an entry decodes outside
/// [1,255].
ScalingListPayload decodeScalingLists(std::span<const uint8_t> bytes);

inline constexpr uint8_t kContainerMagic[4] = {'A', 'Q', 'M', 'S'};
inline constexpr uint8_t kContainerVersion = 1;

/// Container framing: 4-byte magic "AQMS", 1-byte version, payload bitstream.
std::vector<uint8_t> packContainer(const ScalingListPayload& payload);
ScalingListPayload unpackContainer(std::span<const uint8_t> bytes);

} // namespace aqm

#endif
