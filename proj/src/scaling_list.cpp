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

#include "aqm/scaling_list.hpp"

#include <bit>
#include <string>

namespace aqm {

void BitWriter::writeBit(uint32_t bit)
{
    if (m_fill == 0)
        m_bytes.push_back(0);
    if (bit & 1)
        m_bytes.back() = static_cast<uint8_t>(m_bytes.back() | (1u << (7 - m_fill)));
    m_fill = (m_fill + 1) & 7;
}

void BitWriter::writeBits(uint32_t value, int count)
{
    for (int i = count - 1; i >= 0; i--)
        writeBit((value >> i) & 1u);
}

void BitWriter::alignToByte()
{
    m_fill = 0;
}

std::vector<uint8_t> BitWriter::take()
{
    alignToByte();
    return std::move(m_bytes);
}

uint32_t BitReader::readBit()
{
    if (m_pos >= m_bytes.size() * 8)
        throw ParseError("bitstream truncated at bit " + std::to_string(m_pos));
    const uint32_t bit = (m_bytes[m_pos / 8] >> (7 - m_pos % 8)) & 1u;
    m_pos++;
    return bit;
}

uint32_t BitReader::readBits(int count)
{
    uint32_t value = 0;
    for (int i = 0; i < count; i++)
        value = (value << 1) | readBit();
    return value;
}

void writeUe(BitWriter& writer, uint32_t value)
{
    if (value == UINT32_MAX)
        throw std::domain_error("writeUe: value too large");
    const uint32_t shifted = value + 1;
    const int width = std::bit_width(shifted);
    writer.writeBits(0, width - 1);
    writer.writeBits(shifted, width);
}

uint32_t readUe(BitReader& reader)
{
    int zeros = 0;
    while (reader.readBit() == 0)
    {
        zeros++;
        if (zeros > 31)
            throw ParseError("exp-Golomb prefix longer than 31 zeros");
    }
    uint32_t value = 1;
    for (int i = 0; i < zeros; i++)
        value = (value << 1) | reader.readBit();
    return value - 1;
}

void writeSe(BitWriter& writer, int32_t value)
{
    const uint32_t code = value > 0 ? static_cast<uint32_t>(2 * value - 1)
                                    : static_cast<uint32_t>(-2 * static_cast<int64_t>(value));
    writeUe(writer, code);
}

int32_t readSe(BitReader& reader)
{
    const uint32_t code = readUe(reader);
    if (code & 1)
        return static_cast<int32_t>((code + 1) / 2);
    return -static_cast<int32_t>(code / 2);
}

ScanOrder uprightDiagonalScan(int n)
{
    if (n < 1)
        throw std::domain_error("uprightDiagonalScan: size must be >= 1");
    ScanOrder order;
    order.size = n;
    order.positions.reserve(static_cast<size_t>(n) * n);
    for (int diag = 0; diag <= 2 * n - 2; diag++)
    {
        for (int row = std::min(diag, n - 1); row >= 0 && diag - row < n; row--)
            order.positions.emplace_back(row, diag - row);
    }
    return order;
}

namespace {

constexpr int kDpcmPredictorInit = 16;

void encodeList(BitWriter& writer, const ScalingList& list, const ScanOrder& scan)
{
    if (list.matrix.size() != 8)
        throw std::domain_error("encodeScalingLists: matrices must be 8x8");
    writer.writeBit(list.kind == QmKind::Inter ? 1 : 0);
    int predictor = kDpcmPredictorInit;
    for (const auto& [row, col] : scan.positions)
    {
        const int entry = list.matrix.at(row, col);
        if (entry < 1 || entry > 255)
            throw std::domain_error("encodeScalingLists: entry " + std::to_string(entry) +
                                    " outside [1,255]");
        writeSe(writer, entry - predictor);
        predictor = entry;
    }
}

ScalingList decodeList(BitReader& reader, const ScanOrder& scan)
{
    const QmKind kind = reader.readBit() ? QmKind::Inter : QmKind::Intra;
    QuantMatrix matrix(8, kind);
    int predictor = kDpcmPredictorInit;
    for (const auto& [row, col] : scan.positions)
    {
        const int entry = predictor + readSe(reader);
        if (entry < 1 || entry > 255)
            throw IntegrityError("decodeScalingLists: entry " + std::to_string(entry) +
                                 " outside [1,255]");
        matrix.set(row, col, entry);
        predictor = entry;
    }
    return ScalingList{kind, matrix};
}

} // namespace

std::vector<uint8_t> encodeScalingLists(const ScalingListPayload& payload)
{
    if (payload.layers.empty())
        throw std::domain_error("encodeScalingLists: at least one layer required");
    const ScanOrder scan = uprightDiagonalScan(8);
    BitWriter writer;
    writeUe(writer, static_cast<uint32_t>(payload.layers.size()));
    for (const auto& layer : payload.layers)
    {
        writeUe(writer, static_cast<uint32_t>(layer.size()));
        for (const ScalingList& list : layer)
            encodeList(writer, list, scan);
    }
    return writer.take();
}

ScalingListPayload decodeScalingLists(std::span<const uint8_t> bytes)
{
    const ScanOrder scan = uprightDiagonalScan(8);
    BitReader reader(bytes);
    ScalingListPayload payload;
    const uint32_t layerCount = readUe(reader);
    if (layerCount == 0)
        throw IntegrityError("decodeScalingLists: layer count must be >= 1");
    for (uint32_t i = 0; i < layerCount; i++)
    {
        const uint32_t listCount = readUe(reader);
        std::vector<ScalingList> layer;
        layer.reserve(listCount);
        for (uint32_t j = 0; j < listCount; j++)
            layer.push_back(decodeList(reader, scan));
        payload.layers.push_back(std::move(layer));
    }
    // Only zero padding may remain, and only within the final byte.
    if (reader.bitsRemaining() >= 8)
        throw ParseError("decodeScalingLists: trailing bytes after payload");
    while (reader.bitsRemaining() > 0)
        if (reader.readBit() != 0)
            throw ParseError("decodeScalingLists: nonzero padding bit");
    return payload;
}

std::vector<uint8_t> packContainer(const ScalingListPayload& payload)
{
    std::vector<uint8_t> bytes(kContainerMagic, kContainerMagic + 4);
    bytes.push_back(kContainerVersion);
    const std::vector<uint8_t> body = encodeScalingLists(payload);
    bytes.insert(bytes.end(), body.begin(), body.end());
    return bytes;
}

ScalingListPayload unpackContainer(std::span<const uint8_t> bytes)
{
    if (bytes.size() < 5)
        throw ParseError("container truncated: " + std::to_string(bytes.size()) + " bytes");
    if (!std::equal(std::begin(kContainerMagic), std::end(kContainerMagic), bytes.begin()))
    {
        std::string seen(bytes.begin(), bytes.begin() + 4);
        throw ParseError("bad container magic '" + seen + "', expected 'AQMS'");
    }
    if (bytes[4] != kContainerVersion)
        throw ParseError("unsupported container version " + std::to_string(bytes[4]));
    return decodeScalingLists(bytes.subspan(5));
}

} // namespace aqm
