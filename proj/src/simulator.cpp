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

#include "aqm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "aqm/rd_metrics.hpp"
#include "aqm/scaling_list.hpp"

namespace aqm {

const char* layerLabelName(LayerLabel label)
{
    switch (label)
    {
    case LayerLabel::BL: return "BL";
    case LayerLabel::EL1: return "EL1";
    case LayerLabel::EL2: return "EL2";
    }
    return "?";
}

const char* qmSourceName(QmSource source)
{
    switch (source)
    {
    case QmSource::Default: return "default";
    case QmSource::Adaptive: return "adaptive";
    case QmSource::Flat: return "flat";
    }
    return "?";
}

std::optional<LayerLabel> parseLayerLabel(std::string_view name)
{
    if (name == "bl" || name == "BL") return LayerLabel::BL;
    if (name == "el1" || name == "EL1") return LayerLabel::EL1;
    if (name == "el2" || name == "EL2") return LayerLabel::EL2;
    return std::nullopt;
}

std::optional<QmSource> parseQmSource(std::string_view name)
{
    if (name == "default") return QmSource::Default;
    if (name == "adaptive") return QmSource::Adaptive;
    if (name == "flat") return QmSource::Flat;
    return std::nullopt;
}

QuantMatrix qmForLayer(const LayerConfig& config)
{
    switch (config.qmSource)
    {
    case QmSource::Default: return defaultIntraQm();
    case QmSource::Adaptive: return adaptiveQm(config.geometry, QmKind::Intra);
    case QmSource::Flat: return flatQm();
    }
    throw std::domain_error("qmForLayer: unknown qm source");
}

namespace {

// Orthonormal DCT-II basis: row k, column n.
struct DctBasis
{
    double c[8][8];

    DctBasis()
    {
        for (int k = 0; k < 8; k++)
        {
            const double norm = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int n = 0; n < 8; n++)
                c[k][n] = norm * std::cos((2 * n + 1) * k * M_PI / 16.0);
        }
    }
};

const DctBasis& basis()
{
    static const DctBasis b;
    return b;
}

} // namespace

Block forwardDct(const Block& spatial)
{
    const DctBasis& b = basis();
    Block rows{}, out{};
    // rows = spatial * C^T
    for (int i = 0; i < 8; i++)
        for (int k = 0; k < 8; k++)
        {
            double acc = 0.0;
            for (int n = 0; n < 8; n++)
                acc += spatial[i * 8 + n] * b.c[k][n];
            rows[i * 8 + k] = acc;
        }
    // out = C * rows
    for (int k = 0; k < 8; k++)
        for (int j = 0; j < 8; j++)
        {
            double acc = 0.0;
            for (int n = 0; n < 8; n++)
                acc += b.c[k][n] * rows[n * 8 + j];
            out[k * 8 + j] = acc;
        }
    return out;
}

Block inverseDct(const Block& coeffs)
{
    const DctBasis& b = basis();
    Block rows{}, out{};
    // rows = C^T * coeffs
    for (int n = 0; n < 8; n++)
        for (int j = 0; j < 8; j++)
        {
            double acc = 0.0;
            for (int k = 0; k < 8; k++)
                acc += b.c[k][n] * coeffs[k * 8 + j];
            rows[n * 8 + j] = acc;
        }
    // out = rows * C
    for (int i = 0; i < 8; i++)
        for (int n = 0; n < 8; n++)
        {
            double acc = 0.0;
            for (int k = 0; k < 8; k++)
                acc += rows[i * 8 + k] * b.c[k][n];
            out[i * 8 + n] = acc;
        }
    return out;
}

Block blockDct(const std::array<uint8_t, 64>& samples)
{
    Block centered{};
    for (int i = 0; i < 64; i++)
        centered[i] = samples[i] - 128.0;
    return forwardDct(centered);
}

double quantStep(int qp, int qmEntry)
{
    if (qp < 0 || qp > 51)
        throw std::domain_error("quantStep: qp outside [0,51]");
    if (qmEntry < 1)
        throw std::domain_error("quantStep: weighting entry must be >= 1");
    return std::pow(2.0, (qp - 4) / 6.0) * qmEntry / 16.0;
}

std::array<int32_t, 64> quantizeBlock(const Block& coeffs, const QuantMatrix& qm, int qp)
{
    std::array<int32_t, 64> levels{};
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
        {
            const double step = quantStep(qp, qm.at(i, j));
            const double c = coeffs[i * 8 + j];
            const long magnitude = std::lround(std::fabs(c) / step);
            levels[i * 8 + j] = static_cast<int32_t>(c < 0 ? -magnitude : magnitude);
        }
    return levels;
}

Block dequantizeBlock(const std::array<int32_t, 64>& levels, const QuantMatrix& qm, int qp)
{
    Block coeffs{};
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            coeffs[i * 8 + j] = levels[i * 8 + j] * quantStep(qp, qm.at(i, j));
    return coeffs;
}

double rateEstimate(const LevelHistogram& histogram, size_t payloadBits)
{
    uint64_t total = 0;
    uint64_t nonzero = 0;
    for (const auto& [level, count] : histogram)
    {
        total += count;
        if (level != 0)
            nonzero += count;
    }
    double entropyBits = 0.0;
    if (total > 0)
    {
        for (const auto& [level, count] : histogram)
        {
            const double p = static_cast<double>(count) / static_cast<double>(total);
            entropyBits -= static_cast<double>(count) * std::log2(p);
        }
    }
    return entropyBits + static_cast<double>(nonzero) + static_cast<double>(payloadBits);
}

int resolveWorkerCount(int requested)
{
    int workers = requested;
    if (workers <= 0)
    {
        if (const char* env = std::getenv("AQM_THREADS"))
            workers = std::atoi(env);
    }
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(workers, 1, 64);
}

namespace {

// Edge-replicated plane of residual inputs, padded to multiples of 8.
struct PaddedPlane
{
    int width = 0;
    int height = 0;
    std::vector<double> values;

    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
};

PaddedPlane padResidual(const Image& input, const Image* prediction)
{
    PaddedPlane plane;
    plane.width = (input.width + 7) & ~7;
    plane.height = (input.height + 7) & ~7;
    plane.values.resize(static_cast<size_t>(plane.width) * plane.height);
    for (int y = 0; y < plane.height; y++)
    {
        const int sy = std::min(y, input.height - 1);
        for (int x = 0; x < plane.width; x++)
        {
            const int sx = std::min(x, input.width - 1);
            const double base = prediction ? prediction->at(sx, sy) : 128.0;
            plane.values[static_cast<size_t>(y) * plane.width + x] = input.at(sx, sy) - base;
        }
    }
    return plane;
}

void validateLayerConfig(const LayerConfig& config)
{
    if (config.qp < 0 || config.qp > 51)
        throw std::domain_error("encodeLayer: qp outside [0,51]");
    if (config.codedWidth < 8 || config.codedHeight < 8)
        throw std::domain_error("encodeLayer: coded size must be at least 8x8");
}

} // namespace

EncodedLayer encodeLayer(const Image& input, const LayerConfig& config,
                         const Image* predictor, int workers)
{
    validateLayerConfig(config);
    if (input.width < 8 || input.height < 8)
        throw std::domain_error("encodeLayer: image smaller than 8x8");
    if (input.width != config.codedWidth || input.height != config.codedHeight)
        throw std::domain_error("encodeLayer: input does not match the coded size");

    Image prediction;
    const Image* predictionPtr = nullptr;
    if (predictor)
    {
        if (predictor->width > input.width || predictor->height > input.height)
            throw std::domain_error("encodeLayer: predictor larger than the input");
        prediction = bilinearUpsample(*predictor, input.width, input.height);
        predictionPtr = &prediction;
    }

    const QuantMatrix qm = qmForLayer(config);
    const PaddedPlane residual = padResidual(input, predictionPtr);
    const int blocksX = residual.width / 8;
    const int blocksY = residual.height / 8;
    const int blockCount = blocksX * blocksY;

    std::vector<int32_t> levels(static_cast<size_t>(blockCount) * 64);
    std::vector<double> reconPlane(residual.values.size());

    auto processBlocks = [&](int begin, int end) {
        for (int blockIndex = begin; blockIndex < end; blockIndex++)
        {
            const int bx = (blockIndex % blocksX) * 8;
            const int by = (blockIndex / blocksX) * 8;
            Block spatial{};
            for (int y = 0; y < 8; y++)
                for (int x = 0; x < 8; x++)
                    spatial[y * 8 + x] = residual.at(bx + x, by + y);
            const Block coeffs = forwardDct(spatial);
            const std::array<int32_t, 64> blockLevels = quantizeBlock(coeffs, qm, config.qp);
            std::copy(blockLevels.begin(), blockLevels.end(),
                      levels.begin() + static_cast<size_t>(blockIndex) * 64);
            const Block recon = inverseDct(dequantizeBlock(blockLevels, qm, config.qp));
            for (int y = 0; y < 8; y++)
                for (int x = 0; x < 8; x++)
                    reconPlane[static_cast<size_t>(by + y) * residual.width + bx + x] =
                        recon[y * 8 + x];
        }
    };

    const int workerCount = std::min(resolveWorkerCount(workers), std::max(blockCount, 1));
    if (workerCount <= 1)
    {
        processBlocks(0, blockCount);
    }
    else
    {
        // Static contiguous chunks; blocks are independent and write disjoint
        // ranges, and all aggregation below runs in block order.
        std::vector<std::thread> pool;
        pool.reserve(workerCount);
        const int chunk = (blockCount + workerCount - 1) / workerCount;
        for (int w = 0; w < workerCount; w++)
        {
            const int begin = w * chunk;
            const int end = std::min(begin + chunk, blockCount);
            if (begin < end)
                pool.emplace_back(processBlocks, begin, end);
        }
        for (std::thread& t : pool)
            t.join();
    }

    Image reconstruction(input.width, input.height);
    for (int y = 0; y < input.height; y++)
    {
        for (int x = 0; x < input.width; x++)
        {
            const double base = predictionPtr ? predictionPtr->at(x, y) : 128.0;
            const double value = reconPlane[static_cast<size_t>(y) * residual.width + x] + base;
            reconstruction.set(x, y, static_cast<uint8_t>(std::clamp(std::lround(value), 0l, 255l)));
        }
    }

    LevelHistogram histogram;
    for (const int32_t level : levels)
        histogram[level]++;

    const ScalingListPayload payload{
        {{ScalingList{qm.kind(), qm}}}};
    const size_t payloadBits = encodeScalingLists(payload).size() * 8;

    EncodedLayer encoded{std::move(reconstruction), LayerResult{}};
    encoded.result.label = config.label;
    encoded.result.qp = config.qp;
    encoded.result.qmSource = config.qmSource;
    encoded.result.psnrDb = psnr(input, encoded.reconstruction);
    encoded.result.rateBits = rateEstimate(histogram, payloadBits);
    encoded.result.nonzeroLevels = 0;
    for (const auto& [level, count] : histogram)
        if (level != 0)
            encoded.result.nonzeroLevels += count;
    encoded.result.qm = qm;
    return encoded;
}

SimReport runPipeline(const Image& source, std::span<const LayerConfig> layers, int workers,
                      std::vector<Image>* reconstructions)
{
    if (layers.empty())
        throw std::domain_error("runPipeline: at least one layer required");
    if (layers.front().label != LayerLabel::BL)
        throw std::domain_error("runPipeline: first layer must be the base layer");
    for (size_t i = 1; i < layers.size(); i++)
    {
        if (layers[i].label == LayerLabel::BL)
            throw std::domain_error("runPipeline: base layer must come first");
        if (layers[i].codedWidth < layers[i - 1].codedWidth ||
            layers[i].codedHeight < layers[i - 1].codedHeight)
            throw std::domain_error("runPipeline: layer coded sizes must be non-decreasing");
    }
    if (layers.back().codedWidth > source.width || layers.back().codedHeight > source.height)
        throw std::domain_error("runPipeline: coded size exceeds the source");

    SimReport report;
    Image previous;
    for (size_t i = 0; i < layers.size(); i++)
    {
        const LayerConfig& config = layers[i];
        const Image ground =
            (config.codedWidth == source.width && config.codedHeight == source.height)
                ? source
                : boxDownsample(source, config.codedWidth, config.codedHeight);
        EncodedLayer encoded =
            encodeLayer(ground, config, i == 0 ? nullptr : &previous, workers);
        encoded.result.layerIndex = static_cast<int>(i);
        report.layers.push_back(encoded.result);
        if (reconstructions)
            reconstructions->push_back(encoded.reconstruction);
        previous = std::move(encoded.reconstruction);
    }
    return report;
}

std::string reportToCsv(const SimReport& report)
{
    std::string csv = "layer,label,qp,qm_source,psnr_db,rate_bits\n";
    char line[160];
    for (const LayerResult& r : report.layers)
    {
        std::snprintf(line, sizeof(line), "%d,%s,%d,%s,%.4f,%.2f\n", r.layerIndex,
                      layerLabelName(r.label), r.qp, qmSourceName(r.qmSource), r.psnrDb,
                      r.rateBits);
        csv += line;
    }
    return csv;
}

} // namespace aqm
