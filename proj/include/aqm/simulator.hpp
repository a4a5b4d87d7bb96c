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

#ifndef AQM_SIMULATOR_HPP
#define AQM_SIMULATOR_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "aqm/display_adapt.hpp"
#include "aqm/image.hpp"
#include "aqm/quant_matrix.hpp"

namespace aqm {

enum class LayerLabel
{
    BL,
    EL1,
    EL2
};

enum class QmSource
{
    Default,
    Adaptive,
    Flat
};

const char* layerLabelName(LayerLabel label);
const char* qmSourceName(QmSource source);
std::optional<LayerLabel> parseLayerLabel(std::string_view name);
std::optional<QmSource> parseQmSource(std::string_view name);

struct LayerConfig
{
    LayerLabel label = LayerLabel::BL;
    int codedWidth = 0;
    int codedHeight = 0;
    DisplayGeometry geometry; // drives the adaptive matrix
    int qp = 32;              // in [0,51]
    QmSource qmSource = QmSource::Default;
};

/// The 8x8 matrix a layer quantizes with, resolved from its qmSource.
QuantMatrix qmForLayer(const LayerConfig& config);

struct LayerResult
{
    int layerIndex = 0;
    LayerLabel label = LayerLabel::BL;
    int qp = 0;
    QmSource qmSource = QmSource::Default;
    double psnrDb = 0.0;
    double rateBits = 0.0;
    uint64_t nonzeroLevels = 0;
    QuantMatrix qm{8, QmKind::Intra};
};

struct SimReport
{
    std::vector<LayerResult> layers;
};

// 8x8 block as 64 row-major doubles.
using Block = std::array<double, 64>;

/// Orthonormal 2D DCT-II. forwardDct/inverseDct are exact inverses and
/// preserve energy.
Block forwardDct(const Block& spatial);
Block inverseDct(const Block& coeffs);

/// Forward transform of a raw 8-bit block, centered by -128.
Block blockDct(const std::array<uint8_t, 64>& samples);

/// Quantization step for one weighting entry: 2^((qp-4)/6) * entry / 16.
double quantStep(int qp, int qmEntry);

/// Uniform quantizer with nearest rounding (no deadzone).
std::array<int32_t, 64> quantizeBlock(const Block& coeffs, const QuantMatrix& qm, int qp);
Block dequantizeBlock(const std::array<int32_t, 64>& levels, const QuantMatrix& qm, int qp);

using LevelHistogram = std::map<int32_t, uint64_t>;

/// Entropy-proxy rate: zero-order entropy of the level alphabet times the
/// symbol count, plus one sign bit per nonzero level, plus the scaling-list
/// payload bits.
double rateEstimate(const LevelHistogram& histogram, size_t payloadBits);

struct EncodedLayer
{
    Image reconstruction;
    LayerResult result;
};

/// Transforms, quantizes and reconstructs one layer. A predictor, when given,
/// is upsampled to the input size and subtracted; otherwise samples are
/// centered by -128. Edge blocks are padded by edge replication. PSNR is
/// measured against the input.
EncodedLayer encodeLayer(const Image& input, const LayerConfig& config,
                         const Image* predictor = nullptr, int workers = 0);

/// Base layer first, each enhancement layer predicted from the previous
/// layer's reconstruction. Per-layer ground truth is the source downsampled
/// to the layer's coded size. When reconstructions is non-null it receives
/// one image per layer.
SimReport runPipeline(const Image& source, std::span<const LayerConfig> layers, int workers = 0,
                      std::vector<Image>* reconstructions = nullptr);

/// CSV with header layer,label,qp,qm_source,psnr_db,rate_bits.
std::string reportToCsv(const SimReport& report);

/// Resolves a worker count: explicit value wins, then AQM_THREADS, then
/// hardware concurrency.
int resolveWorkerCount(int requested);

} // namespace aqm

#endif
