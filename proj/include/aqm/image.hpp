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

#ifndef AQM_IMAGE_HPP
#define AQM_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace aqm {

/// 8-bit grayscale image, row-major.
struct Image
{
    int width = 0;
    int height = 0;
    std::vector<uint8_t> samples;

    Image() = default;
    Image(int w, int h, uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<size_t>(w) * h, fill) {}

    uint8_t at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }
    void set(int x, int y, uint8_t v) { samples[static_cast<size_t>(y) * width + x] = v; }
};

/// Binary PGM (P5), maxval 255. Header comments are skipped.
Image readPgm(const std::filesystem::path& path);
void writePgm(const std::filesystem::path& path, const Image& image);

/// Area average over an integer downscale factor per axis. The source
/// dimensions must be exact multiples of the target dimensions.
Image boxDownsample(const Image& source, int targetWidth, int targetHeight);

/// Bilinear interpolation to an arbitrary (not smaller) size.
Image bilinearUpsample(const Image& source, int targetWidth, int targetHeight);

enum class CorpusKind
{
    ZonePlate,
    DiagonalGradient,
    BandLimitedNoise,
    Checkerboard
};

inline constexpr CorpusKind kAllCorpusKinds[] = {
    CorpusKind::ZonePlate, CorpusKind::DiagonalGradient,
    CorpusKind::BandLimitedNoise, CorpusKind::Checkerboard};

const char* corpusName(CorpusKind kind);
std::optional<CorpusKind> parseCorpusName(std::string_view name);

/// Deterministic synthetic test image. The seed only affects the noise
/// generator; the other kinds are closed-form.
Image makeCorpusImage(CorpusKind kind, int width, int height, uint64_t seed);

} // namespace aqm

#endif
