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

#include "aqm/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "aqm/errors.hpp"

namespace aqm {

namespace {

uint8_t clampToByte(double v)
{
    return static_cast<uint8_t>(std::clamp(std::lround(v), 0l, 255l));
}

int nextHeaderInt(std::istream& in, const std::filesystem::path& path)
{
    // Skip whitespace and '#' comments between header tokens.
    for (;;)
    {
        const int c = in.peek();
        if (c == '#')
        {
            std::string line;
            std::getline(in, line);
        }
        else if (std::isspace(c))
        {
            in.get();
        }
        else
        {
            break;
        }
    }
    int value = 0;
    if (!(in >> value))
        throw ParseError("readPgm: bad header in " + path.string());
    return value;
}

} // namespace

Image readPgm(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("readPgm: cannot open " + path.string());
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5')
        throw ParseError("readPgm: not a binary PGM (P5): " + path.string());

    const int width = nextHeaderInt(in, path);
    const int height = nextHeaderInt(in, path);
    const int maxval = nextHeaderInt(in, path);
    if (width < 1 || height < 1)
        throw ParseError("readPgm: bad dimensions in " + path.string());
    if (maxval != 255)
        throw ParseError("readPgm: only maxval 255 supported, got " + std::to_string(maxval));
    in.get(); // single whitespace after maxval

    Image image(width, height);
    in.read(reinterpret_cast<char*>(image.samples.data()),
            static_cast<std::streamsize>(image.samples.size()));
    if (in.gcount() != static_cast<std::streamsize>(image.samples.size()))
        throw ParseError("readPgm: truncated pixel data in " + path.string());
    return image;
}

void writePgm(const std::filesystem::path& path, const Image& image)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("writePgm: cannot open " + path.string());
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples.data()),
              static_cast<std::streamsize>(image.samples.size()));
    if (!out)
        throw std::runtime_error("writePgm: write failed for " + path.string());
}

Image boxDownsample(const Image& source, int targetWidth, int targetHeight)
{
    if (targetWidth < 1 || targetHeight < 1)
        throw std::domain_error("boxDownsample: target dimensions must be positive");
    if (source.width % targetWidth != 0 || source.height % targetHeight != 0)
        throw std::domain_error("boxDownsample: source dimensions must be multiples of the target");
    const int fx = source.width / targetWidth;
    const int fy = source.height / targetHeight;
    const int area = fx * fy;
    Image out(targetWidth, targetHeight);
    for (int y = 0; y < targetHeight; y++)
    {
        for (int x = 0; x < targetWidth; x++)
        {
            uint32_t sum = 0;
            for (int dy = 0; dy < fy; dy++)
                for (int dx = 0; dx < fx; dx++)
                    sum += source.at(x * fx + dx, y * fy + dy);
            out.set(x, y, static_cast<uint8_t>((sum + area / 2) / area));
        }
    }
    return out;
}

Image bilinearUpsample(const Image& source, int targetWidth, int targetHeight)
{
    if (targetWidth < source.width || targetHeight < source.height)
        throw std::domain_error("bilinearUpsample: target must not be smaller than the source");
    if (targetWidth == source.width && targetHeight == source.height)
        return source;
    Image out(targetWidth, targetHeight);
    const double sx = static_cast<double>(source.width) / targetWidth;
    const double sy = static_cast<double>(source.height) / targetHeight;
    for (int y = 0; y < targetHeight; y++)
    {
        // Half-pel centered mapping.
        const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, source.height - 1.0);
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, source.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < targetWidth; x++)
        {
            const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, source.width - 1.0);
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, source.width - 1);
            const double wx = fx - x0;
            const double top = (1.0 - wx) * source.at(x0, y0) + wx * source.at(x1, y0);
            const double bottom = (1.0 - wx) * source.at(x0, y1) + wx * source.at(x1, y1);
            out.set(x, y, clampToByte((1.0 - wy) * top + wy * bottom));
        }
    }
    return out;
}

const char* corpusName(CorpusKind kind)
{
    switch (kind)
    {
    case CorpusKind::ZonePlate: return "zoneplate";
    case CorpusKind::DiagonalGradient: return "gradient";
    case CorpusKind::BandLimitedNoise: return "noise";
    case CorpusKind::Checkerboard: return "checkerboard";
    }
    return "unknown";
}

std::optional<CorpusKind> parseCorpusName(std::string_view name)
{
    for (CorpusKind kind : kAllCorpusKinds)
        if (name == corpusName(kind))
            return kind;
    return std::nullopt;
}

namespace {

Image makeZonePlate(int width, int height)
{
    Image image(width, height);
    const double cx = width / 2.0;
    const double cy = height / 2.0;
    // Radial chirp; instantaneous frequency stays below Nyquist everywhere.
    const double k = M_PI / (2.0 * std::max(width, height));
    for (int y = 0; y < height; y++)
    {
        for (int x = 0; x < width; x++)
        {
            const double dx = x - cx;
            const double dy = y - cy;
            image.set(x, y, clampToByte(127.5 + 127.5 * std::cos(k * (dx * dx + dy * dy))));
        }
    }
    return image;
}

Image makeDiagonalGradient(int width, int height)
{
    Image image(width, height);
    const double span = std::max(1, width + height - 2);
    for (int y = 0; y < height; y++)
        for (int x = 0; x < width; x++)
            image.set(x, y, clampToByte(255.0 * (x + y) / span));
    return image;
}

Image makeBandLimitedNoise(int width, int height, uint64_t seed)
{
    // Raw engine output only: distributions are not pinned across standard
    // library implementations, the mt19937_64 sequence is.
    std::mt19937_64 rng(seed);
    Image noise(width, height);
    for (auto& s : noise.samples)
        s = static_cast<uint8_t>(rng() & 0xff);

    // Two 3x3 box passes tame the spectrum while leaving mid/high energy.
    Image blurred = noise;
    for (int pass = 0; pass < 2; pass++)
    {
        Image next(width, height);
        for (int y = 0; y < height; y++)
        {
            for (int x = 0; x < width; x++)
            {
                uint32_t sum = 0;
                for (int dy = -1; dy <= 1; dy++)
                {
                    for (int dx = -1; dx <= 1; dx++)
                    {
                        const int xx = std::clamp(x + dx, 0, width - 1);
                        const int yy = std::clamp(y + dy, 0, height - 1);
                        sum += blurred.at(xx, yy);
                    }
                }
                next.set(x, y, static_cast<uint8_t>((sum + 4) / 9));
            }
        }
        blurred = std::move(next);
    }
    return blurred;
}

Image makeCheckerboard(int width, int height)
{
    // Cell edges land at varying phases inside 8x8 blocks, spreading energy
    // across the spectrum; a 1-2px cell would park everything at Nyquist and
    // vanish under downsampling.
    constexpr int kCell = 12;
    Image image(width, height);
    for (int y = 0; y < height; y++)
        for (int x = 0; x < width; x++)
            image.set(x, y, ((x / kCell + y / kCell) & 1) ? 216 : 40);
    return image;
}

} // namespace

Image makeCorpusImage(CorpusKind kind, int width, int height, uint64_t seed)
{
    if (width < 8 || height < 8)
        throw std::domain_error("makeCorpusImage: dimensions must be at least 8");
    switch (kind)
    {
    case CorpusKind::ZonePlate: return makeZonePlate(width, height);
    case CorpusKind::DiagonalGradient: return makeDiagonalGradient(width, height);
    case CorpusKind::BandLimitedNoise: return makeBandLimitedNoise(width, height, seed);
    case CorpusKind::Checkerboard: return makeCheckerboard(width, height);
    }
    throw std::domain_error("makeCorpusImage: unknown corpus kind");
}

} // namespace aqm
