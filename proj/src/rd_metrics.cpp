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

#include "aqm/rd_metrics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace aqm {

double psnr(const Image& reference, const Image& test)
{
    if (reference.width != test.width || reference.height != test.height)
        throw std::domain_error("psnr: image dimensions differ");
    if (reference.samples.empty())
        throw std::domain_error("psnr: empty image");
    uint64_t sse = 0;
    for (size_t i = 0; i < reference.samples.size(); i++)
    {
        const int64_t diff = static_cast<int64_t>(reference.samples[i]) - test.samples[i];
        sse += static_cast<uint64_t>(diff * diff);
    }
    if (sse == 0)
        return kPsnrLosslessCap;
    const double mse = static_cast<double>(sse) / static_cast<double>(reference.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

void RdCurve::validate() const
{
    if (points.size() < 4)
        throw std::domain_error("RdCurve: at least 4 points required");
    for (size_t i = 0; i < points.size(); i++)
    {
        if (!(points[i].rateBits > 0.0))
            throw std::domain_error("RdCurve: rates must be positive");
        if (i > 0)
        {
            if (!(points[i].rateBits > points[i - 1].rateBits))
                throw std::domain_error("RdCurve: rates must be strictly increasing");
            if (!(points[i].psnrDb > points[i - 1].psnrDb))
                throw std::domain_error("RdCurve: psnr must be strictly increasing with rate");
        }
    }
}

namespace {

// Least-squares cubic fit of y over x, centered at the mean of x for
// conditioning. Returns coefficients of 1, t, t^2, t^3 with t = x - center.
struct CubicFit
{
    double center = 0.0;
    std::array<double, 4> coeff{};

    double integral(double lo, double hi) const
    {
        auto antiderivative = [&](double x) {
            const double t = x - center;
            return coeff[0] * t + coeff[1] * t * t / 2.0 + coeff[2] * t * t * t / 3.0 +
                   coeff[3] * t * t * t * t / 4.0;
        };
        return antiderivative(hi) - antiderivative(lo);
    }
};

CubicFit fitCubic(const std::vector<RdPoint>& points)
{
    double center = 0.0;
    for (const RdPoint& p : points)
        center += p.psnrDb;
    center /= static_cast<double>(points.size());

    // Normal equations for the degree-3 polynomial in t = psnr - center.
    double sx[7] = {0, 0, 0, 0, 0, 0, 0};
    double sy[4] = {0, 0, 0, 0};
    for (const RdPoint& p : points)
    {
        const double t = p.psnrDb - center;
        const double y = std::log10(p.rateBits);
        double tk = 1.0;
        for (int k = 0; k <= 6; k++)
        {
            sx[k] += tk;
            if (k <= 3)
                sy[k] += y * tk;
            tk *= t;
        }
    }
    double m[4][5];
    for (int r = 0; r < 4; r++)
    {
        for (int c = 0; c < 4; c++)
            m[r][c] = sx[r + c];
        m[r][4] = sy[r];
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < 4; col++)
    {
        int pivot = col;
        for (int r = col + 1; r < 4; r++)
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col]))
                pivot = r;
        if (std::fabs(m[pivot][col]) < 1e-12)
            throw std::domain_error("bdRate: degenerate curve, cubic fit failed");
        if (pivot != col)
            for (int c = 0; c <= 4; c++)
                std::swap(m[pivot][c], m[col][c]);
        for (int r = 0; r < 4; r++)
        {
            if (r == col)
                continue;
            const double factor = m[r][col] / m[col][col];
            for (int c = col; c <= 4; c++)
                m[r][c] -= factor * m[col][c];
        }
    }
    CubicFit fit;
    fit.center = center;
    for (int r = 0; r < 4; r++)
        fit.coeff[r] = m[r][4] / m[r][r];
    return fit;
}

} // namespace

double bdRate(const RdCurve& anchor, const RdCurve& test)
{
    anchor.validate();
    test.validate();

    const double lo = std::max(anchor.points.front().psnrDb, test.points.front().psnrDb);
    const double hi = std::min(anchor.points.back().psnrDb, test.points.back().psnrDb);
    if (!(hi > lo))
        throw std::domain_error("bdRate: psnr ranges do not overlap");

    const CubicFit anchorFit = fitCubic(anchor.points);
    const CubicFit testFit = fitCubic(test.points);
    const double meanLogDiff =
        (testFit.integral(lo, hi) - anchorFit.integral(lo, hi)) / (hi - lo);
    return 100.0 * (std::pow(10.0, meanLogDiff) - 1.0);
}

} // namespace aqm
