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

#ifndef AQM_RD_METRICS_HPP
#define AQM_RD_METRICS_HPP

#include <vector>

#include "aqm/image.hpp"

namespace aqm {

inline constexpr double kPsnrLosslessCap = 99.99;

/// 10*log10(255^2 / MSE), capped at 99.99 dB for identical images. Throws
/// std::domain_error on dimension mismatch.
double psnr(const Image& reference, const Image& test);

struct RdPoint
{
    double rateBits = 0.0;
    double psnrDb = 0.0;
};

/// Rate-distortion curve: at least 4 points, rates positive and strictly
/// increasing, PSNR strictly increasing with rate.
struct RdCurve
{
    std::vector<RdPoint> points;

    void validate() const; // throws std::domain_error on a violation
};

/// Average bitrate difference in percent at equal quality (classic variant:
/// cubic least-squares fit of log10(rate) over PSNR, integrated over the
/// overlapping PSNR interval). Negative means the test curve needs less rate.
/// Throws std::domain_error when curves are invalid or do not overlap.
double bdRate(const RdCurve& anchor, const RdCurve& test);

} // namespace aqm

#endif
