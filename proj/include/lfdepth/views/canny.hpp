// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include "lfdepth/core/image.hpp"

namespace lfd {

/// Hysteresis thresholds are picked from percentiles of the gradient
/// magnitude distribution, so the detector adapts to scene contrast.
struct CannyParams {
    double sigma = 1.4;
    double low_percentile = 70.0;
    double high_percentile = 90.0;
};

/// Classic Canny: Gaussian smoothing, Sobel gradients, non-maximum
/// suppression, percentile-derived double thresholds, 8-connected
/// hysteresis. A constant image yields an all-zero map.
BinaryMap detect_edges(const Image& image, const CannyParams& params = {});

}  // namespace lfd
