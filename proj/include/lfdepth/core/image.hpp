// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <cstdint>
#include <vector>

#include "lfdepth/util/check.hpp"

namespace lfd {

/// Dense row-major 2-D grid of scalar values. Used for disparity maps, edge
/// maps, occlusion maps and per-pixel flags.
template <typename T>
class Grid2D {
public:
    Grid2D() = default;
    Grid2D(int width, int height, T fill = T{})
        : w_(width), h_(height), data_(static_cast<std::size_t>(width) * height, fill) {
        LFD_CHECK(width >= 0 && height >= 0);
    }

    int width() const { return w_; }
    int height() const { return h_; }
    bool empty() const { return data_.empty(); }
    std::size_t size() const { return data_.size(); }

    bool in_bounds(int x, int y) const { return x >= 0 && x < w_ && y >= 0 && y < h_; }

    T& operator()(int x, int y) { return data_[static_cast<std::size_t>(y) * w_ + x]; }
    const T& operator()(int x, int y) const {
        return data_[static_cast<std::size_t>(y) * w_ + x];
    }

    T& at(int x, int y) {
        LFD_CHECK_MSG(in_bounds(x, y), "grid index (" << x << "," << y << ")");
        return (*this)(x, y);
    }
    const T& at(int x, int y) const {
        LFD_CHECK_MSG(in_bounds(x, y), "grid index (" << x << "," << y << ")");
        return (*this)(x, y);
    }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Grid2D&) const = default;

private:
    int w_ = 0;
    int h_ = 0;
    std::vector<T> data_;
};

using DisparityMap = Grid2D<double>;
using BinaryMap = Grid2D<std::uint8_t>;

/// Interleaved multi-channel image with values nominally in [0,1].
/// channels is 1 (gray) or 3 (rgb).
class Image {
public:
    Image() = default;
    Image(int width, int height, int channels, double fill = 0.0)
        : w_(width), h_(height), c_(channels),
          data_(static_cast<std::size_t>(width) * height * channels, fill) {
        LFD_CHECK(width >= 0 && height >= 0);
        LFD_CHECK_MSG(channels == 1 || channels == 3, "channels must be 1 or 3");
    }

    int width() const { return w_; }
    int height() const { return h_; }
    int channels() const { return c_; }
    bool empty() const { return data_.empty(); }

    bool in_bounds(int x, int y) const { return x >= 0 && x < w_ && y >= 0 && y < h_; }

    double& operator()(int x, int y, int ch) {
        return data_[(static_cast<std::size_t>(y) * w_ + x) * c_ + ch];
    }
    double operator()(int x, int y, int ch) const {
        return data_[(static_cast<std::size_t>(y) * w_ + x) * c_ + ch];
    }

    /// Mean over channels; the gray reduction used by edge detection.
    double gray(int x, int y) const {
        double s = 0.0;
        for (int ch = 0; ch < c_; ++ch) s += (*this)(x, y, ch);
        return s / c_;
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Image&) const = default;

private:
    int w_ = 0;
    int h_ = 0;
    int c_ = 0;
    std::vector<double> data_;
};

}  // namespace lfd
