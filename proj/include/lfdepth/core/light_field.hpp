// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <cstdint>
#include <vector>

#include "lfdepth/core/image.hpp"

namespace lfd {

/// Dense 4-D light field: an n_uv x n_uv grid of same-sized views.
///
/// Samples are indexed (v, u, y, x, c). Angular coordinates are signed
/// offsets from the center view, u,v in [-radius(), +radius()], so the
/// center view is (0,0). n_uv must be odd.
///
/// A per-sample validity flag tracks samples that fell outside the source
/// image during refocusing; fields straight from disk are fully valid.
class LightField {
public:
    LightField() = default;
    LightField(int n_uv, int width, int height, int channels);

    int n_uv() const { return n_uv_; }
    int radius() const { return n_uv_ / 2; }
    int width() const { return w_; }
    int height() const { return h_; }
    int channels() const { return c_; }

    bool angular_in_bounds(int u, int v) const {
        const int r = radius();
        return u >= -r && u <= r && v >= -r && v <= r;
    }
    bool spatial_in_bounds(int x, int y) const { return x >= 0 && x < w_ && y >= 0 && y < h_; }

    /// u,v are signed angular offsets.
    double sample(int u, int v, int x, int y, int ch) const {
        return data_[sample_index(u, v, x, y) * c_ + ch];
    }
    double& sample(int u, int v, int x, int y, int ch) {
        return data_[sample_index(u, v, x, y) * c_ + ch];
    }

    bool sample_valid(int u, int v, int x, int y) const {
        if (valid_.empty()) return true;
        return valid_[sample_index(u, v, x, y)] != 0;
    }
    void set_sample_valid(int u, int v, int x, int y, bool ok) {
        if (valid_.empty()) valid_.assign(num_samples(), 1);
        valid_[sample_index(u, v, x, y)] = ok ? 1 : 0;
    }
    bool fully_valid() const;

    /// Copy of one view as an Image; (0,0) is the center view.
    Image view(int u, int v) const;
    void set_view(int u, int v, const Image& img);

    /// Bilinear lookup in view (u,v) at continuous coordinates (xf, yf).
    /// Writes channels() values to out. Returns false (out untouched) when
    /// the lookup needs data outside the image or hits an invalid sample.
    bool bilinear(int u, int v, double xf, double yf, double* out) const;

    std::size_t num_samples() const {
        return static_cast<std::size_t>(n_uv_) * n_uv_ * w_ * h_;
    }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    bool operator==(const LightField&) const = default;

private:
    std::size_t sample_index(int u, int v, int x, int y) const {
        const int r = radius();
        return ((static_cast<std::size_t>(v + r) * n_uv_ + (u + r)) * h_ + y) * w_ + x;
    }

    int n_uv_ = 0;
    int w_ = 0;
    int h_ = 0;
    int c_ = 0;
    std::vector<double> data_;
    std::vector<std::uint8_t> valid_;  // per (v,u,y,x); empty = all valid
};

/// N x N angular slice of a (refocused) light field at one spatial location.
struct AngularPatch {
    int n_uv = 0;
    int channels = 0;
    std::vector<double> values;        // (v,u,c), v-major
    std::vector<std::uint8_t> valid;   // per (v,u)

    double value(int u, int v, int ch) const {
        const int r = n_uv / 2;
        return values[(static_cast<std::size_t>(v + r) * n_uv + (u + r)) * channels + ch];
    }
    bool is_valid(int u, int v) const {
        const int r = n_uv / 2;
        return valid[static_cast<std::size_t>(v + r) * n_uv + (u + r)] != 0;
    }
    /// Color of the center view, A(0,0).
    double center_value(int ch) const { return value(0, 0, ch); }
};

/// Shear refocus: output sample (v,u,y,x) is the bilinear lookup of the
/// input at (x + u*d, y + v*d) in view (u,v). Out-of-bounds lookups are
/// flagged invalid. d = 0 returns the input bit-identically.
LightField refocus(const LightField& lf, double d);

/// Angular slice of lf at pixel p; p must be in bounds.
AngularPatch angular_patch(const LightField& lf, int x, int y);

}  // namespace lfd
