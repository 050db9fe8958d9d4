// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/core/light_field.hpp"

#include <algorithm>
#include <cmath>

namespace lfd {

LightField::LightField(int n_uv, int width, int height, int channels)
    : n_uv_(n_uv), w_(width), h_(height), c_(channels) {
    LFD_CHECK_MSG(n_uv >= 1 && n_uv % 2 == 1, "angular resolution must be odd, got " << n_uv);
    LFD_CHECK(width > 0 && height > 0);
    LFD_CHECK(channels == 1 || channels == 3);
    data_.assign(num_samples() * channels, 0.0);
}

bool LightField::fully_valid() const {
    if (valid_.empty()) return true;
    return std::all_of(valid_.begin(), valid_.end(), [](std::uint8_t v) { return v != 0; });
}

Image LightField::view(int u, int v) const {
    LFD_CHECK(angular_in_bounds(u, v));
    Image img(w_, h_, c_);
    for (int y = 0; y < h_; ++y)
        for (int x = 0; x < w_; ++x)
            for (int ch = 0; ch < c_; ++ch) img(x, y, ch) = sample(u, v, x, y, ch);
    return img;
}

void LightField::set_view(int u, int v, const Image& img) {
    LFD_CHECK(angular_in_bounds(u, v));
    LFD_CHECK(img.width() == w_ && img.height() == h_ && img.channels() == c_);
    for (int y = 0; y < h_; ++y)
        for (int x = 0; x < w_; ++x)
            for (int ch = 0; ch < c_; ++ch) sample(u, v, x, y, ch) = img(x, y, ch);
}

bool LightField::bilinear(int u, int v, double xf, double yf, double* out) const {
    if (!(xf >= 0.0 && xf <= w_ - 1 && yf >= 0.0 && yf <= h_ - 1)) return false;
    int x0 = static_cast<int>(std::floor(xf));
    int y0 = static_cast<int>(std::floor(yf));
    double fx = xf - x0;
    double fy = yf - y0;
    // Exact grid hits take the sample directly, keeping integer shears and
    // d = 0 bit-identical.
    if (x0 == w_ - 1) { x0 -= 1; fx = 1.0; }
    if (y0 == h_ - 1) { y0 -= 1; fy = 1.0; }
    const int x1 = x0 + 1;
    const int y1 = y0 + 1;
    const double w00 = (1.0 - fx) * (1.0 - fy);
    const double w10 = fx * (1.0 - fy);
    const double w01 = (1.0 - fx) * fy;
    const double w11 = fx * fy;
    // Only corners that carry weight must be valid.
    if ((w00 > 0.0 && !sample_valid(u, v, x0, y0)) ||
        (w10 > 0.0 && !sample_valid(u, v, x1, y0)) ||
        (w01 > 0.0 && !sample_valid(u, v, x0, y1)) ||
        (w11 > 0.0 && !sample_valid(u, v, x1, y1)))
        return false;
    for (int ch = 0; ch < c_; ++ch) {
        if (fx == 0.0 && fy == 0.0) {
            out[ch] = sample(u, v, x0, y0, ch);
        } else {
            out[ch] = w00 * sample(u, v, x0, y0, ch) + w10 * sample(u, v, x1, y0, ch) +
                      w01 * sample(u, v, x0, y1, ch) + w11 * sample(u, v, x1, y1, ch);
        }
    }
    return true;
}

LightField refocus(const LightField& lf, double d) {
    LFD_CHECK_MSG(std::isfinite(d), "refocus disparity must be finite");
    if (d == 0.0) return lf;
    LightField out(lf.n_uv(), lf.width(), lf.height(), lf.channels());
    const int r = lf.radius();
    std::vector<double> px(lf.channels());
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u) {
            const double dx = u * d;
            const double dy = v * d;
            for (int y = 0; y < lf.height(); ++y) {
                for (int x = 0; x < lf.width(); ++x) {
                    if (lf.bilinear(u, v, x + dx, y + dy, px.data())) {
                        for (int ch = 0; ch < lf.channels(); ++ch)
                            out.sample(u, v, x, y, ch) = px[ch];
                    } else {
                        out.set_sample_valid(u, v, x, y, false);
                    }
                }
            }
        }
    }
    return out;
}

AngularPatch angular_patch(const LightField& lf, int x, int y) {
    LFD_CHECK_MSG(lf.spatial_in_bounds(x, y), "pixel (" << x << "," << y << ") out of bounds");
    AngularPatch p;
    p.n_uv = lf.n_uv();
    p.channels = lf.channels();
    p.values.resize(static_cast<std::size_t>(p.n_uv) * p.n_uv * p.channels);
    p.valid.resize(static_cast<std::size_t>(p.n_uv) * p.n_uv);
    const int r = lf.radius();
    std::size_t i = 0;
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u, ++i) {
            p.valid[i] = lf.sample_valid(u, v, x, y) ? 1 : 0;
            for (int ch = 0; ch < lf.channels(); ++ch)
                p.values[i * p.channels + ch] = lf.sample(u, v, x, y, ch);
        }
    }
    return p;
}

}  // namespace lfd
