// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/synth/render.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>

namespace lfd {

namespace {

/// A surface texture materialized on a padded canvas so every view's shear
/// stays inside it; sampled bilinearly at continuous coordinates.
class Canvas {
public:
    Canvas(const TextureSpec& tex, int width, int height, int pad, std::uint64_t seed)
        : pad_(pad), w_(width + 2 * pad), h_(height + 2 * pad), data_(3 * w_ * h_) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (int y = 0; y < h_; ++y) {
            for (int x = 0; x < w_; ++x) {
                double* px = &data_[3 * (static_cast<std::size_t>(y) * w_ + x)];
                switch (tex.kind) {
                    case TextureSpec::Kind::Solid:
                        for (int c = 0; c < 3; ++c) px[c] = tex.base[c];
                        break;
                    case TextureSpec::Kind::Noise:
                        for (int c = 0; c < 3; ++c)
                            px[c] = std::clamp(tex.base[c] + tex.noise_amp * uni(rng), 0.0, 1.0);
                        break;
                    case TextureSpec::Kind::Checker: {
                        const int cxi = static_cast<int>(
                            std::floor((x - pad_) / tex.checker_cell));
                        const int cyi = static_cast<int>(
                            std::floor((y - pad_) / tex.checker_cell));
                        const bool alt = ((cxi + cyi) & 1) != 0;
                        for (int c = 0; c < 3; ++c) px[c] = alt ? tex.alt[c] : tex.base[c];
                        break;
                    }
                }
            }
        }
    }

    /// Bilinear sample at center-view coordinates; callers must stay within
    /// the padded extent.
    void sample(double x, double y, double* out) const {
        const double xf = std::clamp(x + pad_, 0.0, w_ - 1.0);
        const double yf = std::clamp(y + pad_, 0.0, h_ - 1.0);
        int x0 = static_cast<int>(std::floor(xf));
        int y0 = static_cast<int>(std::floor(yf));
        double fx = xf - x0;
        double fy = yf - y0;
        if (x0 == w_ - 1) { x0 -= 1; fx = 1.0; }
        if (y0 == h_ - 1) { y0 -= 1; fy = 1.0; }
        const double* p00 = &data_[3 * (static_cast<std::size_t>(y0) * w_ + x0)];
        const double* p10 = p00 + 3;
        const double* p01 = p00 + 3 * static_cast<std::size_t>(w_);
        const double* p11 = p01 + 3;
        if (fx == 0.0 && fy == 0.0) {
            for (int c = 0; c < 3; ++c) out[c] = p00[c];
            return;
        }
        const double w00 = (1 - fx) * (1 - fy), w10 = fx * (1 - fy);
        const double w01 = (1 - fx) * fy, w11 = fx * fy;
        for (int c = 0; c < 3; ++c)
            out[c] = w00 * p00[c] + w10 * p10[c] + w01 * p01[c] + w11 * p11[c];
    }

private:
    int pad_;
    int w_, h_;
    std::vector<double> data_;
};

/// Occluders sorted far-to-near; painting order and the z rule the oracle
/// uses must agree (ties broken by declaration order, later wins).
std::vector<int> paint_order(const SceneSpec& scene) {
    std::vector<int> order(scene.occluders.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return scene.occluders[a].disparity < scene.occluders[b].disparity;
    });
    return order;
}

}  // namespace

double surface_disparity(const SceneSpec& scene, double x, double y) {
    // Nearest covering surface; equal-disparity ties go to the later
    // occluder, matching the painter.
    double d = scene.background_disparity;
    bool covered = false;
    for (const Occluder& occ : scene.occluders) {
        if (!point_in_polygon(occ.polygon, x, y)) continue;
        if (!covered || occ.disparity >= d) {
            d = occ.disparity;
            covered = true;
        }
    }
    return d;
}

bool oracle_visibility(const SceneSpec& scene, int x, int y, int u, int v) {
    const double d_p = surface_disparity(scene, x, y);
    for (const Occluder& occ : scene.occluders) {
        if (!(occ.disparity > d_p)) continue;
        const double shift = occ.disparity - d_p;
        if (point_in_polygon(occ.polygon, x - u * shift, y - v * shift)) return false;
    }
    return true;
}

BinaryMap disparity_boundary(const DisparityMap& disparity, double eps) {
    const int w = disparity.width(), h = disparity.height();
    BinaryMap out(w, h, 0);
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int k = 0; k < 4; ++k) {
                const int nx = x + dx[k], ny = y + dy[k];
                if (!disparity.in_bounds(nx, ny)) continue;
                if (std::abs(disparity(x, y) - disparity(nx, ny)) >= eps) {
                    out(x, y) = 1;
                    break;
                }
            }
        }
    }
    return out;
}

RenderedScene render(const SceneSpec& scene) {
    scene.validate();
    const int w = scene.width, h = scene.height;
    const int r = scene.n_uv / 2;
    const int pad = static_cast<int>(std::ceil(
                        r * std::max(1.0, std::abs(scene.max_disparity()) +
                                              std::abs(scene.background_disparity)))) +
                    4;

    Canvas bg(scene.background_texture, w, h, pad, scene.seed * 1000003ULL + 17ULL);
    std::vector<Canvas> occ_canvas;
    occ_canvas.reserve(scene.occluders.size());
    for (std::size_t i = 0; i < scene.occluders.size(); ++i)
        occ_canvas.emplace_back(scene.occluders[i].texture, w, h, pad,
                                scene.seed * 1000003ULL + 31ULL * (i + 1));

    const std::vector<int> order = paint_order(scene);

    RenderedScene out{LightField(scene.n_uv, w, h, 3),
                      GroundTruth{DisparityMap(w, h), ViewMaskGrid(scene.n_uv, w, h, false),
                                  BinaryMap(w, h), 0}};

    double px[3];
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u) {
            std::mt19937_64 noise_rng(scene.seed ^ (0x9e3779b97f4a7c15ULL *
                                                    (static_cast<std::uint64_t>(v + r) *
                                                         scene.n_uv +
                                                     (u + r) + 1)));
            std::normal_distribution<double> gauss(0.0, scene.view_noise_sigma);
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    // Painter: background first, then occluders far to near.
                    // A surface at disparity d appears at q + (u,v)*d, so the
                    // surface point under view pixel (x,y) is (x,y) - (u,v)*d.
                    const double bx = x - u * scene.background_disparity;
                    const double by = y - v * scene.background_disparity;
                    bg.sample(bx, by, px);
                    for (int idx : order) {
                        const Occluder& occ = scene.occluders[idx];
                        const double ox = x - u * occ.disparity;
                        const double oy = y - v * occ.disparity;
                        if (point_in_polygon(occ.polygon, ox, oy))
                            occ_canvas[idx].sample(ox, oy, px);
                    }
                    if (scene.view_noise_sigma > 0.0)
                        for (double& c : std::span(px, 3)) c = std::clamp(c + gauss(noise_rng), 0.0, 1.0);
                    for (int c = 0; c < 3; ++c) out.lf.sample(u, v, x, y, c) = px[c];
                }
            }
        }
    }

    GroundTruth& gt = out.gt;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) gt.disparity(x, y) = surface_disparity(scene, x, y);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int v = -r; v <= r; ++v)
                for (int u = -r; u <= r; ++u)
                    gt.visibility.set(x, y, u, v, oracle_visibility(scene, x, y, u, v));
    gt.occlusion_boundary = disparity_boundary(gt.disparity, 1e-12);
    gt.max_projection_radius =
        scene.occluders.empty()
            ? 0
            : std::max(1, static_cast<int>(std::ceil(r * scene.max_disparity_gap() - 1e-9)));
    return out;
}

}  // namespace lfd
