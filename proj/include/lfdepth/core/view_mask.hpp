// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <cstdint>
#include <vector>

#include "lfdepth/util/check.hpp"

namespace lfd {

/// Per-pixel boolean set over the angular grid: which views are treated as
/// un-occluded at each pixel. Backed by packed 64-bit words, bit index
/// (v_idx * n_uv + u_idx) with 0-based angular indices, so it serializes
/// directly to the packed bitmask file format.
///
/// Invariants: the center view is always set; no pixel has an empty set.
class ViewMaskGrid {
public:
    ViewMaskGrid() = default;
    ViewMaskGrid(int n_uv, int width, int height, bool fill = true)
        : n_uv_(n_uv), w_(width), h_(height),
          wpp_((n_uv * n_uv + 63) / 64),
          bits_(static_cast<std::size_t>(width) * height * wpp_, 0) {
        LFD_CHECK(n_uv >= 1 && n_uv % 2 == 1);
        if (fill) set_all_true();
    }

    int n_uv() const { return n_uv_; }
    int radius() const { return n_uv_ / 2; }
    int width() const { return w_; }
    int height() const { return h_; }
    int words_per_pixel() const { return wpp_; }
    int views_per_pixel() const { return n_uv_ * n_uv_; }

    /// u,v are signed angular offsets.
    bool get(int x, int y, int u, int v) const {
        const int b = bit_index(u, v);
        return (word(x, y, b >> 6) >> (b & 63)) & 1u;
    }
    void set(int x, int y, int u, int v, bool value) {
        const int b = bit_index(u, v);
        std::uint64_t& w = word(x, y, b >> 6);
        const std::uint64_t m = std::uint64_t{1} << (b & 63);
        if (value) w |= m; else w &= ~m;
    }

    int count(int x, int y) const {
        int n = 0;
        for (int i = 0; i < wpp_; ++i) n += __builtin_popcountll(word(x, y, i));
        return n;
    }

    void set_pixel_all(int x, int y, bool value) {
        const int nviews = views_per_pixel();
        for (int i = 0; i < wpp_; ++i) {
            std::uint64_t full = ~std::uint64_t{0};
            const int remaining = nviews - i * 64;
            if (remaining < 64) full = (std::uint64_t{1} << remaining) - 1;
            word(x, y, i) = value ? full : 0;
        }
    }
    void set_all_true() {
        for (int y = 0; y < h_; ++y)
            for (int x = 0; x < w_; ++x) set_pixel_all(x, y, true);
    }

    /// Enforce the type invariants at one pixel: center set, never empty.
    void enforce_center(int x, int y) { set(x, y, 0, 0, true); }

    bool pixel_equal(const ViewMaskGrid& o, int x, int y) const {
        for (int i = 0; i < wpp_; ++i)
            if (word(x, y, i) != o.word(x, y, i)) return false;
        return true;
    }
    void copy_pixel_from(const ViewMaskGrid& o, int x, int y) {
        for (int i = 0; i < wpp_; ++i) word(x, y, i) = o.word(x, y, i);
    }

    std::uint64_t& word(int x, int y, int i) {
        return bits_[(static_cast<std::size_t>(y) * w_ + x) * wpp_ + i];
    }
    std::uint64_t word(int x, int y, int i) const {
        return bits_[(static_cast<std::size_t>(y) * w_ + x) * wpp_ + i];
    }

    std::vector<std::uint64_t>& words() { return bits_; }
    const std::vector<std::uint64_t>& words() const { return bits_; }

    bool operator==(const ViewMaskGrid&) const = default;

private:
    int bit_index(int u, int v) const {
        const int r = radius();
        LFD_CHECK(u >= -r && u <= r && v >= -r && v <= r);
        return (v + r) * n_uv_ + (u + r);
    }

    int n_uv_ = 0;
    int w_ = 0;
    int h_ = 0;
    int wpp_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace lfd
