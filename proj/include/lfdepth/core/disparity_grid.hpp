// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <cmath>
#include <vector>

#include "lfdepth/util/check.hpp"

namespace lfd {

/// Equally spaced disparity labels over [d_min, d_max], endpoints included.
///
/// Disparity is the spatial shift in pixels per unit angular step. The
/// refocus parameter used elsewhere in the literature maps through
/// alpha = 1 / (1 - d); shears are linear in d, which is why labels live in
/// disparity space.
class DisparityGrid {
public:
    DisparityGrid() = default;
    DisparityGrid(double d_min, double d_max, int n_labels)
        : d_min_(d_min), d_max_(d_max) {
        LFD_CHECK_MSG(d_min < d_max, "need d_min < d_max");
        LFD_CHECK_MSG(n_labels >= 2, "need at least 2 labels");
        labels_.resize(n_labels);
        const double step = (d_max - d_min) / (n_labels - 1);
        for (int i = 0; i < n_labels; ++i) labels_[i] = d_min + step * i;
        labels_.back() = d_max;
    }

    double d_min() const { return d_min_; }
    double d_max() const { return d_max_; }
    int n_labels() const { return static_cast<int>(labels_.size()); }
    double label(int i) const { return labels_[i]; }
    const std::vector<double>& labels() const { return labels_; }
    double spacing() const { return (d_max_ - d_min_) / (n_labels() - 1); }

    /// Index of the label closest to d (ties toward the smaller label).
    int nearest_label(double d) const {
        int best = 0;
        double bd = std::abs(labels_[0] - d);
        for (int i = 1; i < n_labels(); ++i) {
            const double dist = std::abs(labels_[i] - d);
            if (dist < bd) { bd = dist; best = i; }
        }
        return best;
    }

    bool operator==(const DisparityGrid&) const = default;

private:
    double d_min_ = 0.0;
    double d_max_ = 0.0;
    std::vector<double> labels_;
};

}  // namespace lfd
