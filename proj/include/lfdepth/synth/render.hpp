// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include "lfdepth/core/light_field.hpp"
#include "lfdepth/core/view_mask.hpp"
#include "lfdepth/synth/scene.hpp"

namespace lfd {

/// Exact per-pixel ground truth for a rendered scene, in the center view.
struct GroundTruth {
    DisparityMap disparity;          // nearest surface under each pixel
    ViewMaskGrid visibility;         // view (u,v) sees the center-view surface point
    BinaryMap occlusion_boundary;    // pixels adjacent to a disparity jump
    int max_projection_radius = 0;   // ceil(radius * largest disparity gap)
};

struct RenderedScene {
    LightField lf;
    GroundTruth gt;
};

/// Render every view by painting surfaces far-to-near with per-surface shear,
/// and compute ground truth with the independent ray test below.
///
/// Geometry convention: a surface point with center-view coordinate q and
/// disparity d appears in view (u,v) at image position q + (u,v)*d, so
/// refocusing the rendered field at d realigns that surface exactly.
RenderedScene render(const SceneSpec& scene);

/// Direct geometric visibility test, independent of the painter: the surface
/// point under center-view pixel (x,y) is seen by view (u,v) iff no nearer
/// occluder footprint contains (x,y) - (u,v) * (d_occ - d_surface).
bool oracle_visibility(const SceneSpec& scene, int x, int y, int u, int v);

/// Disparity of the nearest surface under a center-view pixel.
double surface_disparity(const SceneSpec& scene, double x, double y);

/// Mark pixels whose 4-neighborhood contains a disparity change >= eps.
BinaryMap disparity_boundary(const DisparityMap& disparity, double eps);

}  // namespace lfd
