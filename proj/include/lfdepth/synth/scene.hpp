// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lfdepth/core/image.hpp"

namespace lfd {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Procedural surface texture, defined over center-view image coordinates.
/// "noise" is a solid base color with seeded per-pixel uniform noise; it is
/// the default because dense texture maximizes the photo-consistency signal
/// while the distinct base colors keep occluder and background separable.
struct TextureSpec {
    enum class Kind { Solid, Noise, Checker };
    Kind kind = Kind::Noise;
    std::array<double, 3> base{0.5, 0.5, 0.5};
    double noise_amp = 0.2;                      // Noise only
    double checker_cell = 8.0;                   // Checker only
    std::array<double, 3> alt{0.1, 0.1, 0.1};    // Checker only
};

struct Occluder {
    std::vector<Vec2> polygon;  // simple polygon, center-view image coordinates
    double disparity = 0.0;
    TextureSpec texture;
};

/// Synthetic scene: a textured background plane plus nearer polygonal
/// occluders, viewed by an odd N x N camera grid with unit-disparity
/// baseline steps.
struct SceneSpec {
    int width = 0;
    int height = 0;
    int n_uv = 9;
    double background_disparity = 0.0;
    TextureSpec background_texture;
    std::vector<Occluder> occluders;
    double view_noise_sigma = 0.0;  // additive gaussian on rendered views
    std::uint64_t seed = 1;

    /// Throws InputError on invalid geometry (even grid, degenerate or
    /// self-intersecting polygon, occluder not in front of the background).
    void validate() const;

    double max_disparity() const;
    /// Largest occluder-background disparity gap.
    double max_disparity_gap() const;
};

/// Strictly-inside test (boundary points count as outside).
bool point_in_polygon(const std::vector<Vec2>& poly, double x, double y);

/// Parse the plain-text scene grammar. One directive per line, '#' comments:
///   size W H
///   angular N
///   seed S
///   view_noise SIGMA
///   background D TEXTURE
///   occluder D TEXTURE poly X0 Y0 X1 Y1 ...
/// TEXTURE is one of:
///   solid R G B
///   noise R G B AMP
///   checker CELL R G B R2 G2 B2
SceneSpec parse_scene(const std::string& text);
SceneSpec load_scene(const std::string& path);
std::string scene_to_text(const SceneSpec& scene);

/// Half-plane occluder scene: one straight vertical edge at x = edge_x
/// (half-integer to keep pixel centers off the boundary), occluder covering
/// x < edge_x. Angular masks split half-and-half.
SceneSpec make_halfplane_scene(int size, int n_uv, double d_bg, double d_occ,
                               double edge_x, std::uint64_t seed);

/// Wedge occluder with opening half-angles; a reflex wedge (solid angle
/// > 180 degrees) leaves more occluded than un-occluded views at pixels
/// near the apex.
SceneSpec make_wedge_scene(int size, int n_uv, double d_bg, double d_occ, Vec2 apex,
                           double dir1_deg, double dir2_deg, std::uint64_t seed);

/// Seeded random convex-polygon scene used by the sweep suites.
SceneSpec make_random_polygon_scene(int size, int n_uv, double d_bg, double d_occ,
                                    int n_vertices, std::uint64_t seed);

}  // namespace lfd
