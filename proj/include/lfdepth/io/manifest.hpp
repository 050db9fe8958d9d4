// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <string>

#include "lfdepth/core/light_field.hpp"

namespace lfd {

/// Load a light field from a plain-text manifest.
///
/// Format (one entry per view, '#' starts a comment):
///   N_uv W H
///   u v relative_image_path     (N_uv * N_uv lines, u,v in [0, N_uv) )
///
/// Manifest indices are 0-based grid positions; they are normalized to
/// signed offsets from the center view (floor(N_uv/2), floor(N_uv/2)) on
/// load. Errors on even N_uv, missing or duplicate views, missing files and
/// inconsistent image sizes.
LightField load_lightfield(const std::string& manifest_path);

/// Write all views as 8-bit (or 16-bit) PNGs plus the manifest that
/// load_lightfield() consumes. Views go to <dir>/views/u_v.png.
void save_lightfield(const std::string& dir, const LightField& lf, bool sixteen_bit = false);

}  // namespace lfd
