// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <string>

#include "lfdepth/core/view_mask.hpp"

namespace lfd {

/// Packed bitmask file for per-pixel view sets (ground-truth visibility and
/// un-occluded view masks share this format).
///
/// Layout, all little-endian:
///   magic "VMSK"            4 bytes
///   n_uv, width, height     3 x uint32
///   payload: row-major pixels, each ceil(n_uv^2 / 64) x uint64 words;
///            bit (v_idx * n_uv + u_idx) of the word stream is view
///            (u_idx, v_idx), 0-based grid indices. A 9x9 grid needs 81
///            bits = two words per pixel.
void write_view_mask(const std::string& path, const ViewMaskGrid& mask);

ViewMaskGrid read_view_mask(const std::string& path);

}  // namespace lfd
