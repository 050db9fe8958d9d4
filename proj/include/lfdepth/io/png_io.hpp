// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <string>

#include "lfdepth/core/image.hpp"

namespace lfd {

/// Read an 8- or 16-bit PNG (gray or RGB; palette and alpha are expanded /
/// stripped) into a [0,1] float image.
Image read_png(const std::string& path);

/// Write an image as 8-bit PNG (values clamped to [0,1], rounded).
void write_png8(const std::string& path, const Image& img);

/// Write an image as 16-bit PNG.
void write_png16(const std::string& path, const Image& img);

/// Write a binary map as a 1-bit grayscale PNG (nonzero = white).
void write_png1(const std::string& path, const BinaryMap& map);

/// Read a PNG as a binary map (any nonzero gray value = 1).
BinaryMap read_png_binary(const std::string& path);

}  // namespace lfd
