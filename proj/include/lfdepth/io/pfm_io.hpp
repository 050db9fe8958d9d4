// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <string>

#include "lfdepth/core/image.hpp"

namespace lfd {

/// Write a scalar map as grayscale PFM ("Pf", scale -1.0 = little-endian,
/// rows stored bottom-up).
void write_pfm(const std::string& path, const DisparityMap& map);

/// Read a grayscale PFM; handles both endiannesses.
DisparityMap read_pfm(const std::string& path);

}  // namespace lfd
