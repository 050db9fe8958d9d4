// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/io/pfm_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace lfd {

namespace {

constexpr bool host_little_endian() { return std::endian::native == std::endian::little; }

void byteswap32(std::vector<float>& v) {
    for (float& f : v) {
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        u = __builtin_bswap32(u);
        std::memcpy(&f, &u, 4);
    }
}

}  // namespace

void write_pfm(const std::string& path, const DisparityMap& map) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot open " + path + " for writing");
    os << "Pf\n" << map.width() << " " << map.height() << "\n" << "-1.0" << "\n";
    const int w = map.width(), h = map.height();
    std::vector<float> row(w);
    for (int y = h - 1; y >= 0; --y) {  // bottom-up
        for (int x = 0; x < w; ++x) row[x] = static_cast<float>(map(x, y));
        if (!host_little_endian()) byteswap32(row);
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(w) * 4);
    }
    if (!os) throw InputError("failed writing " + path);
}

DisparityMap read_pfm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open " + path);
    std::string magic;
    is >> magic;
    if (magic != "Pf") throw InputError(path + ": unsupported PFM type '" + magic + "'");
    int w = 0, h = 0;
    double scale = 0.0;
    is >> w >> h >> scale;
    if (!is || w <= 0 || h <= 0 || scale == 0.0) throw InputError(path + ": bad PFM header");
    is.get();  // single whitespace after scale
    DisparityMap map(w, h);
    std::vector<float> row(w);
    const bool file_little = scale < 0.0;
    for (int y = h - 1; y >= 0; --y) {
        is.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(w) * 4);
        if (!is) throw InputError(path + ": truncated PFM data");
        if (file_little != host_little_endian()) byteswap32(row);
        for (int x = 0; x < w; ++x) map(x, y) = row[x];
    }
    return map;
}

}  // namespace lfd
