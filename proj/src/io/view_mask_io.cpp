// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/io/view_mask_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace lfd {

namespace {

constexpr char kMagic[4] = {'V', 'M', 'S', 'K'};

template <typename T>
T to_little(T v) {
    if constexpr (std::endian::native == std::endian::little) {
        return v;
    } else {
        T out = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            out |= ((v >> (8 * i)) & 0xff) << (8 * (sizeof(T) - 1 - i));
        return out;
    }
}

}  // namespace

void write_view_mask(const std::string& path, const ViewMaskGrid& mask) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot open " + path + " for writing");
    os.write(kMagic, 4);
    const std::uint32_t hdr[3] = {to_little<std::uint32_t>(mask.n_uv()),
                                  to_little<std::uint32_t>(mask.width()),
                                  to_little<std::uint32_t>(mask.height())};
    os.write(reinterpret_cast<const char*>(hdr), sizeof(hdr));
    std::vector<std::uint64_t> words = mask.words();
    for (std::uint64_t& w : words) w = to_little(w);
    os.write(reinterpret_cast<const char*>(words.data()),
             static_cast<std::streamsize>(words.size() * 8));
    if (!os) throw InputError("failed writing " + path);
}

ViewMaskGrid read_view_mask(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw InputError(path + ": not a view-mask file");
    std::uint32_t hdr[3];
    is.read(reinterpret_cast<char*>(hdr), sizeof(hdr));
    if (!is) throw InputError(path + ": truncated header");
    const int n_uv = static_cast<int>(to_little(hdr[0]));
    const int w = static_cast<int>(to_little(hdr[1]));
    const int h = static_cast<int>(to_little(hdr[2]));
    if (n_uv <= 0 || n_uv % 2 == 0 || w <= 0 || h <= 0)
        throw InputError(path + ": bad view-mask dimensions");
    ViewMaskGrid mask(n_uv, w, h, false);
    is.read(reinterpret_cast<char*>(mask.words().data()),
            static_cast<std::streamsize>(mask.words().size() * 8));
    if (!is) throw InputError(path + ": truncated payload");
    for (std::uint64_t& word : mask.words()) word = to_little(word);
    return mask;
}

}  // namespace lfd
