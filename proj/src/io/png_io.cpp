// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/io/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

namespace lfd {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw InputError("cannot open " + path);
    return f;
}

}  // namespace

Image read_png(const std::string& path) {
    FilePtr f = open_file(path, "rb");
    png_byte header[8];
    if (std::fread(header, 1, 8, f.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw InputError(path + " is not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    LFD_CHECK(png);
    png_infop info = png_create_info_struct(png);
    LFD_CHECK(info);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw InputError("libpng failed reading " + path);
    }
    png_init_io(png, f.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (bit_depth == 16) png_set_swap(png);  // libpng stores 16-bit big-endian
    png_read_update_info(png, info);

    bit_depth = png_get_bit_depth(png, info);
    color_type = png_get_color_type(png, info);
    const int channels = (color_type == PNG_COLOR_TYPE_GRAY) ? 1 : 3;
    const std::size_t rowbytes = png_get_rowbytes(png, info);

    std::vector<png_byte> buf(rowbytes * h);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = buf.data() + y * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Image img(static_cast<int>(w), static_cast<int>(h), channels);
    const double scale = bit_depth == 16 ? 65535.0 : 255.0;
    for (png_uint_32 y = 0; y < h; ++y) {
        const png_bytep row = rows[y];
        for (png_uint_32 x = 0; x < w; ++x) {
            for (int c = 0; c < channels; ++c) {
                double v;
                if (bit_depth == 16) {
                    const png_uint_16* p16 = reinterpret_cast<const png_uint_16*>(row);
                    v = p16[x * channels + c] / scale;
                } else {
                    v = row[x * channels + c] / scale;
                }
                img(static_cast<int>(x), static_cast<int>(y), c) = v;
            }
        }
    }
    return img;
}

namespace {

void write_png_impl(const std::string& path, int w, int h, int channels, int bit_depth,
                    const std::vector<png_byte>& buf) {
    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    LFD_CHECK(png);
    png_infop info = png_create_info_struct(png);
    LFD_CHECK(info);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw InputError("libpng failed writing " + path);
    }
    png_init_io(png, f.get());
    const int color = channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, w, h, bit_depth, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    if (bit_depth == 16) png_set_swap(png);
    if (bit_depth == 1) png_set_packing(png);  // pack from one byte per pixel

    const std::size_t sample_bytes = bit_depth == 16 ? 2 : 1;
    const std::size_t rowbytes = static_cast<std::size_t>(w) * channels * sample_bytes;
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = const_cast<png_bytep>(buf.data() + y * rowbytes);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

png_byte quant8(double v) {
    const double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    return static_cast<png_byte>(std::lround(c * 255.0));
}

}  // namespace

void write_png8(const std::string& path, const Image& img) {
    const int w = img.width(), h = img.height(), ch = img.channels();
    std::vector<png_byte> buf(static_cast<std::size_t>(w) * h * ch);
    std::size_t i = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) buf[i++] = quant8(img(x, y, c));
    write_png_impl(path, w, h, ch, 8, buf);
}

void write_png16(const std::string& path, const Image& img) {
    const int w = img.width(), h = img.height(), ch = img.channels();
    std::vector<png_byte> buf(static_cast<std::size_t>(w) * h * ch * 2);
    png_uint_16* p = reinterpret_cast<png_uint_16*>(buf.data());
    std::size_t i = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double v = img(x, y, c);
                v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
                p[i++] = static_cast<png_uint_16>(std::lround(v * 65535.0));
            }
    write_png_impl(path, w, h, ch, 16, buf);
}

void write_png1(const std::string& path, const BinaryMap& map) {
    const int w = map.width(), h = map.height();
    std::vector<png_byte> buf(static_cast<std::size_t>(w) * h);
    std::size_t i = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) buf[i++] = map(x, y) ? 1 : 0;
    write_png_impl(path, w, h, 1, 1, buf);
}

BinaryMap read_png_binary(const std::string& path) {
    const Image img = read_png(path);
    BinaryMap map(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) map(x, y) = img.gray(x, y) > 0.0 ? 1 : 0;
    return map;
}

}  // namespace lfd
