// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/io/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "lfdepth/io/png_io.hpp"

namespace fs = std::filesystem;

namespace lfd {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

LightField load_lightfield(const std::string& manifest_path) {
    std::ifstream is(manifest_path);
    if (!is) throw InputError("cannot open manifest " + manifest_path);
    const fs::path base = fs::path(manifest_path).parent_path();

    int n_uv = 0, w = 0, h = 0;
    std::string line;
    // header: first non-empty line
    while (std::getline(is, line)) {
        std::istringstream ls(strip_comment(line));
        if (ls >> n_uv >> w >> h) break;
        std::string rest;
        if (ls.clear(), ls.str().find_first_not_of(" \t\r") != std::string::npos)
            throw InputError(manifest_path + ": bad header line '" + line + "'");
    }
    if (n_uv <= 0 || w <= 0 || h <= 0)
        throw InputError(manifest_path + ": missing or invalid header");
    if (n_uv % 2 == 0)
        throw InputError(manifest_path + ": angular resolution " + std::to_string(n_uv) +
                         " is even; no center view exists");

    LightField lf;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_uv) * n_uv, 0);
    const int center = n_uv / 2;
    int n_entries = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(strip_comment(line));
        int ui = 0, vi = 0;
        std::string rel;
        if (!(ls >> ui >> vi >> rel)) {
            if (strip_comment(line).find_first_not_of(" \t\r") == std::string::npos) continue;
            throw InputError(manifest_path + ": bad view line '" + line + "'");
        }
        if (ui < 0 || ui >= n_uv || vi < 0 || vi >= n_uv)
            throw InputError(manifest_path + ": view index (" + std::to_string(ui) + "," +
                             std::to_string(vi) + ") outside the " + std::to_string(n_uv) +
                             "x" + std::to_string(n_uv) + " grid");
        std::uint8_t& flag = seen[static_cast<std::size_t>(vi) * n_uv + ui];
        if (flag) throw InputError(manifest_path + ": duplicate view (" + std::to_string(ui) +
                                   "," + std::to_string(vi) + ")");
        flag = 1;

        const fs::path img_path = base / rel;
        if (!fs::exists(img_path))
            throw InputError(manifest_path + ": view file missing: " + img_path.string());
        const Image img = read_png(img_path.string());
        if (img.width() != w || img.height() != h)
            throw InputError(manifest_path + ": " + img_path.string() + " is " +
                             std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                             ", expected " + std::to_string(w) + "x" + std::to_string(h));
        if (lf.n_uv() == 0) lf = LightField(n_uv, w, h, img.channels());
        if (img.channels() != lf.channels())
            throw InputError(manifest_path + ": inconsistent channel count in " +
                             img_path.string());
        lf.set_view(ui - center, vi - center, img);
        ++n_entries;
    }
    if (n_entries != n_uv * n_uv)
        throw InputError(manifest_path + ": expected " + std::to_string(n_uv * n_uv) +
                         " views, found " + std::to_string(n_entries));
    return lf;
}

void save_lightfield(const std::string& dir, const LightField& lf, bool sixteen_bit) {
    fs::create_directories(fs::path(dir) / "views");
    std::ofstream os(fs::path(dir) / "manifest.txt");
    if (!os) throw InputError("cannot write manifest in " + dir);
    os << lf.n_uv() << " " << lf.width() << " " << lf.height() << "\n";
    const int r = lf.radius();
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u) {
            std::ostringstream name;
            name << "views/" << (u + r) << "_" << (v + r) << ".png";
            os << (u + r) << " " << (v + r) << " " << name.str() << "\n";
            const std::string img_path = (fs::path(dir) / name.str()).string();
            if (sixteen_bit)
                write_png16(img_path, lf.view(u, v));
            else
                write_png8(img_path, lf.view(u, v));
        }
    }
}

}  // namespace lfd
