// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "lfdepth/synth/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace lfd {

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double polygon_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a / 2.0;
}

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = cross(a, b, c);
    const double d2 = cross(a, b, d);
    const double d3 = cross(c, d, a);
    const double d4 = cross(c, d, b);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

void check_simple(const std::vector<Vec2>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (shared endpoint)
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_properly_intersect(poly[i], poly[(i + 1) % n], poly[j],
                                            poly[(j + 1) % n]))
                throw InputError("occluder polygon is self-intersecting");
        }
    }
}

}  // namespace

bool point_in_polygon(const std::vector<Vec2>& poly, double x, double y) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double yi = poly[i].y, yj = poly[j].y;
        if ((yi > y) != (yj > y)) {
            const double xcross = (poly[j].x - poly[i].x) * (y - yi) / (yj - yi) + poly[i].x;
            if (x < xcross) inside = !inside;
        }
    }
    return inside;
}

void SceneSpec::validate() const {
    if (width <= 0 || height <= 0) throw InputError("scene: size must be positive");
    if (n_uv < 3 || n_uv % 2 == 0)
        throw InputError("scene: angular resolution must be odd and >= 3");
    for (const Occluder& occ : occluders) {
        if (occ.polygon.size() < 3) throw InputError("scene: occluder polygon has < 3 vertices");
        if (std::abs(polygon_area(occ.polygon)) < 1e-9)
            throw InputError("scene: degenerate occluder polygon (zero area)");
        check_simple(occ.polygon);
        if (!(occ.disparity > background_disparity))
            throw InputError("scene: occluder disparity must exceed background disparity");
    }
    if (view_noise_sigma < 0.0) throw InputError("scene: negative view noise sigma");
}

double SceneSpec::max_disparity() const {
    double d = background_disparity;
    for (const Occluder& occ : occluders) d = std::max(d, occ.disparity);
    return d;
}

double SceneSpec::max_disparity_gap() const {
    double g = 0.0;
    for (const Occluder& occ : occluders)
        g = std::max(g, occ.disparity - background_disparity);
    return g;
}

namespace {

TextureSpec parse_texture(std::istringstream& ls, const std::string& line) {
    TextureSpec tex;
    std::string kind;
    if (!(ls >> kind)) throw InputError("scene: missing texture in '" + line + "'");
    if (kind == "solid") {
        tex.kind = TextureSpec::Kind::Solid;
        if (!(ls >> tex.base[0] >> tex.base[1] >> tex.base[2]))
            throw InputError("scene: solid texture needs R G B in '" + line + "'");
    } else if (kind == "noise") {
        tex.kind = TextureSpec::Kind::Noise;
        if (!(ls >> tex.base[0] >> tex.base[1] >> tex.base[2] >> tex.noise_amp))
            throw InputError("scene: noise texture needs R G B AMP in '" + line + "'");
    } else if (kind == "checker") {
        tex.kind = TextureSpec::Kind::Checker;
        if (!(ls >> tex.checker_cell >> tex.base[0] >> tex.base[1] >> tex.base[2] >>
              tex.alt[0] >> tex.alt[1] >> tex.alt[2]))
            throw InputError("scene: checker texture needs CELL R G B R2 G2 B2 in '" + line + "'");
    } else {
        throw InputError("scene: unknown texture kind '" + kind + "'");
    }
    return tex;
}

std::string texture_to_text(const TextureSpec& tex) {
    std::ostringstream os;
    switch (tex.kind) {
        case TextureSpec::Kind::Solid:
            os << "solid " << tex.base[0] << " " << tex.base[1] << " " << tex.base[2];
            break;
        case TextureSpec::Kind::Noise:
            os << "noise " << tex.base[0] << " " << tex.base[1] << " " << tex.base[2] << " "
               << tex.noise_amp;
            break;
        case TextureSpec::Kind::Checker:
            os << "checker " << tex.checker_cell << " " << tex.base[0] << " " << tex.base[1]
               << " " << tex.base[2] << " " << tex.alt[0] << " " << tex.alt[1] << " "
               << tex.alt[2];
            break;
    }
    return os.str();
}

}  // namespace

SceneSpec parse_scene(const std::string& text) {
    SceneSpec scene;
    std::istringstream is(text);
    std::string line;
    bool have_background = false;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive == "size") {
            if (!(ls >> scene.width >> scene.height))
                throw InputError("scene: bad size line '" + line + "'");
        } else if (directive == "angular") {
            if (!(ls >> scene.n_uv)) throw InputError("scene: bad angular line '" + line + "'");
        } else if (directive == "seed") {
            if (!(ls >> scene.seed)) throw InputError("scene: bad seed line '" + line + "'");
        } else if (directive == "view_noise") {
            if (!(ls >> scene.view_noise_sigma))
                throw InputError("scene: bad view_noise line '" + line + "'");
        } else if (directive == "background") {
            if (!(ls >> scene.background_disparity))
                throw InputError("scene: bad background line '" + line + "'");
            scene.background_texture = parse_texture(ls, line);
            have_background = true;
        } else if (directive == "occluder") {
            Occluder occ;
            if (!(ls >> occ.disparity))
                throw InputError("scene: bad occluder line '" + line + "'");
            occ.texture = parse_texture(ls, line);
            std::string kw;
            if (!(ls >> kw) || kw != "poly")
                throw InputError("scene: occluder needs 'poly X0 Y0 ...' in '" + line + "'");
            double x, y;
            while (ls >> x >> y) occ.polygon.push_back({x, y});
            scene.occluders.push_back(std::move(occ));
        } else {
            throw InputError("scene: unknown directive '" + directive + "'");
        }
    }
    if (!have_background) throw InputError("scene: missing background directive");
    scene.validate();
    return scene;
}

SceneSpec load_scene(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open scene file " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_scene(buf.str());
}

std::string scene_to_text(const SceneSpec& scene) {
    std::ostringstream os;
    os << "size " << scene.width << " " << scene.height << "\n";
    os << "angular " << scene.n_uv << "\n";
    os << "seed " << scene.seed << "\n";
    if (scene.view_noise_sigma > 0.0) os << "view_noise " << scene.view_noise_sigma << "\n";
    os << "background " << scene.background_disparity << " "
       << texture_to_text(scene.background_texture) << "\n";
    for (const Occluder& occ : scene.occluders) {
        os << "occluder " << occ.disparity << " " << texture_to_text(occ.texture) << " poly";
        for (const Vec2& p : occ.polygon) os << " " << p.x << " " << p.y;
        os << "\n";
    }
    return os.str();
}

namespace {

TextureSpec default_bg_texture() {
    TextureSpec t;
    t.kind = TextureSpec::Kind::Noise;
    t.base = {0.12, 0.25, 0.78};
    t.noise_amp = 0.2;
    return t;
}

TextureSpec default_occ_texture() {
    TextureSpec t;
    t.kind = TextureSpec::Kind::Noise;
    t.base = {0.92, 0.75, 0.12};
    t.noise_amp = 0.2;
    return t;
}

}  // namespace

SceneSpec make_halfplane_scene(int size, int n_uv, double d_bg, double d_occ, double edge_x,
                               std::uint64_t seed) {
    SceneSpec scene;
    scene.width = size;
    scene.height = size;
    scene.n_uv = n_uv;
    scene.seed = seed;
    scene.background_disparity = d_bg;
    scene.background_texture = default_bg_texture();
    const double m = 8.0 * size + 64.0;  // covers every shear the grid can apply
    Occluder occ;
    occ.disparity = d_occ;
    occ.texture = default_occ_texture();
    occ.polygon = {{edge_x, -m}, {edge_x, size + m}, {-m, size + m}, {-m, -m}};
    scene.occluders.push_back(std::move(occ));
    scene.validate();
    return scene;
}

SceneSpec make_wedge_scene(int size, int n_uv, double d_bg, double d_occ, Vec2 apex,
                           double dir1_deg, double dir2_deg, std::uint64_t seed) {
    SceneSpec scene;
    scene.width = size;
    scene.height = size;
    scene.n_uv = n_uv;
    scene.seed = seed;
    scene.background_disparity = d_bg;
    scene.background_texture = default_bg_texture();

    // Solid sector swept counterclockwise from dir1 to dir2, as a star-shaped
    // polygon around the apex. A sweep > 180 degrees gives the multi-occluder
    // configuration (more occluded than un-occluded views near the apex).
    const double deg = std::numbers::pi / 180.0;
    double a1 = dir1_deg * deg;
    double sweep = (dir2_deg - dir1_deg) * deg;
    while (sweep <= 0.0) sweep += 2.0 * std::numbers::pi;
    const double radius = 8.0 * size + 64.0;
    Occluder occ;
    occ.disparity = d_occ;
    occ.texture = default_occ_texture();
    occ.polygon.push_back(apex);
    const int arc_steps = std::max(2, static_cast<int>(std::ceil(sweep / (deg * 45.0))));
    for (int i = 0; i <= arc_steps; ++i) {
        const double a = a1 + sweep * i / arc_steps;
        occ.polygon.push_back({apex.x + radius * std::cos(a), apex.y + radius * std::sin(a)});
    }
    scene.occluders.push_back(std::move(occ));
    scene.validate();
    return scene;
}

SceneSpec make_random_polygon_scene(int size, int n_uv, double d_bg, double d_occ,
                                    int n_vertices, std::uint64_t seed) {
    SceneSpec scene;
    scene.width = size;
    scene.height = size;
    scene.n_uv = n_uv;
    scene.seed = seed;
    scene.background_disparity = d_bg;
    scene.background_texture = default_bg_texture();

    // Convex polygon around a seeded center: sorted angles, half-integer
    // vertex snap so pixel centers stay off edges on integer-disparity scenes.
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next_unit = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    };
    const double cx = size * (0.35 + 0.3 * next_unit());
    const double cy = size * (0.35 + 0.3 * next_unit());
    std::vector<double> angles(n_vertices);
    for (double& a : angles) a = 2.0 * std::numbers::pi * next_unit();
    std::sort(angles.begin(), angles.end());
    Occluder occ;
    occ.disparity = d_occ;
    occ.texture = default_occ_texture();
    for (int i = 0; i < n_vertices; ++i) {
        const double r = size * (0.12 + 0.18 * next_unit());
        const double x = std::floor(cx + r * std::cos(angles[i])) + 0.5;
        const double y = std::floor(cy + r * std::sin(angles[i])) + 0.5;
        occ.polygon.push_back({x, y});
    }
    scene.occluders.push_back(std::move(occ));
    scene.validate();
    return scene;
}

}  // namespace lfd
