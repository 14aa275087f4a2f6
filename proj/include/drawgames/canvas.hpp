#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace drawgames {

/// Thrown for invalid configuration or malformed input; the CLI maps it to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kWhite{255, 255, 255};

struct PointD {
    double x = 0.0, y = 0.0;
    bool operator==(const PointD&) const = default;
};

// Mark primitives. Coordinates are pixel units stored as doubles; the
// rasterizer rounds once (llround) so repeated application is bit-stable.
struct DiscMark {
    double cx = 0.0, cy = 0.0;
    double radius = 0.0;
    Rgb color = kBlack;
    bool operator==(const DiscMark&) const = default;
};

struct SegmentMark {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    Rgb color = kBlack;
    double thickness = 1.0;
    bool operator==(const SegmentMark&) const = default;
};

struct BezierMark {
    PointD p0, p1, p2, p3;
    Rgb color = kBlack;
    double thickness = 1.0;
    bool operator==(const BezierMark&) const = default;
};

using Mark = std::variant<DiscMark, SegmentMark, BezierMark>;

inline bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

/// Fixed-size RGB raster. Dimensions are powers of two in [16, 1024]
/// (the spectral measure needs a radix-2 transform). Treat values as
/// immutable once drawn; `set` exists for the single-threaded draw path.
class Canvas {
public:
    Canvas() = default;

    static Canvas filled(int width, int height, Rgb background) {
        validate_dims(width, height);
        Canvas c;
        c.width_ = width;
        c.height_ = height;
        c.pixels_.assign(static_cast<size_t>(width) * height, background);
        return c;
    }

    static Canvas from_pixels(int width, int height, std::vector<Rgb> pixels) {
        validate_dims(width, height);
        if (pixels.size() != static_cast<size_t>(width) * height)
            throw ConfigError("canvas: pixel count does not match dimensions");
        Canvas c;
        c.width_ = width;
        c.height_ = height;
        c.pixels_ = std::move(pixels);
        return c;
    }

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<Rgb>& pixels() const { return pixels_; }

    bool in_bounds(int64_t x, int64_t y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    Rgb at(int x, int y) const { return pixels_[static_cast<size_t>(y) * width_ + x]; }

    /// Clipped write: coordinates outside the grid are ignored.
    void set(int64_t x, int64_t y, Rgb c) {
        if (in_bounds(x, y)) pixels_[static_cast<size_t>(y) * width_ + x] = c;
    }

    bool operator==(const Canvas&) const = default;

private:
    static void validate_dims(int w, int h) {
        if (!is_pow2(w) || !is_pow2(h) || w < 16 || w > 1024 || h < 16 || h > 1024)
            throw ConfigError("canvas dimensions must be powers of two in [16, 1024]");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<Rgb> pixels_;
};

inline double luminance(Rgb c) {
    return (0.299 * c.r + 0.587 * c.g + 0.114 * c.b) / 255.0;
}

/// Row-major per-pixel luminance in [0, 1].
inline std::vector<double> grayscale(const Canvas& canvas) {
    std::vector<double> out(canvas.pixels().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = luminance(canvas.pixels()[i]);
    return out;
}

namespace detail {

inline int64_t isqrt_floor(int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

/// Coordinates far beyond any canvas are clamped so llround stays defined;
/// visible pixels are unaffected for any mark within +-1e9 px.
inline double clamp_coord(double v) { return std::clamp(v, -1e9, 1e9); }

inline void stamp_disc(Canvas& c, int64_t cx, int64_t cy, int64_t r, Rgb col) {
    if (cx + r < 0 || cx - r >= c.width() || cy + r < 0 || cy - r >= c.height()) return;
    const int64_t dy0 = std::max(-r, -cy);
    const int64_t dy1 = std::min(r, c.height() - 1 - cy);
    for (int64_t dy = dy0; dy <= dy1; ++dy) {
        int64_t half = isqrt_floor(r * r - dy * dy);
        int64_t y = cy + dy;
        int64_t x0 = std::max<int64_t>(cx - half, 0);
        int64_t x1 = std::min<int64_t>(cx + half, c.width() - 1);
        for (int64_t x = x0; x <= x1; ++x) c.set(x, y, col);
    }
}

// Integer Bresenham widened by stamping a disc of radius thickness/2 at each
// visited pixel. Absurdly long segments are clipped to the canvas first so a
// pathological mark cannot stall the renderer.
inline void draw_segment_px(Canvas& c, int64_t x0, int64_t y0, int64_t x1, int64_t y1,
                            int64_t half, Rgb col) {
    const int64_t lo_x = -half - 1, hi_x = c.width() + half;
    const int64_t lo_y = -half - 1, hi_y = c.height() + half;
    if ((x0 < lo_x && x1 < lo_x) || (x0 > hi_x && x1 > hi_x) ||
        (y0 < lo_y && y1 < lo_y) || (y0 > hi_y && y1 > hi_y))
        return;

    constexpr int64_t kMaxSteps = int64_t{1} << 22;
    if (std::max(std::llabs(x1 - x0), std::llabs(y1 - y0)) > kMaxSteps) {
        // Liang-Barsky clip of the parameter range to the expanded canvas box.
        double t0 = 0.0, t1 = 1.0;
        const double dx = static_cast<double>(x1 - x0), dy = static_cast<double>(y1 - y0);
        auto clip = [&](double p, double q) {
            if (p == 0.0) return q >= 0.0;
            double t = q / p;
            if (p < 0.0) {
                if (t > t1) return false;
                if (t > t0) t0 = t;
            } else {
                if (t < t0) return false;
                if (t < t1) t1 = t;
            }
            return true;
        };
        if (!clip(-dx, static_cast<double>(x0 - lo_x)) || !clip(dx, static_cast<double>(hi_x - x0)) ||
            !clip(-dy, static_cast<double>(y0 - lo_y)) || !clip(dy, static_cast<double>(hi_y - y0)))
            return;
        int64_t nx0 = x0 + static_cast<int64_t>(std::llround(t0 * dx));
        int64_t ny0 = y0 + static_cast<int64_t>(std::llround(t0 * dy));
        x1 = x0 + static_cast<int64_t>(std::llround(t1 * dx));
        y1 = y0 + static_cast<int64_t>(std::llround(t1 * dy));
        x0 = nx0;
        y0 = ny0;
    }

    int64_t dx = std::llabs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    int64_t dy = -std::llabs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int64_t err = dx + dy;
    int64_t x = x0, y = y0;
    while (true) {
        if (half > 0)
            stamp_disc(c, x, y, half, col);
        else
            c.set(x, y, col);
        if (x == x1 && y == y1) break;
        int64_t e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
}

inline PointD bezier_point(const BezierMark& m, double t) {
    const double u = 1.0 - t;
    const double b0 = u * u * u, b1 = 3 * u * u * t, b2 = 3 * u * t * t, b3 = t * t * t;
    return {b0 * m.p0.x + b1 * m.p1.x + b2 * m.p2.x + b3 * m.p3.x,
            b0 * m.p0.y + b1 * m.p1.y + b2 * m.p2.y + b3 * m.p3.y};
}

inline bool all_finite(std::initializer_list<double> vs) {
    for (double v : vs)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace detail

/// Bezier marks are flattened to a fixed 64-step polyline; deterministic and
/// resolution-adequate at canvas sizes up to 1024.
inline constexpr int kBezierSteps = 64;

/// In-place mark rasterization (single-threaded draw path). No anti-aliasing;
/// geometry falling outside the grid is clipped, never rejected. Non-finite
/// coordinates make the mark a no-op.
inline void draw_mark(Canvas& canvas, const Mark& mark) {
    struct Visitor {
        Canvas& c;
        static int64_t px(double v) { return std::llround(detail::clamp_coord(v)); }
        void operator()(const DiscMark& m) const {
            if (!detail::all_finite({m.cx, m.cy, m.radius})) return;
            detail::stamp_disc(c, px(m.cx), px(m.cy), px(std::max(0.0, m.radius)), m.color);
        }
        void operator()(const SegmentMark& m) const {
            if (!detail::all_finite({m.x0, m.y0, m.x1, m.y1, m.thickness})) return;
            int64_t half = std::llround(std::clamp(m.thickness, 1.0, 4096.0)) / 2;
            detail::draw_segment_px(c, px(m.x0), px(m.y0), px(m.x1), px(m.y1), half, m.color);
        }
        void operator()(const BezierMark& m) const {
            if (!detail::all_finite({m.p0.x, m.p0.y, m.p1.x, m.p1.y, m.p2.x, m.p2.y, m.p3.x,
                                     m.p3.y, m.thickness}))
                return;
            int64_t half = std::llround(std::clamp(m.thickness, 1.0, 4096.0)) / 2;
            PointD prev = m.p0;
            for (int i = 1; i <= kBezierSteps; ++i) {
                PointD cur = detail::bezier_point(m, static_cast<double>(i) / kBezierSteps);
                detail::draw_segment_px(c, px(prev.x), px(prev.y), px(cur.x), px(cur.y), half,
                                        m.color);
                prev = cur;
            }
        }
    };
    std::visit(Visitor{canvas}, mark);
}

/// Value-returning form: pixels outside the mark are unchanged.
inline Canvas apply_mark(const Canvas& canvas, const Mark& mark) {
    Canvas out = canvas;
    draw_mark(out, mark);
    return out;
}

inline void draw_marks(Canvas& canvas, std::span<const Mark> marks) {
    for (const Mark& m : marks) draw_mark(canvas, m);
}

/// Intersection of two closed segments. A single crossing returns the point;
/// collinear overlap returns the overlap midpoint; disjoint returns nothing.
/// Segments must have nonzero length.
inline std::optional<PointD> intersect_segments(PointD a0, PointD a1, PointD b0, PointD b1) {
    const double rx = a1.x - a0.x, ry = a1.y - a0.y;
    const double sx = b1.x - b0.x, sy = b1.y - b0.y;
    const double qpx = b0.x - a0.x, qpy = b0.y - a0.y;
    const double denom = rx * sy - ry * sx;
    const double scale = std::max({std::abs(rx), std::abs(ry), std::abs(sx), std::abs(sy), 1.0});
    const double eps = 1e-12 * scale * scale;

    if (std::abs(denom) > eps) {
        const double t = (qpx * sy - qpy * sx) / denom;
        const double u = (qpx * ry - qpy * rx) / denom;
        const double slack = 1e-12;
        if (t < -slack || t > 1.0 + slack || u < -slack || u > 1.0 + slack) return std::nullopt;
        return PointD{a0.x + t * rx, a0.y + t * ry};
    }

    // Parallel. Collinear only if b0 lies on the line through a.
    if (std::abs(qpx * ry - qpy * rx) > eps) return std::nullopt;
    const double rr = rx * rx + ry * ry;
    double t0 = (qpx * rx + qpy * ry) / rr;
    double t1 = t0 + (sx * rx + sy * ry) / rr;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    if (lo > hi) return std::nullopt;
    const double tm = 0.5 * (lo + hi);
    return PointD{a0.x + tm * rx, a0.y + tm * ry};
}

// ---- PPM (binary P6, maxval 255) ----

inline std::vector<uint8_t> write_ppm_bytes(int width, int height, const uint8_t* rgb) {
    char header[64];
    int n = std::snprintf(header, sizeof header, "P6\n%d %d\n255\n", width, height);
    std::vector<uint8_t> out(header, header + n);
    out.insert(out.end(), rgb, rgb + static_cast<size_t>(width) * height * 3);
    return out;
}

inline std::vector<uint8_t> export_ppm(const Canvas& canvas) {
    std::vector<uint8_t> rgb;
    rgb.reserve(canvas.pixels().size() * 3);
    for (Rgb p : canvas.pixels()) {
        rgb.push_back(p.r);
        rgb.push_back(p.g);
        rgb.push_back(p.b);
    }
    return write_ppm_bytes(canvas.width(), canvas.height(), rgb.data());
}

namespace detail {

struct PpmParser {
    std::span<const uint8_t> data;
    size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < data.size()) {
            uint8_t c = data[pos];
            if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    int next_int() {
        skip_space_and_comments();
        if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
            throw ConfigError("ill-formed PPM: expected integer");
        int64_t v = 0;
        while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
            v = v * 10 + (data[pos] - '0');
            if (v > 1 << 20) throw ConfigError("ill-formed PPM: value out of range");
            ++pos;
        }
        return static_cast<int>(v);
    }
};

}  // namespace detail

/// Parse binary P6 data into a Canvas. Rejects anything that is not a P6 with
/// maxval 255 or whose dimensions violate the canvas contract.
inline Canvas read_ppm_bytes(std::span<const uint8_t> data) {
    if (data.size() < 2 || data[0] != 'P' || data[1] != '6')
        throw ConfigError("ill-formed PPM: missing P6 magic");
    detail::PpmParser p{data, 2};
    const int w = p.next_int();
    const int h = p.next_int();
    const int maxval = p.next_int();
    if (maxval != 255) throw ConfigError("ill-formed PPM: maxval must be 255");
    ++p.pos;  // single whitespace after maxval
    const size_t need = static_cast<size_t>(w) * h * 3;
    if (p.pos + need > data.size()) throw ConfigError("ill-formed PPM: truncated pixel data");
    std::vector<Rgb> px(static_cast<size_t>(w) * h);
    for (size_t i = 0; i < px.size(); ++i)
        px[i] = Rgb{data[p.pos + 3 * i], data[p.pos + 3 * i + 1], data[p.pos + 3 * i + 2]};
    return Canvas::from_pixels(w, h, std::move(px));
}

inline void write_bytes_file(const std::string& path, std::span<const uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

inline void write_ppm_file(const std::string& path, const Canvas& canvas) {
    auto bytes = export_ppm(canvas);
    write_bytes_file(path, bytes);
}

inline Canvas read_ppm_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open PPM file: " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return read_ppm_bytes(data);
}

}  // namespace drawgames
