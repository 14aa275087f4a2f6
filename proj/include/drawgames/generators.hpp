#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "drawgames/canvas.hpp"
#include "drawgames/rng.hpp"
#include "drawgames/text.hpp"

namespace drawgames {

// Parameterized drawing procedures. A genome (module id + flat real params +
// seed) expands deterministically into a mark sequence for a given canvas
// size; search operates on genomes, the canvas only ever sees marks.

enum class GeneratorId {
    LineField,
    AveragingLines,
    TurtlePen,
    BezierObjects,
    CppnLineGrid,
    OscillatoryArm,
    RecurrentAgent,
    RecurrentGmmAgent,
};

inline constexpr std::array<GeneratorId, 8> kAllGenerators = {
    GeneratorId::LineField,      GeneratorId::AveragingLines, GeneratorId::TurtlePen,
    GeneratorId::BezierObjects,  GeneratorId::CppnLineGrid,   GeneratorId::OscillatoryArm,
    GeneratorId::RecurrentAgent, GeneratorId::RecurrentGmmAgent,
};

/// Sizes shared by every expansion of a module; kept out of the genome so
/// param vectors stay comparable across runs.
struct GeneratorOptions {
    int turtle_steps = 128;
    int agent_steps = 128;
    int arm_steps = 400;
    int grid_n = 8;
    Rgb ink = kBlack;
    double thickness = 1.0;
};

// ---- gated recurrent controller (stands in for the LSTM family) ----

/// Weight layout: gate blocks in order [input, forget, candidate, output],
/// each W_x (hidden x input, row-major), then W_h (hidden x hidden), then
/// bias (hidden); finally readout W_y (output x hidden) and bias (output).
struct RecurrentController {
    int input_size = 0;
    int hidden_size = 0;
    int output_size = 0;
    std::vector<double> weights;

    static size_t weight_count(int in, int hid, int out) {
        return 4 * (static_cast<size_t>(hid) * in + static_cast<size_t>(hid) * hid + hid) +
               static_cast<size_t>(out) * hid + out;
    }
    bool sizes_consistent() const {
        return weights.size() == weight_count(input_size, hidden_size, output_size);
    }
};

struct RecurrentState {
    std::vector<double> h, c;
    explicit RecurrentState(int hidden) : h(hidden, 0.0), c(hidden, 0.0) {}
};

namespace detail {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }

}  // namespace detail

inline std::vector<double> recurrent_step(const RecurrentController& rc, RecurrentState& st,
                                          std::span<const double> input) {
    const int in = rc.input_size, hid = rc.hidden_size, out = rc.output_size;
    const double* w = rc.weights.data();
    const size_t block = static_cast<size_t>(hid) * in + static_cast<size_t>(hid) * hid + hid;

    std::array<std::vector<double>, 4> gates;
    for (int g = 0; g < 4; ++g) {
        const double* wx = w + g * block;
        const double* wh = wx + static_cast<size_t>(hid) * in;
        const double* bias = wh + static_cast<size_t>(hid) * hid;
        gates[g].resize(hid);
        for (int j = 0; j < hid; ++j) {
            double acc = bias[j];
            for (int i = 0; i < in; ++i) acc += wx[static_cast<size_t>(j) * in + i] * input[i];
            for (int i = 0; i < hid; ++i) acc += wh[static_cast<size_t>(j) * hid + i] * st.h[i];
            gates[g][j] = acc;
        }
    }
    for (int j = 0; j < hid; ++j) {
        const double ig = detail::sigmoid(gates[0][j]);
        const double fg = detail::sigmoid(gates[1][j]);
        const double cand = std::tanh(gates[2][j]);
        const double og = detail::sigmoid(gates[3][j]);
        st.c[j] = fg * st.c[j] + ig * cand;
        st.h[j] = og * std::tanh(st.c[j]);
    }

    const double* wy = w + 4 * block;
    const double* by = wy + static_cast<size_t>(out) * hid;
    std::vector<double> y(out);
    for (int k = 0; k < out; ++k) {
        double acc = by[k];
        for (int j = 0; j < hid; ++j) acc += wy[static_cast<size_t>(k) * hid + j] * st.h[j];
        y[k] = acc;
    }
    return y;
}

// Fixed architectures for the genome-backed controllers.
inline constexpr int kTurtleViewSide = 5;
inline constexpr int kTurtleInputs = kTurtleViewSide * kTurtleViewSide + 4;  // patch + sin/cos + pos
inline constexpr int kControllerHidden = 16;
inline constexpr int kGmmComponents = 3;

struct Genome {
    GeneratorId module = GeneratorId::LineField;
    std::vector<double> params;
    uint64_t seed = 0;
};

inline size_t param_count(GeneratorId id) {
    switch (id) {
        case GeneratorId::LineField: return 5;
        case GeneratorId::AveragingLines: return 3;
        case GeneratorId::TurtlePen:
            return RecurrentController::weight_count(kTurtleInputs, kControllerHidden, 3);
        case GeneratorId::BezierObjects: return 3;
        case GeneratorId::CppnLineGrid: return 138;
        case GeneratorId::OscillatoryArm: return 8;
        case GeneratorId::RecurrentAgent:
            return RecurrentController::weight_count(3, kControllerHidden, 3);
        case GeneratorId::RecurrentGmmAgent:
            return RecurrentController::weight_count(3, kControllerHidden, 5 * kGmmComponents + 1);
    }
    throw ConfigError("unknown generator id");
}

// ---- 1. random distributions of lines ----

/// params: [count, length_mean, length_spread, angle_mean, angle_concentration].
/// Angle spread is pi / (1 + |concentration|), so concentration -> inf pins
/// every segment to angle_mean.
inline std::vector<Mark> line_field(std::span<const double> params, uint64_t seed, int w, int h,
                                    const GeneratorOptions& opts = {}) {
    const auto n = static_cast<int64_t>(std::clamp(std::llround(params[0]), 0ll, 20000ll));
    const double len_mean = params[1];
    const double len_spread = params[2];
    const double angle_mean = params[3];
    const double conc = params[4];
    const double pi = 3.14159265358979323846;
    const double angle_sigma = pi / (1.0 + std::abs(conc));

    RngStream rng(seed);
    std::vector<Mark> marks;
    marks.reserve(static_cast<size_t>(std::max<int64_t>(n, 0)));
    for (int64_t i = 0; i < n; ++i) {
        const double x0 = rng.uniform(0.0, w);
        const double y0 = rng.uniform(0.0, h);
        const double theta = angle_mean + angle_sigma * rng.gaussian();
        const double len = std::max(1.0, len_mean + len_spread * rng.gaussian());
        marks.push_back(SegmentMark{x0, y0, x0 + len * std::cos(theta), y0 + len * std::sin(theta),
                                    opts.ink, opts.thickness});
    }
    return marks;
}

// ---- 2. lines that average their angle with lines they meet ----

struct LineStart {
    PointD pos;
    double angle = 0.0;
};

/// Circular mean of two directions; well defined across the +-pi wrap.
inline double circular_mean(double a, double b) {
    return std::atan2(std::sin(a) + std::sin(b), std::cos(a) + std::cos(b));
}

/// Deterministic core: lines grow stepwise from the given starts; when a
/// proposed step would cross a segment committed by another line, the line
/// advances to the crossing point and its direction becomes the circular
/// mean of its own angle and the crossed line's travel angle. A line stops
/// at max_steps or when it leaves the canvas.
inline std::vector<Mark> averaging_lines_walk(std::span<const LineStart> starts, double step_len,
                                              int max_steps, int w, int h,
                                              const GeneratorOptions& opts = {}) {
    struct Committed {
        PointD a, b;
        double angle;
        size_t line;
    };
    std::vector<Committed> committed;
    std::vector<Mark> marks;

    for (size_t li = 0; li < starts.size(); ++li) {
        PointD pos = starts[li].pos;
        double theta = starts[li].angle;
        for (int step = 0; step < max_steps; ++step) {
            PointD q{pos.x + step_len * std::cos(theta), pos.y + step_len * std::sin(theta)};

            double best_t = 2.0;
            double hit_angle = 0.0;
            PointD hit{};
            bool found = false;
            for (const Committed& seg : committed) {
                if (seg.line == li) continue;
                auto x = intersect_segments(pos, q, seg.a, seg.b);
                if (!x) continue;
                const double t = std::hypot(x->x - pos.x, x->y - pos.y) / step_len;
                if (t <= 1e-9 || t >= best_t) continue;
                best_t = t;
                hit = *x;
                hit_angle = seg.angle;
                found = true;
            }

            PointD next = found ? hit : q;
            if (std::hypot(next.x - pos.x, next.y - pos.y) > 1e-12) {
                marks.push_back(
                    SegmentMark{pos.x, pos.y, next.x, next.y, opts.ink, opts.thickness});
                committed.push_back({pos, next, theta, li});
            }
            pos = next;
            if (found) theta = circular_mean(theta, hit_angle);
            if (pos.x < 0.0 || pos.x > w || pos.y < 0.0 || pos.y > h) break;
        }
    }
    return marks;
}

/// params: [line_count, step_length, max_steps_per_line].
inline std::vector<Mark> averaging_lines(std::span<const double> params, uint64_t seed, int w,
                                         int h, const GeneratorOptions& opts = {}) {
    const auto count = static_cast<int>(std::clamp(std::llround(params[0]), 0ll, 1000ll));
    const double step_len = std::clamp(std::abs(params[1]), 1.0, static_cast<double>(std::min(w, h)));
    const auto max_steps = static_cast<int>(std::clamp(std::llround(params[2]), 0ll, 10000ll));
    const double pi = 3.14159265358979323846;

    RngStream rng(seed);
    std::vector<LineStart> starts(count);
    for (auto& s : starts) {
        s.pos = {rng.uniform(0.0, w), rng.uniform(0.0, h)};
        s.angle = rng.uniform(0.0, 2.0 * pi);
    }
    return averaging_lines_walk(starts, step_len, max_steps, w, h, opts);
}

// ---- 3. turtle pen with a local view ----

/// The controller reads a 5x5 luminance patch centered on the pen (axis
/// aligned), heading sin/cos, and normalized position; it outputs turn angle,
/// step length, and a pen up/down logit. The pen draws onto a working copy so
/// the local view includes its own earlier marks.
inline std::vector<Mark> turtle_pen(const RecurrentController& rc, int steps,
                                    const Canvas& canvas, const GeneratorOptions& opts = {}) {
    if (rc.input_size != kTurtleInputs || rc.output_size != 3 || !rc.sizes_consistent())
        throw ConfigError("turtle controller sizes do not match the declared interface");

    const int w = canvas.width(), h = canvas.height();
    Canvas work = canvas;
    RecurrentState st(rc.hidden_size);
    PointD pos{w / 2.0, h / 2.0};
    double heading = 0.0;
    const double pi = 3.14159265358979323846;

    std::vector<Mark> marks;
    std::vector<double> input(kTurtleInputs);
    for (int step = 0; step < steps; ++step) {
        const auto cx = static_cast<int>(std::llround(pos.x));
        const auto cy = static_cast<int>(std::llround(pos.y));
        int idx = 0;
        for (int dy = -2; dy <= 2; ++dy) {
            for (int dx = -2; dx <= 2; ++dx) {
                const int x = std::clamp(cx + dx, 0, w - 1);
                const int y = std::clamp(cy + dy, 0, h - 1);
                input[idx++] = luminance(work.at(x, y));
            }
        }
        input[idx++] = std::sin(heading);
        input[idx++] = std::cos(heading);
        input[idx++] = pos.x / (w - 1);
        input[idx++] = pos.y / (h - 1);

        const auto y = recurrent_step(rc, st, input);
        heading += std::tanh(y[0]) * (pi / 2.0);
        const double len = 2.0 + 2.0 * std::tanh(y[1]);
        const bool pen_down = y[2] >= 0.0;

        PointD next{std::clamp(pos.x + len * std::cos(heading), 0.0, w - 1.0),
                    std::clamp(pos.y + len * std::sin(heading), 0.0, h - 1.0)};
        if (pen_down && std::hypot(next.x - pos.x, next.y - pos.y) > 1e-9) {
            Mark m = SegmentMark{pos.x, pos.y, next.x, next.y, opts.ink, opts.thickness};
            marks.push_back(m);
            draw_mark(work, m);
        }
        pos = next;
    }
    return marks;
}

// ---- 4. chains of smooth Bezier curves ----

/// params: [object_count, control_point_spread, closed_flag]. Curves chain
/// with C1 continuity: each joint's incoming handle is mirrored exactly, so
/// handle directions at joints are collinear.
inline std::vector<Mark> bezier_objects(std::span<const double> params, uint64_t seed, int w,
                                        int h, const GeneratorOptions& opts = {}) {
    const auto count = static_cast<int>(std::clamp(std::llround(params[0]), 0ll, 100ll));
    const double spread = std::clamp(std::abs(params[1]), 1.0, 200.0);
    const bool closed = params[2] > 0.5;

    RngStream rng(seed);
    std::vector<Mark> marks;
    for (int obj = 0; obj < count; ++obj) {
        const int nseg = 3 + static_cast<int>(rng.below(3));
        const PointD origin{rng.uniform(0.0, w), rng.uniform(0.0, h)};
        auto jitter = [&](double s) { return PointD{rng.gaussian(0.0, s), rng.gaussian(0.0, s)}; };

        PointD p0 = origin;
        PointD j1 = jitter(spread);
        PointD p1{p0.x + j1.x, p0.y + j1.y};
        for (int s = 0; s < nseg; ++s) {
            PointD p3;
            if (closed && s == nseg - 1) {
                p3 = origin;
            } else {
                PointD j3 = jitter(2.0 * spread);
                p3 = {p0.x + j3.x, p0.y + j3.y};
            }
            PointD j2 = jitter(spread);
            PointD p2{p3.x + j2.x, p3.y + j2.y};
            marks.push_back(BezierMark{p0, p1, p2, p3, opts.ink, opts.thickness});
            // mirror the handle through the joint
            p1 = {2.0 * p3.x - p2.x, 2.0 * p3.y - p2.y};
            p0 = p3;
        }
    }
    return marks;
}

// ---- 5. CPPN over (x, y, r) emitting a grid of oriented segments ----

namespace detail {

inline constexpr int kCppnHidden = 8;

inline double cppn_activate(int selector, double x) {
    switch (selector) {
        case 0: return std::sin(x);
        case 1: return std::tanh(x);
        case 2: return std::exp(-x * x);  // gaussian
        default: return x;                // identity
    }
}

inline int cppn_selector(double p) {
    return static_cast<int>(((std::llround(p) % 4) + 4) % 4);
}

/// params: [W1 8x3, b1 8, act1 8, W2 8x8, b2 8, act2 8, W3 2x8, b3 2] = 138.
inline std::array<double, 2> cppn_eval(std::span<const double> p, double x, double y, double r) {
    constexpr int H = kCppnHidden;
    const double in[3] = {x, y, r};
    size_t o = 0;
    double h1[H];
    for (int j = 0; j < H; ++j) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) acc += p[o + static_cast<size_t>(j) * 3 + i] * in[i];
        h1[j] = acc;
    }
    o += 3 * H;
    for (int j = 0; j < H; ++j) h1[j] += p[o + j];
    o += H;
    for (int j = 0; j < H; ++j) h1[j] = cppn_activate(cppn_selector(p[o + j]), h1[j]);
    o += H;

    double h2[H];
    for (int j = 0; j < H; ++j) {
        double acc = 0.0;
        for (int i = 0; i < H; ++i) acc += p[o + static_cast<size_t>(j) * H + i] * h1[i];
        h2[j] = acc;
    }
    o += static_cast<size_t>(H) * H;
    for (int j = 0; j < H; ++j) h2[j] += p[o + j];
    o += H;
    for (int j = 0; j < H; ++j) h2[j] = cppn_activate(cppn_selector(p[o + j]), h2[j]);
    o += H;

    std::array<double, 2> out{};
    for (int k = 0; k < 2; ++k) {
        double acc = 0.0;
        for (int i = 0; i < H; ++i) acc += p[o + static_cast<size_t>(k) * H + i] * h2[i];
        out[k] = acc;
    }
    o += 2 * H;
    out[0] += p[o];
    out[1] += p[o + 1];
    return out;
}

}  // namespace detail

/// One segment per node of an n x n grid; the network maps node coordinates
/// (x, y in [-1, 1], r = sqrt(x^2 + y^2)) to (length, angle).
inline std::vector<Mark> cppn_line_grid(std::span<const double> network_params, int grid_n, int w,
                                        int h, const GeneratorOptions& opts = {}) {
    std::vector<Mark> marks;
    for (int j = 0; j < grid_n; ++j) {
        for (int i = 0; i < grid_n; ++i) {
            const double px = (i + 0.5) * w / grid_n;
            const double py = (j + 0.5) * h / grid_n;
            const double nx = 2.0 * px / w - 1.0;
            const double ny = 2.0 * py / h - 1.0;
            const double r = std::sqrt(nx * nx + ny * ny);
            const auto out = detail::cppn_eval(network_params, nx, ny, r);
            const double len = std::abs(out[0]);
            const double angle = out[1];
            if (len < 1e-9) continue;
            const double hx = 0.5 * len * std::cos(angle);
            const double hy = 0.5 * len * std::sin(angle);
            marks.push_back(
                SegmentMark{px - hx, py - hy, px + hx, py + hy, opts.ink, opts.thickness});
        }
    }
    return marks;
}

// ---- 6. two-link arm tracing oscillatory joint motion ----

inline constexpr double kArmDt = 0.05;

/// params: [L1, L2, A1, w1, phi1, A2, w2, phi2]. Joint angles follow
/// theta_i(t) = A_i sin(w_i t + phi_i); the pen is the end effector of the
/// two-link arm anchored at the canvas center. Zero-length moves emit nothing.
inline std::vector<Mark> oscillatory_arm(std::span<const double> params, int steps, int w, int h,
                                         const GeneratorOptions& opts = {}) {
    const double lim = 4.0 * std::min(w, h);
    const double l1 = std::clamp(std::abs(params[0]), 0.0, lim);
    const double l2 = std::clamp(std::abs(params[1]), 0.0, lim);
    const double a1 = params[2], w1 = params[3], ph1 = params[4];
    const double a2 = params[5], w2 = params[6], ph2 = params[7];
    const double ax = w / 2.0, ay = h / 2.0;

    auto pen_at = [&](double t) {
        const double t1 = a1 * std::sin(w1 * t + ph1);
        const double t2 = a2 * std::sin(w2 * t + ph2);
        const double ex = ax + l1 * std::cos(t1) + l2 * std::cos(t1 + t2);
        const double ey = ay + l1 * std::sin(t1) + l2 * std::sin(t1 + t2);
        return PointD{ex, ey};
    };

    std::vector<Mark> marks;
    PointD prev = pen_at(0.0);
    for (int k = 1; k <= steps; ++k) {
        const PointD cur = pen_at(k * kArmDt);
        if (std::hypot(cur.x - prev.x, cur.y - prev.y) > 1e-9)
            marks.push_back(SegmentMark{prev.x, prev.y, cur.x, cur.y, opts.ink, opts.thickness});
        prev = cur;
    }
    return marks;
}

// ---- 7/8. free-running recurrent agents (plain and GMM readout) ----

/// Non-GMM controllers output (dx, dy, pen logit) directly; GMM controllers
/// parameterize K diagonal-Gaussian components [logit, mu_x, mu_y, sx, sy]
/// per component plus one pen logit, sampled with the genome's seed.
/// Variances are softplus(raw) + 1e-4, so they are always positive.
inline std::vector<Mark> recurrent_agent_draw(const RecurrentController& rc, int steps, int w,
                                              int h, bool gmm, uint64_t seed,
                                              const GeneratorOptions& opts = {}) {
    if (rc.input_size != 3 || !rc.sizes_consistent())
        throw ConfigError("recurrent agent controller sizes inconsistent");
    const int k_components = gmm ? (rc.output_size - 1) / 5 : 0;
    if (gmm && (rc.output_size < 6 || rc.output_size != 5 * k_components + 1))
        throw ConfigError("GMM readout must have 5K+1 outputs");
    if (!gmm && rc.output_size != 3)
        throw ConfigError("non-GMM agent must have 3 outputs");

    RngStream rng(seed);
    RecurrentState st(rc.hidden_size);
    PointD pos{w / 2.0, h / 2.0};
    std::vector<double> input = {0.0, 0.0, 1.0};

    std::vector<Mark> marks;
    for (int step = 0; step < steps; ++step) {
        const auto y = recurrent_step(rc, st, input);
        double dx, dy;
        bool pen_down;
        if (!gmm) {
            dx = y[0];
            dy = y[1];
            pen_down = y[2] > 0.0;
        } else {
            double max_logit = y[0];
            for (int k = 1; k < k_components; ++k) max_logit = std::max(max_logit, y[5 * k]);
            double z = 0.0;
            for (int k = 0; k < k_components; ++k) z += std::exp(y[5 * k] - max_logit);
            const double u = rng.next_double() * z;
            double acc = 0.0;
            int pick = k_components - 1;
            for (int k = 0; k < k_components; ++k) {
                acc += std::exp(y[5 * k] - max_logit);
                if (u < acc) {
                    pick = k;
                    break;
                }
            }
            const double mux = y[5 * pick + 1], muy = y[5 * pick + 2];
            const double sx = std::sqrt(detail::softplus(y[5 * pick + 3]) + 1e-4);
            const double sy = std::sqrt(detail::softplus(y[5 * pick + 4]) + 1e-4);
            dx = mux + sx * rng.gaussian();
            dy = muy + sy * rng.gaussian();
            pen_down = y[5 * k_components] > 0.0;
        }

        PointD next{std::clamp(pos.x + dx, 0.0, w - 1.0), std::clamp(pos.y + dy, 0.0, h - 1.0)};
        if (pen_down && std::hypot(next.x - pos.x, next.y - pos.y) > 1e-9)
            marks.push_back(SegmentMark{pos.x, pos.y, next.x, next.y, opts.ink, opts.thickness});
        pos = next;
        input = {dx, dy, pen_down ? 1.0 : 0.0};
    }
    return marks;
}

// ---- genome plumbing ----

inline RecurrentController controller_from_params(std::span<const double> params, int in, int hid,
                                                  int out) {
    RecurrentController rc;
    rc.input_size = in;
    rc.hidden_size = hid;
    rc.output_size = out;
    rc.weights.assign(params.begin(), params.end());
    if (!rc.sizes_consistent()) throw ConfigError("controller parameter count mismatch");
    return rc;
}

/// Expand a genome into its mark sequence. Pure in (module, params, seed,
/// canvas size, options); expanding twice gives identical marks.
inline std::vector<Mark> expand(const Genome& g, int w, int h, const GeneratorOptions& opts = {}) {
    if (g.params.size() != param_count(g.module))
        throw ConfigError("genome parameter count does not match module");
    switch (g.module) {
        case GeneratorId::LineField: return line_field(g.params, g.seed, w, h, opts);
        case GeneratorId::AveragingLines: return averaging_lines(g.params, g.seed, w, h, opts);
        case GeneratorId::TurtlePen: {
            auto rc = controller_from_params(g.params, kTurtleInputs, kControllerHidden, 3);
            return turtle_pen(rc, opts.turtle_steps, Canvas::filled(w, h, kWhite), opts);
        }
        case GeneratorId::BezierObjects: return bezier_objects(g.params, g.seed, w, h, opts);
        case GeneratorId::CppnLineGrid: return cppn_line_grid(g.params, opts.grid_n, w, h, opts);
        case GeneratorId::OscillatoryArm:
            return oscillatory_arm(g.params, opts.arm_steps, w, h, opts);
        case GeneratorId::RecurrentAgent: {
            auto rc = controller_from_params(g.params, 3, kControllerHidden, 3);
            return recurrent_agent_draw(rc, opts.agent_steps, w, h, false, g.seed, opts);
        }
        case GeneratorId::RecurrentGmmAgent: {
            auto rc = controller_from_params(g.params, 3, kControllerHidden,
                                             5 * kGmmComponents + 1);
            return recurrent_agent_draw(rc, opts.agent_steps, w, h, true, g.seed, opts);
        }
    }
    throw ConfigError("unknown generator id");
}

inline Canvas render_genome(const Genome& g, int w, int h, const GeneratorOptions& opts = {}) {
    Canvas c = Canvas::filled(w, h, kWhite);
    auto marks = expand(g, w, h, opts);
    draw_marks(c, marks);
    return c;
}

/// Gaussian-noise mutation: params shift by N(0, sigma^2), module id is
/// preserved, and a fresh expansion seed is drawn from the caller's stream.
inline Genome mutate(const Genome& g, double sigma, RngStream& rng) {
    Genome out = g;
    for (double& p : out.params) p += rng.gaussian(0.0, sigma);
    out.seed = rng.next_u64();
    return out;
}

/// Random genome with per-module parameter priors chosen so a fresh draw
/// produces visible marks on a typical canvas.
inline Genome random_genome(GeneratorId module, RngStream& rng, int canvas_min_dim = 256) {
    Genome g;
    g.module = module;
    g.params.resize(param_count(module));
    const double d = canvas_min_dim;
    const double pi = 3.14159265358979323846;
    switch (module) {
        case GeneratorId::LineField:
            g.params[0] = rng.uniform(5.0, 80.0);
            g.params[1] = rng.uniform(5.0, d / 2.0);
            g.params[2] = rng.uniform(0.0, 20.0);
            g.params[3] = rng.uniform(0.0, pi);
            g.params[4] = rng.uniform(0.0, 20.0);
            break;
        case GeneratorId::AveragingLines:
            g.params[0] = rng.uniform(3.0, 60.0);
            g.params[1] = rng.uniform(2.0, 10.0);
            g.params[2] = rng.uniform(20.0, 200.0);
            break;
        case GeneratorId::BezierObjects:
            g.params[0] = rng.uniform(1.0, 12.0);
            g.params[1] = rng.uniform(5.0, 40.0);
            g.params[2] = rng.uniform(0.0, 1.0);
            break;
        case GeneratorId::OscillatoryArm:
            g.params[0] = rng.uniform(4.0, d / 3.0);
            g.params[1] = rng.uniform(4.0, d / 3.0);
            g.params[2] = rng.uniform(0.0, pi);
            g.params[3] = rng.uniform(0.5, 6.0);
            g.params[4] = rng.uniform(0.0, 2.0 * pi);
            g.params[5] = rng.uniform(0.0, pi);
            g.params[6] = rng.uniform(0.5, 6.0);
            g.params[7] = rng.uniform(0.0, 2.0 * pi);
            break;
        case GeneratorId::CppnLineGrid:
        case GeneratorId::TurtlePen:
        case GeneratorId::RecurrentAgent:
        case GeneratorId::RecurrentGmmAgent:
            for (double& p : g.params) p = rng.gaussian(0.0, 0.5);
            break;
    }
    g.seed = rng.next_u64();
    return g;
}

inline std::string generator_name(GeneratorId id) {
    switch (id) {
        case GeneratorId::LineField: return "line-field";
        case GeneratorId::AveragingLines: return "averaging-lines";
        case GeneratorId::TurtlePen: return "turtle-pen";
        case GeneratorId::BezierObjects: return "bezier-objects";
        case GeneratorId::CppnLineGrid: return "cppn-line-grid";
        case GeneratorId::OscillatoryArm: return "oscillatory-arm";
        case GeneratorId::RecurrentAgent: return "recurrent-agent";
        case GeneratorId::RecurrentGmmAgent: return "recurrent-gmm-agent";
    }
    return "?";
}

inline GeneratorId generator_from_name(std::string name) {
    for (char& c : name)
        if (c == '_') c = '-';
    for (GeneratorId id : kAllGenerators)
        if (generator_name(id) == name) return id;
    throw ConfigError("unknown generator module: " + name);
}

/// Stable three-line text record: module, seed, params as decimal floats.
inline std::string genome_to_text(const Genome& g) {
    std::string out = "module " + generator_name(g.module) + "\n";
    out += "seed " + std::to_string(g.seed) + "\n";
    out += "params";
    for (double p : g.params) out += " " + fmt_g17(p);
    out += "\n";
    return out;
}

inline Genome genome_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string key, module_name;
    Genome g;
    if (!(in >> key >> module_name) || key != "module")
        throw ConfigError("genome record: expected 'module <name>'");
    g.module = generator_from_name(module_name);
    if (!(in >> key >> g.seed) || key != "seed")
        throw ConfigError("genome record: expected 'seed <u64>'");
    if (!(in >> key) || key != "params") throw ConfigError("genome record: expected 'params ...'");
    double v;
    while (in >> v) g.params.push_back(v);
    if (g.params.size() != param_count(g.module))
        throw ConfigError("genome record: wrong parameter count for module");
    return g;
}

}  // namespace drawgames
