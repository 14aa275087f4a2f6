#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "drawgames/aesthetics.hpp"
#include "drawgames/canvas.hpp"
#include "drawgames/rng.hpp"

using namespace drawgames;

namespace {

Canvas gray_canvas(int w, int h, const std::vector<uint8_t>& values) {
    std::vector<Rgb> px(values.size());
    for (size_t i = 0; i < values.size(); ++i) px[i] = Rgb{values[i], values[i], values[i]};
    return Canvas::from_pixels(w, h, std::move(px));
}

Canvas noise_canvas(int w, int h, uint64_t seed) {
    RngStream rng(seed);
    std::vector<uint8_t> v(static_cast<size_t>(w) * h);
    for (auto& b : v) b = static_cast<uint8_t>(rng.below(256));
    return gray_canvas(w, h, v);
}

Canvas rotate90(const Canvas& c) {
    const int w = c.width(), h = c.height();
    std::vector<Rgb> px(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) px[static_cast<size_t>(x) * h + (h - 1 - y)] = c.at(x, y);
    return Canvas::from_pixels(h, w, std::move(px));
}

Canvas mirror_x(const Canvas& c) {
    const int w = c.width(), h = c.height();
    std::vector<Rgb> px(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) px[static_cast<size_t>(y) * w + (w - 1 - x)] = c.at(x, y);
    return Canvas::from_pixels(w, h, std::move(px));
}

// ---- oracles ----

// BFS flood fill; independent of the union-find implementation under test.
struct FloodResult {
    int count = 0;
    std::vector<int64_t> sizes;
};

FloodResult flood_fill_oracle(const Canvas& c, double threshold) {
    const int w = c.width(), h = c.height();
    auto lum = grayscale(c);
    std::vector<char> ink(lum.size());
    for (size_t i = 0; i < lum.size(); ++i) ink[i] = lum[i] < threshold;
    std::vector<char> seen(lum.size(), 0);
    FloodResult out;
    for (int start = 0; start < w * h; ++start) {
        if (seen[start]) continue;
        ++out.count;
        int64_t size = 0;
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            ++size;
            const int x = i % w, y = i / w;
            const int nb[4] = {x > 0 ? i - 1 : -1, x + 1 < w ? i + 1 : -1, y > 0 ? i - w : -1,
                               y + 1 < h ? i + w : -1};
            for (int n : nb) {
                if (n < 0 || seen[n] || ink[n] != ink[i]) continue;
                seen[n] = 1;
                queue.push_back(n);
            }
        }
        out.sizes.push_back(size);
    }
    return out;
}

double entropy_of_sizes_oracle(const std::vector<int64_t>& sizes) {
    int64_t total = 0;
    for (auto s : sizes) total += s;
    double h = 0;
    for (auto s : sizes) {
        const double p = static_cast<double>(s) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

// Second, structurally different implementation of the published graph-merge
// segmentation: explicit component lists instead of union-find.
int felzenszwalb_reference_count(const Canvas& c, double k, int min_size) {
    const int w = c.width(), h = c.height();
    const int n = w * h;
    const auto& px = c.pixels();
    auto dist = [&](int a, int b) {
        const double dr = double(px[a].r) - px[b].r, dg = double(px[a].g) - px[b].g,
                     db = double(px[a].b) - px[b].b;
        return std::sqrt(dr * dr + dg * dg + db * db);
    };
    struct E {
        double w;
        int a, b;
    };
    std::vector<E> edges;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (x + 1 < w) edges.push_back({dist(i, i + 1), i, i + 1});
            if (y + 1 < h) {
                if (x + 1 < w) edges.push_back({dist(i, i + w + 1), i, i + w + 1});
                edges.push_back({dist(i, i + w), i, i + w});
                if (x > 0) edges.push_back({dist(i, i + w - 1), i, i + w - 1});
            }
        }
    std::sort(edges.begin(), edges.end(), [](const E& l, const E& r) {
        if (l.w != r.w) return l.w < r.w;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });

    std::vector<int> comp(n);
    std::vector<std::vector<int>> members(n);
    std::vector<double> internal(n, 0.0);
    for (int i = 0; i < n; ++i) {
        comp[i] = i;
        members[i] = {i};
    }
    auto merge = [&](int ca, int cb, double weight, bool set_internal) {
        if (members[ca].size() < members[cb].size()) std::swap(ca, cb);
        for (int m : members[cb]) {
            comp[m] = ca;
            members[ca].push_back(m);
        }
        members[cb].clear();
        internal[ca] = set_internal ? weight : std::max({internal[ca], internal[cb], weight});
    };
    for (const E& e : edges) {
        const int ca = comp[e.a], cb = comp[e.b];
        if (ca == cb) continue;
        const double ta = internal[ca] + k / static_cast<double>(members[ca].size());
        const double tb = internal[cb] + k / static_cast<double>(members[cb].size());
        if (e.w <= std::min(ta, tb)) merge(ca, cb, e.w, true);
    }
    for (const E& e : edges) {
        const int ca = comp[e.a], cb = comp[e.b];
        if (ca == cb) continue;
        if (static_cast<int>(members[ca].size()) < min_size ||
            static_cast<int>(members[cb].size()) < min_size)
            merge(ca, cb, e.w, false);
    }
    int count = 0;
    for (int i = 0; i < n; ++i) count += !members[i].empty();
    return count;
}

// O(N^4) direct DFT power spectrum for small grids.
std::vector<double> naive_power_oracle(const std::vector<double>& g, int w, int h) {
    const double pi = 3.14159265358979323846;
    std::vector<double> power(static_cast<size_t>(w) * h);
    for (int v = 0; v < h; ++v) {
        for (int u = 0; u < w; ++u) {
            std::complex<double> acc(0, 0);
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    const double phase =
                        -2.0 * pi * (double(u) * x / w + double(v) * y / h);
                    acc += g[static_cast<size_t>(y) * w + x] *
                           std::complex<double>(std::cos(phase), std::sin(phase));
                }
            power[static_cast<size_t>(v) * w + u] = std::norm(acc);
        }
    }
    return power;
}

double radial_slope_oracle(const std::vector<double>& power, int w, int h) {
    const int fmax = std::min(w, h) / 2;
    std::vector<double> sum(fmax + 1, 0.0);
    std::vector<int> cnt(fmax + 1, 0);
    for (int v = 0; v < h; ++v) {
        const int fy = v <= h / 2 ? v : v - h;
        for (int u = 0; u < w; ++u) {
            const int fx = u <= w / 2 ? u : u - w;
            if (fx == 0 && fy == 0) continue;
            const int f = static_cast<int>(std::llround(std::hypot(double(fx), double(fy))));
            if (f < 1 || f > fmax) continue;
            sum[f] += power[static_cast<size_t>(v) * w + u];
            ++cnt[f];
        }
    }
    std::vector<double> xs, ys;
    for (int f = 2; f <= std::min(w, h) / 4; ++f) {
        if (!cnt[f] || sum[f] <= 0) continue;
        xs.push_back(std::log(double(f)));
        ys.push_back(std::log(sum[f] / cnt[f]));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(xs.size());
    my /= double(xs.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

// Independent box-count slope fit.
double box_dimension_oracle(const Canvas& c, double threshold, const std::vector<int>& sizes) {
    auto lum = grayscale(c);
    const int w = c.width(), h = c.height();
    std::vector<double> xs, ys;
    for (int s : sizes) {
        std::map<std::pair<int, int>, bool> boxes;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (lum[static_cast<size_t>(y) * w + x] < threshold) boxes[{x / s, y / s}] = true;
        xs.push_back(std::log(1.0 / s));
        ys.push_back(std::log(static_cast<double>(boxes.size())));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(xs.size());
    my /= double(xs.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

Canvas sierpinski_canvas(int size, int depth) {
    const int shift = static_cast<int>(std::log2(size)) - depth;
    std::vector<uint8_t> v(static_cast<size_t>(size) * size, 255);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            if (((x >> shift) & (y >> shift)) == 0) v[static_cast<size_t>(y) * size + x] = 0;
    return gray_canvas(size, size, v);
}

}  // namespace

TEST_CASE("fill_central_circle on the three canonical canvases") {
    MeasureConfig cfg;
    cfg.central_circle_radius_fraction = 0.25;  // 64 px canvas -> integer radius 16

    REQUIRE(fill_central_circle(Canvas::filled(64, 64, kWhite), cfg) == 0.0);

    Canvas covered = apply_mark(Canvas::filled(64, 64, kWhite), DiscMark{32, 32, 16, kBlack});
    REQUIRE(fill_central_circle(covered, cfg) == Catch::Approx(1.0).margin(1e-12));

    REQUIRE(fill_central_circle(Canvas::filled(64, 64, kBlack), cfg) ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("fill_central_circle penalty is monotone in outside ink") {
    MeasureConfig cfg;
    Canvas c = apply_mark(Canvas::filled(64, 64, kWhite), DiscMark{32, 32, 10, kBlack});
    double prev = fill_central_circle(c, cfg);
    for (int i = 0; i < 6; ++i) {
        c = apply_mark(c, DiscMark{4.0 + 10 * i, 4, 3, kBlack});  // top edge: outside the circle
        const double cur = fill_central_circle(c, cfg);
        REQUIRE(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("shannon entropy: constant, two-level, and uniform noise") {
    REQUIRE(shannon_entropy(Canvas::filled(32, 32, kWhite)) == 0.0);

    std::vector<uint8_t> half(16 * 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) half[y * 16 + x] = x < 8 ? 0 : 255;
    REQUIRE(shannon_entropy(gray_canvas(16, 16, half)) == Catch::Approx(1.0).margin(1e-12));

    REQUIRE(shannon_entropy(noise_canvas(256, 256, 5)) == Catch::Approx(8.0).margin(0.05));
}

TEST_CASE("bilateral entropy of a left/right split is half a bit") {
    std::vector<uint8_t> half(16 * 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) half[y * 16 + x] = x < 8 ? 0 : 255;
    REQUIRE(bilateral_entropy(gray_canvas(16, 16, half)) == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(bilateral_entropy(Canvas::filled(16, 16, kWhite)) == 0.0);
    const double noisy = bilateral_entropy(noise_canvas(64, 64, 9));
    REQUIRE(noisy >= 0.0);
    REQUIRE(noisy <= 8.0);
}

TEST_CASE("region labeling matches the flood-fill oracle") {
    MeasureConfig cfg;

    auto blank = region_labels(Canvas::filled(16, 16, kWhite), cfg);
    REQUIRE(blank.count == 1);
    REQUIRE(region_entropy(Canvas::filled(16, 16, kWhite), cfg) == 0.0);

    Canvas discs = Canvas::filled(64, 64, kWhite);
    discs = apply_mark(discs, DiscMark{16, 16, 6, kBlack});
    discs = apply_mark(discs, DiscMark{48, 48, 6, kBlack});
    REQUIRE(region_labels(discs, cfg).count == 3);

    std::vector<uint8_t> checker(16 * 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) checker[y * 16 + x] = ((x / 8) ^ (y / 8)) ? 255 : 0;
    Canvas cb = gray_canvas(16, 16, checker);
    auto res = region_labels(cb, cfg);
    auto oracle = flood_fill_oracle(cb, cfg.ink_threshold);
    REQUIRE(res.count == 4);
    REQUIRE(res.count == oracle.count);
    REQUIRE(region_entropy(cb, cfg) ==
            Catch::Approx(entropy_of_sizes_oracle(oracle.sizes)).margin(1e-12));

    // random fixtures
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Canvas c = Canvas::filled(32, 32, kWhite);
        RngStream rng(seed);
        for (int i = 0; i < 10; ++i)
            c = apply_mark(c, DiscMark{rng.uniform(0, 32), rng.uniform(0, 32), rng.uniform(1, 5),
                                       kBlack});
        auto got = region_labels(c, cfg);
        auto want = flood_fill_oracle(c, cfg.ink_threshold);
        REQUIRE(got.count == want.count);
        std::vector<int64_t> got_sizes = got.sizes, want_sizes = want.sizes;
        std::sort(got_sizes.begin(), got_sizes.end());
        std::sort(want_sizes.begin(), want_sizes.end());
        REQUIRE(got_sizes == want_sizes);
    }
}

TEST_CASE("felzenszwalb segmentation: canonical fixtures and reference match") {
    MeasureConfig cfg;

    REQUIRE(felzenszwalb_segments(Canvas::filled(32, 32, Rgb{90, 120, 30}), cfg).count == 1);

    std::vector<Rgb> split(64 * 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) split[y * 64 + x] = x < 32 ? Rgb{255, 0, 0} : Rgb{0, 0, 255};
    REQUIRE(felzenszwalb_segments(Canvas::from_pixels(64, 64, split), cfg).count == 2);

    std::vector<Rgb> bands(64 * 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) {
            Rgb c = x < 21 ? Rgb{255, 0, 0} : (x < 42 ? Rgb{0, 255, 0} : Rgb{0, 0, 255});
            bands[y * 64 + x] = c;
        }
    Canvas band_canvas = Canvas::from_pixels(64, 64, bands);
    REQUIRE(felzenszwalb_segments(band_canvas, cfg).count == 3);
    REQUIRE(felzenszwalb_segments(band_canvas, cfg).count ==
            felzenszwalb_reference_count(band_canvas, cfg.felz_k, cfg.felz_min_size));

    for (uint64_t seed = 20; seed < 24; ++seed) {
        Canvas c = Canvas::filled(32, 32, kWhite);
        RngStream rng(seed);
        for (int i = 0; i < 6; ++i) {
            Rgb col{static_cast<uint8_t>(rng.below(256)), static_cast<uint8_t>(rng.below(256)),
                    static_cast<uint8_t>(rng.below(256))};
            draw_mark(c, DiscMark{rng.uniform(0, 32), rng.uniform(0, 32), rng.uniform(2, 8), col});
        }
        REQUIRE(felzenszwalb_segments(c, cfg).count ==
                felzenszwalb_reference_count(c, cfg.felz_k, cfg.felz_min_size));
    }
}

TEST_CASE("felzenszwalb labels partition the pixels") {
    Canvas c = Canvas::filled(32, 32, kWhite);
    RngStream rng(77);
    for (int i = 0; i < 8; ++i)
        draw_mark(c, SegmentMark{rng.uniform(0, 32), rng.uniform(0, 32), rng.uniform(0, 32),
                                 rng.uniform(0, 32), Rgb{static_cast<uint8_t>(rng.below(256)), 0, 0},
                                 2});
    auto seg = felzenszwalb_segments(c, {});
    REQUIRE(seg.labels.size() == 32 * 32);
    std::set<int> distinct;
    for (int l : seg.labels) {
        REQUIRE(l >= 0);
        REQUIRE(l < seg.count);
        distinct.insert(l);
    }
    REQUIRE(static_cast<int>(distinct.size()) == seg.count);
}

TEST_CASE("phog: constant canvas, gradient oracle, tiling order") {
    MeasureConfig cfg;
    auto flat = phog_features(Canvas::filled(64, 64, Rgb{128, 128, 128}), cfg);
    REQUIRE(flat.self_similarity == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(flat.complexity == 0.0);

    // single hard vertical edge vs brute-force mean |grad|
    std::vector<uint8_t> edge(64 * 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) edge[y * 64 + x] = x < 32 ? 0 : 255;
    Canvas ec = gray_canvas(64, 64, edge);
    auto lum = grayscale(ec);
    auto at = [&](int x, int y) {
        x = std::clamp(x, 0, 63);
        y = std::clamp(y, 0, 63);
        return lum[static_cast<size_t>(y) * 64 + x];
    };
    double acc = 0;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x)
            acc += std::hypot((at(x + 1, y) - at(x - 1, y)) / 2.0,
                              (at(x, y + 1) - at(x, y - 1)) / 2.0);
    acc /= 64.0 * 64.0;
    auto ep = phog_features(ec, cfg);
    REQUIRE(ep.complexity == Catch::Approx(acc).margin(1e-12));
    REQUIRE(ep.complexity > 0.0);

    // oriented texture tiled 4x4 is at least as self-similar as white noise
    Canvas patch = Canvas::filled(64, 64, kWhite);
    for (int o = -64; o < 64; o += 8)
        draw_mark(patch, SegmentMark{static_cast<double>(o), 0, static_cast<double>(o + 64), 64,
                                     kBlack, 2});
    std::vector<Rgb> tiled(256 * 256);
    for (int y = 0; y < 256; ++y)
        for (int x = 0; x < 256; ++x) tiled[static_cast<size_t>(y) * 256 + x] = patch.at(x % 64, y % 64);
    const double sim_tiled = phog_features(Canvas::from_pixels(256, 256, tiled), cfg).self_similarity;
    const double sim_noise = phog_features(noise_canvas(256, 256, 4), cfg).self_similarity;
    REQUIRE(sim_tiled >= sim_noise);
}

TEST_CASE("phog self-similarity stays in [0,1]") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Canvas c = Canvas::filled(64, 64, kWhite);
        RngStream rng(seed + 100);
        for (int i = 0; i < 12; ++i)
            draw_mark(c, SegmentMark{rng.uniform(0, 64), rng.uniform(0, 64), rng.uniform(0, 64),
                                     rng.uniform(0, 64), kBlack, rng.uniform(1, 4)});
        const double s = phog_features(c, {}).self_similarity;
        REQUIRE(s >= 0.0);
        REQUIRE(s <= 1.0);
    }
}

TEST_CASE("power spectrum slope agrees with the naive DFT oracle") {
    Canvas c = noise_canvas(32, 32, 11);
    auto lum = grayscale(c);
    const double mean = std::accumulate(lum.begin(), lum.end(), 0.0) / lum.size();
    for (double& v : lum) v -= mean;
    const double oracle = radial_slope_oracle(naive_power_oracle(lum, 32, 32), 32, 32);
    REQUIRE(power_spectrum_slope(c) == Catch::Approx(oracle).margin(1e-6));
}

TEST_CASE("power spectrum distance: white noise and constant canvases") {
    MeasureConfig cfg;
    Canvas noise = noise_canvas(128, 128, 3);
    cfg.target_spectrum_slope = -2.0;
    REQUIRE(power_spectrum_distance(noise, cfg) == Catch::Approx(2.0).margin(0.25));
    cfg.target_spectrum_slope = 0.0;
    REQUIRE(power_spectrum_distance(noise, cfg) == Catch::Approx(0.0).margin(0.25));

    cfg.target_spectrum_slope = -2.0;
    REQUIRE(power_spectrum_distance(Canvas::filled(64, 64, kWhite), cfg) == 2.0);
}

TEST_CASE("box-counting dimension: square, line, sierpinski") {
    MeasureConfig cfg;
    REQUIRE(box_counting_dimension(Canvas::filled(256, 256, kBlack), cfg) ==
            Catch::Approx(2.0).margin(0.05));

    Canvas line = Canvas::filled(256, 256, kWhite);
    draw_mark(line, SegmentMark{0, 128, 255, 128, kBlack, 1});
    REQUIRE(box_counting_dimension(line, cfg) == Catch::Approx(1.0).margin(0.05));

    Canvas sier = sierpinski_canvas(256, 7);
    const double want = std::log(3.0) / std::log(2.0);
    REQUIRE(box_counting_dimension(sier, cfg) == Catch::Approx(want).margin(0.1));
    REQUIRE(box_dimension_oracle(sier, cfg.ink_threshold, default_box_sizes(256, 256)) ==
            Catch::Approx(box_counting_dimension(sier, cfg)).margin(1e-9));

    REQUIRE(box_counting_dimension(Canvas::filled(64, 64, kWhite), cfg) == 0.0);
}

TEST_CASE("box-counting dimension is stable under 2x nearest-neighbor upscale") {
    Canvas small = sierpinski_canvas(128, 6);
    std::vector<Rgb> up(256 * 256);
    for (int y = 0; y < 256; ++y)
        for (int x = 0; x < 256; ++x) up[static_cast<size_t>(y) * 256 + x] = small.at(x / 2, y / 2);
    Canvas big = Canvas::from_pixels(256, 256, up);
    REQUIRE(box_counting_dimension(big, {}) ==
            Catch::Approx(box_counting_dimension(small, {})).margin(0.1));
}

TEST_CASE("entropy, region count, and dimension are isometry invariant") {
    Canvas c = Canvas::filled(128, 128, kWhite);
    RngStream rng(55);
    for (int i = 0; i < 15; ++i) {
        draw_mark(c, DiscMark{rng.uniform(0, 128), rng.uniform(0, 128), rng.uniform(1, 9), kBlack});
        draw_mark(c, SegmentMark{rng.uniform(0, 128), rng.uniform(0, 128), rng.uniform(0, 128),
                                 rng.uniform(0, 128), kBlack, 1});
    }
    for (const Canvas& t : {rotate90(c), mirror_x(c)}) {
        REQUIRE(shannon_entropy(t) == shannon_entropy(c));
        REQUIRE(region_labels(t, {}).count == region_labels(c, {}).count);
        REQUIRE(box_counting_dimension(t, {}) ==
                Catch::Approx(box_counting_dimension(c, {})).margin(1e-9));
    }
}

TEST_CASE("evaluate dispatch and the classifier hook") {
    Canvas blank = Canvas::filled(64, 64, kWhite);
    MeasureConfig cfg;
    REQUIRE(evaluate(blank, MeasureId::NegativeEntropy, cfg) == 0.0);
    REQUIRE(evaluate(blank, MeasureId::RegionCount, cfg) == 1.0);
    REQUIRE(evaluate(blank, MeasureId::FractalDimensionDistance, cfg) ==
            Catch::Approx(cfg.target_fractal_dimension));

    REQUIRE_THROWS_AS(evaluate(blank, MeasureId::ExternalClassifierEntropy, cfg),
                      UnsupportedMeasureError);

    cfg.classifier = [](const Canvas&) { return std::vector<double>{0.5, 0.5}; };
    REQUIRE(evaluate(blank, MeasureId::ExternalClassifierEntropy, cfg) ==
            Catch::Approx(1.0).margin(1e-12));

    cfg.classifier = [](const Canvas&) { return std::vector<double>{0.7, 0.7}; };
    REQUIRE_THROWS_AS(evaluate(blank, MeasureId::ExternalClassifierEntropy, cfg), ConfigError);
}

TEST_CASE("measure names round-trip and accept aliases") {
    for (MeasureId id :
         {MeasureId::FillCentralCircle, MeasureId::BilateralEntropy, MeasureId::NegativeEntropy,
          MeasureId::PhogSelfSimilarity, MeasureId::PhogComplexity, MeasureId::RegionEntropy,
          MeasureId::RegionCount, MeasureId::FelzenszwalbSegments,
          MeasureId::PowerSpectrumDistance, MeasureId::FractalDimensionDistance,
          MeasureId::ExternalClassifierEntropy}) {
        REQUIRE(measure_from_name(measure_name(id)) == id);
    }
    REQUIRE(measure_from_name("entropy") == MeasureId::NegativeEntropy);
    REQUIRE(measure_from_name("region_count") == MeasureId::RegionCount);
    REQUIRE_THROWS_AS(measure_from_name("sparkle"), ConfigError);
}
