#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "drawgames/canvas.hpp"

namespace drawgames {

// Computational aesthetic reward functions. Every measure is a pure function
// Canvas -> score; higher-level code decides whether to maximize, minimize,
// or use the value as a behavior descriptor.

enum class MeasureId {
    FillCentralCircle,
    BilateralEntropy,
    NegativeEntropy,
    PhogSelfSimilarity,
    PhogComplexity,
    RegionEntropy,
    RegionCount,
    FelzenszwalbSegments,
    PowerSpectrumDistance,
    FractalDimensionDistance,
    ExternalClassifierEntropy,
};

struct UnsupportedMeasureError : ConfigError {
    using ConfigError::ConfigError;
};

/// Tunables for all measures. The source material leaves these open; the
/// defaults here are the declared reference parameterization.
struct MeasureConfig {
    double ink_threshold = 0.5;              // pixel is "inked" if luminance < threshold
    double central_circle_radius_fraction = 0.35;  // of min(w, h)
    double outside_penalty = 1.0;            // lambda in fill_central_circle
    double felz_k = 300.0;
    int felz_min_size = 20;
    int phog_levels = 3;
    int phog_bins = 16;
    double target_spectrum_slope = -2.0;
    double target_fractal_dimension = 1.7;
    std::vector<int> box_sizes;              // descending powers of two; empty = derive from canvas

    /// Optional hook for the externally supplied classifier: canvas -> class
    /// probability vector (sums to 1 +- 1e-6). The engine never bundles a model.
    std::function<std::vector<double>(const Canvas&)> classifier;
};

namespace detail {

inline double entropy_bits(const std::vector<double>& counts) {
    double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (double c : counts) {
        if (c <= 0.0) continue;
        double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

inline int luminance_bin(double lum) {
    auto b = std::lround(lum * 255.0);
    return static_cast<int>(std::clamp<long>(b, 0, 255));
}

inline double histogram_entropy(const std::vector<double>& lum, int w, int h,
                                int x0, int y0, int x1, int y1) {
    std::vector<double> bins(256, 0.0);
    (void)h;
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) bins[luminance_bin(lum[static_cast<size_t>(y) * w + x])] += 1.0;
    return entropy_bits(bins);
}

}  // namespace detail

/// Shannon entropy (bits) of the 256-bin luminance histogram.
inline double shannon_entropy(const Canvas& canvas) {
    auto lum = grayscale(canvas);
    return detail::histogram_entropy(lum, canvas.width(), canvas.height(), 0, 0, canvas.width(),
                                     canvas.height());
}

/// Mean of the luminance-histogram entropies of the four half-images
/// (left, right, top, bottom).
inline double bilateral_entropy(const Canvas& canvas) {
    auto lum = grayscale(canvas);
    const int w = canvas.width(), h = canvas.height();
    double e = 0.0;
    e += detail::histogram_entropy(lum, w, h, 0, 0, w / 2, h);
    e += detail::histogram_entropy(lum, w, h, w / 2, 0, w, h);
    e += detail::histogram_entropy(lum, w, h, 0, 0, w, h / 2);
    e += detail::histogram_entropy(lum, w, h, 0, h / 2, w, h);
    return e / 4.0;
}

/// Inked fraction inside the central target circle minus lambda times the
/// inked fraction outside, clamped to [0, 1].
inline double fill_central_circle(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    auto lum = grayscale(canvas);
    const int w = canvas.width(), h = canvas.height();
    const double cx = w / 2.0, cy = h / 2.0;
    const double r = cfg.central_circle_radius_fraction * std::min(w, h);
    const double r2 = r * r;
    int64_t in_total = 0, in_ink = 0, out_total = 0, out_ink = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const bool ink = lum[static_cast<size_t>(y) * w + x] < cfg.ink_threshold;
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r2) {
                ++in_total;
                in_ink += ink;
            } else {
                ++out_total;
                out_ink += ink;
            }
        }
    }
    const double fin = in_total ? static_cast<double>(in_ink) / in_total : 0.0;
    const double fout = out_total ? static_cast<double>(out_ink) / out_total : 0.0;
    return std::clamp(fin - cfg.outside_penalty * fout, 0.0, 1.0);
}

// ---- connected regions ----

struct RegionResult {
    std::vector<int> labels;  // row-major, dense labels in first-occurrence order
    int count = 0;
    std::vector<int64_t> sizes;  // indexed by label
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);  // keep the smaller index as root: deterministic
        parent[a] = b;
        return true;
    }
};

}  // namespace detail

/// 4-connected components of the binarized image; ink and background form
/// separate components.
inline RegionResult region_labels(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    auto lum = grayscale(canvas);
    const int w = canvas.width(), h = canvas.height();
    const int n = w * h;
    std::vector<char> ink(n);
    for (int i = 0; i < n; ++i) ink[i] = lum[i] < cfg.ink_threshold;

    detail::UnionFind uf(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (x + 1 < w && ink[i] == ink[i + 1]) uf.unite(i, i + 1);
            if (y + 1 < h && ink[i] == ink[i + w]) uf.unite(i, i + w);
        }
    }

    RegionResult out;
    out.labels.assign(n, -1);
    std::vector<int> root_label(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_label[r] < 0) {
            root_label[r] = out.count++;
            out.sizes.push_back(0);
        }
        out.labels[i] = root_label[r];
        ++out.sizes[root_label[r]];
    }
    return out;
}

/// Shannon entropy (bits) of the distribution of region sizes.
inline double region_entropy(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    auto r = region_labels(canvas, cfg);
    std::vector<double> sizes(r.sizes.begin(), r.sizes.end());
    return detail::entropy_bits(sizes);
}

// ---- Felzenszwalb-Huttenlocher graph segmentation ----

struct SegmentationResult {
    std::vector<int> labels;
    int count = 0;
};

/// Graph-based segmentation on the 8-connected pixel graph with Euclidean RGB
/// edge weights. Ties in edge weight break by (row-major source, target) so
/// the result is identical on every platform. Components smaller than
/// felz_min_size are merged into their nearest neighbor afterwards.
inline SegmentationResult felzenszwalb_segments(const Canvas& canvas,
                                                const MeasureConfig& cfg = {}) {
    const int w = canvas.width(), h = canvas.height();
    const int n = w * h;
    const auto& px = canvas.pixels();

    auto rgb_dist = [&](int a, int b) {
        const double dr = static_cast<double>(px[a].r) - px[b].r;
        const double dg = static_cast<double>(px[a].g) - px[b].g;
        const double db = static_cast<double>(px[a].b) - px[b].b;
        return std::sqrt(dr * dr + dg * dg + db * db);
    };

    struct Edge {
        double weight;
        int a, b;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * 4);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (x + 1 < w) edges.push_back({rgb_dist(i, i + 1), i, i + 1});
            if (y + 1 < h) {
                if (x + 1 < w) edges.push_back({rgb_dist(i, i + w + 1), i, i + w + 1});
                edges.push_back({rgb_dist(i, i + w), i, i + w});
                if (x > 0) edges.push_back({rgb_dist(i, i + w - 1), i, i + w - 1});
            }
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        if (l.weight != r.weight) return l.weight < r.weight;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });

    detail::UnionFind uf(n);
    std::vector<double> internal(n, 0.0);  // max internal edge weight, by root
    std::vector<int64_t> size(n, 1);

    for (const Edge& e : edges) {
        int ra = uf.find(e.a), rb = uf.find(e.b);
        if (ra == rb) continue;
        const double ta = internal[ra] + cfg.felz_k / static_cast<double>(size[ra]);
        const double tb = internal[rb] + cfg.felz_k / static_cast<double>(size[rb]);
        if (e.weight <= std::min(ta, tb)) {
            const int64_t sz = size[ra] + size[rb];
            uf.unite(ra, rb);
            const int r = uf.find(ra);
            internal[r] = e.weight;
            size[r] = sz;
        }
    }

    // Absorb undersized components along their cheapest connecting edge.
    for (const Edge& e : edges) {
        int ra = uf.find(e.a), rb = uf.find(e.b);
        if (ra == rb) continue;
        if (size[ra] < cfg.felz_min_size || size[rb] < cfg.felz_min_size) {
            const int64_t sz = size[ra] + size[rb];
            uf.unite(ra, rb);
            size[uf.find(ra)] = sz;
        }
    }

    SegmentationResult out;
    out.labels.assign(n, -1);
    std::vector<int> root_label(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_label[r] < 0) root_label[r] = out.count++;
        out.labels[i] = root_label[r];
    }
    return out;
}

// ---- PHOG: pyramid of histograms of oriented gradients ----

struct PhogResult {
    double self_similarity = 0.0;  // in [0, 1]
    double complexity = 0.0;       // mean gradient magnitude
};

/// Orientation histograms (bins over [0, pi), magnitude-weighted) for every
/// node of a spatial pyramid with 4^L cells at level L. Self-similarity is
/// the median histogram-intersection between each non-root node and its
/// parent; complexity is the mean gradient magnitude.
inline PhogResult phog_features(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    if (cfg.phog_levels < 1) throw ConfigError("phog_levels must be >= 1");
    const int w = canvas.width(), h = canvas.height();
    const int bins = cfg.phog_bins;
    auto lum = grayscale(canvas);

    auto at = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return lum[static_cast<size_t>(y) * w + x];
    };

    std::vector<double> mag(static_cast<size_t>(w) * h);
    std::vector<int> bin(static_cast<size_t>(w) * h);
    double mag_sum = 0.0;
    const double pi = 3.14159265358979323846;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double gx = (at(x + 1, y) - at(x - 1, y)) / 2.0;
            const double gy = (at(x, y + 1) - at(x, y - 1)) / 2.0;
            const double m = std::sqrt(gx * gx + gy * gy);
            double theta = std::atan2(gy, gx);
            if (theta < 0) theta += pi;
            if (theta >= pi) theta -= pi;
            int b = static_cast<int>(theta / pi * bins);
            mag[static_cast<size_t>(y) * w + x] = m;
            bin[static_cast<size_t>(y) * w + x] = std::min(b, bins - 1);
            mag_sum += m;
        }
    }

    // hist[level][cell] as flat vectors; cell index = cy * cells + cx.
    const int levels = cfg.phog_levels;
    std::vector<std::vector<std::vector<double>>> hist(levels + 1);
    for (int l = 0; l <= levels; ++l) {
        const int cells = 1 << l;
        hist[l].assign(static_cast<size_t>(cells) * cells, std::vector<double>(bins, 0.0));
        for (int y = 0; y < h; ++y) {
            const int cy = static_cast<int>(static_cast<int64_t>(y) * cells / h);
            for (int x = 0; x < w; ++x) {
                const int cx = static_cast<int>(static_cast<int64_t>(x) * cells / w);
                auto& hcell = hist[l][static_cast<size_t>(cy) * cells + cx];
                const size_t i = static_cast<size_t>(y) * w + x;
                hcell[bin[i]] += mag[i];
            }
        }
        for (auto& hc : hist[l]) {
            const double s = std::accumulate(hc.begin(), hc.end(), 0.0);
            if (s > 0.0) {
                for (double& v : hc) v /= s;
            } else {
                std::fill(hc.begin(), hc.end(), 1.0 / bins);  // zero-gradient fallback
            }
        }
    }

    std::vector<double> sims;
    for (int l = 1; l <= levels; ++l) {
        const int cells = 1 << l;
        const int pcells = 1 << (l - 1);
        for (int cy = 0; cy < cells; ++cy) {
            for (int cx = 0; cx < cells; ++cx) {
                const auto& child = hist[l][static_cast<size_t>(cy) * cells + cx];
                const auto& parent = hist[l - 1][static_cast<size_t>(cy / 2) * pcells + cx / 2];
                double s = 0.0;
                for (int b = 0; b < bins; ++b) s += std::min(child[b], parent[b]);
                sims.push_back(s);
            }
        }
    }
    std::sort(sims.begin(), sims.end());
    const size_t m = sims.size();
    PhogResult out;
    out.self_similarity = (m % 2 == 1) ? sims[m / 2] : 0.5 * (sims[m / 2 - 1] + sims[m / 2]);
    out.complexity = mag_sum / (static_cast<double>(w) * h);
    return out;
}

// ---- radially averaged power spectrum ----

namespace detail {

inline void fft_radix2(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    if (n <= 1) return;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.14159265358979323846;
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

/// 2-D power spectrum |F|^2 of a real grid (rows then columns, radix-2).
inline std::vector<double> power_spectrum_2d(const std::vector<double>& grid, int w, int h) {
    std::vector<std::complex<double>> data(grid.begin(), grid.end());
    std::vector<std::complex<double>> row(w), col(h);
    for (int y = 0; y < h; ++y) {
        std::copy_n(data.begin() + static_cast<int64_t>(y) * w, w, row.begin());
        fft_radix2(row);
        std::copy_n(row.begin(), w, data.begin() + static_cast<int64_t>(y) * w);
    }
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) col[y] = data[static_cast<size_t>(y) * w + x];
        fft_radix2(col);
        for (int y = 0; y < h; ++y) data[static_cast<size_t>(y) * w + x] = col[y];
    }
    std::vector<double> power(grid.size());
    for (size_t i = 0; i < power.size(); ++i) power[i] = std::norm(data[i]);
    return power;
}

struct SlopeFit {
    double slope = 0.0;
    bool valid = false;
};

inline SlopeFit least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    if (n < 2) return {};
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) return {};
    return {num / den, true};
}

}  // namespace detail

/// Slope beta of log P(f) vs log f for the radially averaged power spectrum of
/// the mean-subtracted luminance, fit over integer annuli f in [2, N/4].
/// A zero spectrum (constant canvas) is defined as beta = 0.
inline double power_spectrum_slope(const Canvas& canvas) {
    const int w = canvas.width(), h = canvas.height();
    auto lum = grayscale(canvas);
    const double mean = std::accumulate(lum.begin(), lum.end(), 0.0) / static_cast<double>(lum.size());
    for (double& v : lum) v -= mean;

    auto power = detail::power_spectrum_2d(lum, w, h);

    const int fmax = std::min(w, h) / 2;
    std::vector<double> sum(fmax + 1, 0.0);
    std::vector<int64_t> cnt(fmax + 1, 0);
    for (int v = 0; v < h; ++v) {
        const int fy = v <= h / 2 ? v : v - h;
        for (int u = 0; u < w; ++u) {
            const int fx = u <= w / 2 ? u : u - w;
            if (fx == 0 && fy == 0) continue;  // DC excluded
            const int f = static_cast<int>(
                std::llround(std::sqrt(static_cast<double>(fx) * fx + static_cast<double>(fy) * fy)));
            if (f < 1 || f > fmax) continue;
            sum[f] += power[static_cast<size_t>(v) * w + u];
            ++cnt[f];
        }
    }

    std::vector<double> xs, ys;
    const int flo = 2, fhi = std::min(w, h) / 4;
    for (int f = flo; f <= fhi; ++f) {
        if (cnt[f] == 0) continue;
        const double p = sum[f] / static_cast<double>(cnt[f]);
        if (p <= 1e-300) continue;
        xs.push_back(std::log(static_cast<double>(f)));
        ys.push_back(std::log(p));
    }
    auto fit = detail::least_squares_slope(xs, ys);
    return fit.valid ? fit.slope : 0.0;
}

inline double power_spectrum_distance(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    return std::abs(power_spectrum_slope(canvas) - cfg.target_spectrum_slope);
}

// ---- box-counting fractal dimension ----

inline std::vector<int> default_box_sizes(int w, int h) {
    std::vector<int> sizes;
    for (int s = std::min(w, h) / 2; s >= 2; s /= 2) sizes.push_back(s);
    return sizes;
}

/// Least-squares slope of log N(s) vs log(1/s) where N(s) counts boxes of
/// size s containing at least one inked pixel. Empty canvas gives 0.
inline double box_counting_dimension(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    const int w = canvas.width(), h = canvas.height();
    auto lum = grayscale(canvas);
    std::vector<char> ink(lum.size());
    bool any = false;
    for (size_t i = 0; i < lum.size(); ++i) {
        ink[i] = lum[i] < cfg.ink_threshold;
        any |= static_cast<bool>(ink[i]);
    }
    if (!any) return 0.0;

    std::vector<int> sizes = cfg.box_sizes.empty() ? default_box_sizes(w, h) : cfg.box_sizes;
    if (sizes.size() < 3) throw ConfigError("box_counting_dimension needs at least 3 box sizes");

    std::vector<double> xs, ys;
    for (int s : sizes) {
        const int bx = (w + s - 1) / s, by = (h + s - 1) / s;
        std::vector<char> occupied(static_cast<size_t>(bx) * by, 0);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (ink[static_cast<size_t>(y) * w + x])
                    occupied[static_cast<size_t>(y / s) * bx + x / s] = 1;
        const auto n = static_cast<int64_t>(std::count(occupied.begin(), occupied.end(), char{1}));
        xs.push_back(std::log(1.0 / static_cast<double>(s)));
        ys.push_back(std::log(static_cast<double>(n)));
    }
    auto fit = detail::least_squares_slope(xs, ys);
    return std::clamp(fit.valid ? fit.slope : 0.0, 0.0, 2.0);
}

inline double fractal_dimension_distance(const Canvas& canvas, const MeasureConfig& cfg = {}) {
    return std::abs(box_counting_dimension(canvas, cfg) - cfg.target_fractal_dimension);
}

inline double external_classifier_entropy(const Canvas& canvas, const MeasureConfig& cfg) {
    if (!cfg.classifier)
        throw UnsupportedMeasureError("classifier-entropy requires a registered classifier hook");
    auto probs = cfg.classifier(canvas);
    double s = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(s - 1.0) > 1e-6)
        throw ConfigError("classifier hook returned probabilities not summing to 1");
    return detail::entropy_bits(probs);
}

/// Dispatch a measure by id. All returned scores are finite.
inline double evaluate(const Canvas& canvas, MeasureId id, const MeasureConfig& cfg = {}) {
    switch (id) {
        case MeasureId::FillCentralCircle: return fill_central_circle(canvas, cfg);
        case MeasureId::BilateralEntropy: return bilateral_entropy(canvas);
        case MeasureId::NegativeEntropy: return -shannon_entropy(canvas);
        case MeasureId::PhogSelfSimilarity: return phog_features(canvas, cfg).self_similarity;
        case MeasureId::PhogComplexity: return phog_features(canvas, cfg).complexity;
        case MeasureId::RegionEntropy: return region_entropy(canvas, cfg);
        case MeasureId::RegionCount: return static_cast<double>(region_labels(canvas, cfg).count);
        case MeasureId::FelzenszwalbSegments:
            return static_cast<double>(felzenszwalb_segments(canvas, cfg).count);
        case MeasureId::PowerSpectrumDistance: return power_spectrum_distance(canvas, cfg);
        case MeasureId::FractalDimensionDistance: return fractal_dimension_distance(canvas, cfg);
        case MeasureId::ExternalClassifierEntropy: return external_classifier_entropy(canvas, cfg);
    }
    throw ConfigError("unknown measure id");
}

inline std::string measure_name(MeasureId id) {
    switch (id) {
        case MeasureId::FillCentralCircle: return "fill-circle";
        case MeasureId::BilateralEntropy: return "bilateral-entropy";
        case MeasureId::NegativeEntropy: return "neg-entropy";
        case MeasureId::PhogSelfSimilarity: return "phog-self-similarity";
        case MeasureId::PhogComplexity: return "phog-complexity";
        case MeasureId::RegionEntropy: return "region-entropy";
        case MeasureId::RegionCount: return "region-count";
        case MeasureId::FelzenszwalbSegments: return "felzenszwalb-segments";
        case MeasureId::PowerSpectrumDistance: return "power-spectrum-distance";
        case MeasureId::FractalDimensionDistance: return "fractal-dimension-distance";
        case MeasureId::ExternalClassifierEntropy: return "classifier-entropy";
    }
    return "?";
}

/// Accepts kebab- or snake-case names plus the short alias "entropy" for
/// neg-entropy. Throws ConfigError for unknown names.
inline MeasureId measure_from_name(std::string name) {
    for (char& c : name)
        if (c == '_') c = '-';
    static const std::pair<const char*, MeasureId> table[] = {
        {"fill-circle", MeasureId::FillCentralCircle},
        {"fill-central-circle", MeasureId::FillCentralCircle},
        {"bilateral-entropy", MeasureId::BilateralEntropy},
        {"neg-entropy", MeasureId::NegativeEntropy},
        {"entropy", MeasureId::NegativeEntropy},
        {"phog-self-similarity", MeasureId::PhogSelfSimilarity},
        {"phog-complexity", MeasureId::PhogComplexity},
        {"region-entropy", MeasureId::RegionEntropy},
        {"region-count", MeasureId::RegionCount},
        {"felzenszwalb-segments", MeasureId::FelzenszwalbSegments},
        {"power-spectrum-distance", MeasureId::PowerSpectrumDistance},
        {"fractal-dimension-distance", MeasureId::FractalDimensionDistance},
        {"classifier-entropy", MeasureId::ExternalClassifierEntropy},
    };
    for (const auto& [n, id] : table)
        if (name == n) return id;
    throw ConfigError("unknown measure: " + name);
}

}  // namespace drawgames
