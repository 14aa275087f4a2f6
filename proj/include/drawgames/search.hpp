#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drawgames/aesthetics.hpp"
#include "drawgames/canvas.hpp"
#include "drawgames/generators.hpp"
#include "drawgames/rng.hpp"
#include "drawgames/text.hpp"

namespace drawgames {

// Optimization engines: a MAP-Elites grid archive over two aesthetic
// descriptors, UCT planning over drawing-module actions, and the plain
// generational GA. All runs are deterministic functions of a master seed.

// ---- descriptor axes ----

/// Count-valued measures index the archive on a log2 axis so cell widths are
/// multiplicative; everything else is used raw.
inline double descriptor_transform(MeasureId id, double raw) {
    if (id == MeasureId::RegionCount || id == MeasureId::FelzenszwalbSegments)
        return std::log2(std::max(raw, 1.0));
    return raw;
}

/// A-priori descriptor bounds per measure (after descriptor_transform).
inline std::pair<double, double> default_descriptor_bounds(MeasureId id) {
    switch (id) {
        case MeasureId::FillCentralCircle: return {0.0, 1.0};
        case MeasureId::BilateralEntropy: return {0.0, 8.0};
        case MeasureId::NegativeEntropy: return {-8.0, 0.0};
        case MeasureId::PhogSelfSimilarity: return {0.0, 1.0};
        case MeasureId::PhogComplexity: return {0.0, 0.75};
        case MeasureId::RegionEntropy: return {0.0, 8.0};
        case MeasureId::RegionCount: return {0.0, 8.0};            // log2 count
        case MeasureId::FelzenszwalbSegments: return {0.0, 8.0};   // log2 count
        case MeasureId::PowerSpectrumDistance: return {0.0, 4.0};
        case MeasureId::FractalDimensionDistance: return {0.0, 2.0};
        case MeasureId::ExternalClassifierEntropy: return {0.0, 10.0};
    }
    return {0.0, 1.0};
}

// ---- MAP-Elites archive ----

struct Elite {
    Genome genome;
    double fitness = 0.0;
    std::array<double, 2> descriptors{};  // transformed values
};

/// Grid archive keyed by two discretized behavior descriptors. At most one
/// elite per cell; descriptors are clamped into bounds so every evaluation is
/// archivable.
class Archive {
public:
    Archive() = default;
    Archive(std::array<MeasureId, 2> descriptor_ids,
            std::array<std::pair<double, double>, 2> bounds, int resolution)
        : descriptor_ids_(descriptor_ids), bounds_(bounds), resolution_(resolution) {
        if (resolution < 1) throw ConfigError("archive resolution must be >= 1");
    }

    static Archive with_default_bounds(std::array<MeasureId, 2> ids, int resolution = 16) {
        return Archive(ids, {default_descriptor_bounds(ids[0]), default_descriptor_bounds(ids[1])},
                       resolution);
    }

    int resolution() const { return resolution_; }
    const std::array<MeasureId, 2>& descriptor_ids() const { return descriptor_ids_; }
    const std::array<std::pair<double, double>, 2>& bounds() const { return bounds_; }
    const std::map<int, Elite>& cells() const { return cells_; }
    size_t coverage() const { return cells_.size(); }

    std::array<int, 2> cell_of(std::array<double, 2> desc) const {
        std::array<int, 2> idx{};
        for (int a = 0; a < 2; ++a) {
            const auto [lo, hi] = bounds_[a];
            const double d = std::clamp(desc[a], lo, hi);
            int i = hi > lo ? static_cast<int>((d - lo) / (hi - lo) * resolution_) : 0;
            idx[a] = std::clamp(i, 0, resolution_ - 1);
        }
        return idx;
    }

    /// Insert iff the cell is empty or fitness strictly improves; ties keep
    /// the incumbent.
    bool insert(const Genome& genome, double fitness, std::array<double, 2> descriptors) {
        const auto idx = cell_of(descriptors);
        const int key = idx[0] * resolution_ + idx[1];
        auto it = cells_.find(key);
        if (it != cells_.end() && !(fitness > it->second.fitness)) return false;
        cells_[key] = Elite{genome, fitness, descriptors};
        return true;
    }

    const Elite* best() const {
        const Elite* b = nullptr;
        for (const auto& [k, e] : cells_)
            if (!b || e.fitness > b->fitness) b = &e;
        return b;
    }

    /// Uniform-random occupied cell (deterministic given the stream).
    const Elite& pick_uniform(RngStream& rng) const {
        auto it = cells_.begin();
        std::advance(it, static_cast<ptrdiff_t>(rng.below(cells_.size())));
        return it->second;
    }

private:
    std::array<MeasureId, 2> descriptor_ids_{};
    std::array<std::pair<double, double>, 2> bounds_{};
    int resolution_ = 16;
    std::map<int, Elite> cells_;  // ordered: deterministic iteration and export
};

// ---- archive CSV export / import ----

inline std::string archive_export(const Archive& archive) {
    std::string out = "cell_i,cell_j,desc_0,desc_1,fitness,module,seed,params\n";
    for (const auto& [key, e] : archive.cells()) {
        const int i = key / archive.resolution(), j = key % archive.resolution();
        out += std::to_string(i) + "," + std::to_string(j) + "," + fmt_g17(e.descriptors[0]) +
               "," + fmt_g17(e.descriptors[1]) + "," + fmt_g17(e.fitness) + "," +
               generator_name(e.genome.module) + "," + std::to_string(e.genome.seed) + ",";
        for (size_t p = 0; p < e.genome.params.size(); ++p) {
            if (p) out += ";";
            out += fmt_g17(e.genome.params[p]);
        }
        out += "\n";
    }
    return out;
}

inline Archive archive_import(const std::string& csv, std::array<MeasureId, 2> ids,
                              std::array<std::pair<double, double>, 2> bounds, int resolution) {
    Archive archive(ids, bounds, resolution);
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("archive csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 8) throw ConfigError("archive csv: wrong field count");
        Elite e;
        e.descriptors[0] = std::stod(fields[2]);
        e.descriptors[1] = std::stod(fields[3]);
        e.fitness = std::stod(fields[4]);
        e.genome.module = generator_from_name(fields[5]);
        e.genome.seed = std::stoull(fields[6]);
        std::istringstream ps(fields[7]);
        std::string tok;
        while (std::getline(ps, tok, ';'))
            if (!tok.empty()) e.genome.params.push_back(std::stod(tok));
        if (e.genome.params.size() != param_count(e.genome.module))
            throw ConfigError("archive csv: bad genome parameter count");
        archive.insert(e.genome, e.fitness, e.descriptors);
    }
    return archive;
}

// ---- MAP-Elites loop ----

struct CoveragePoint {
    int64_t eval_index = 0;
    int64_t coverage = 0;
    double best_fitness = 0.0;
};

struct MapElitesConfig {
    GeneratorId module = GeneratorId::LineField;
    int resolution = 16;
    int64_t initial_population = 100;
    double mutation_sigma = 2.0;
    uint64_t seed = 0;
    int canvas_width = 64;
    int canvas_height = 64;
    MeasureConfig measure;
    GeneratorOptions generator;
    std::optional<std::array<std::pair<double, double>, 2>> bounds_override;
    /// Called after every evaluation; receives the eval index, whether the
    /// candidate was inserted, and the archive. For instrumentation only.
    std::function<void(int64_t, bool, const Archive&)> on_eval;
};

struct MapElitesResult {
    Archive archive;
    std::vector<CoveragePoint> curve;
    double seed_phase_best = 0.0;  // best fitness among the initial random genomes
};

/// Canonical loop: seed with random genomes, then repeatedly mutate the elite
/// of a uniformly chosen occupied cell. render_fn maps a genome to a canvas
/// (tests may substitute their own renderer).
inline MapElitesResult map_elites_run(
    const std::function<Canvas(const Genome&)>& render_fn, MeasureId fitness_id,
    std::array<MeasureId, 2> descriptor_ids, int64_t budget_evals, const MapElitesConfig& cfg) {
    if (budget_evals < cfg.initial_population)
        throw ConfigError("map-elites budget must cover the initial population");

    MapElitesResult res;
    res.archive = cfg.bounds_override
                      ? Archive(descriptor_ids, *cfg.bounds_override, cfg.resolution)
                      : Archive::with_default_bounds(descriptor_ids, cfg.resolution);

    RngStream init_rng = substream(cfg.seed, "map-elites/init");
    RngStream select_rng = substream(cfg.seed, "map-elites/select");
    RngStream mutate_rng = substream(cfg.seed, "map-elites/mutate");

    double best = -std::numeric_limits<double>::infinity();
    const int min_dim = std::min(cfg.canvas_width, cfg.canvas_height);

    auto evaluate_and_insert = [&](const Genome& g, int64_t eval_idx) {
        const Canvas canvas = render_fn(g);
        const double fit = evaluate(canvas, fitness_id, cfg.measure);
        std::array<double, 2> desc{
            descriptor_transform(descriptor_ids[0], evaluate(canvas, descriptor_ids[0], cfg.measure)),
            descriptor_transform(descriptor_ids[1], evaluate(canvas, descriptor_ids[1], cfg.measure))};
        const bool inserted = res.archive.insert(g, fit, desc);
        best = std::max(best, fit);
        res.curve.push_back({eval_idx, static_cast<int64_t>(res.archive.coverage()), best});
        if (cfg.on_eval) cfg.on_eval(eval_idx, inserted, res.archive);
    };

    int64_t eval_idx = 0;
    for (; eval_idx < cfg.initial_population; ++eval_idx)
        evaluate_and_insert(random_genome(cfg.module, init_rng, min_dim), eval_idx);
    res.seed_phase_best = best;

    for (; eval_idx < budget_evals; ++eval_idx) {
        const Elite& parent = res.archive.pick_uniform(select_rng);
        evaluate_and_insert(mutate(parent.genome, cfg.mutation_sigma, mutate_rng), eval_idx);
    }
    return res;
}

// ---- MCTS planning over drawing-module actions ----

/// An action is a frozen drawing-module invocation (genome with fixed params
/// and seed) or a single primitive mark.
struct MctsAction {
    std::string name;
    std::variant<Genome, Mark> payload;
};

inline void apply_action(Canvas& canvas, const MctsAction& action, const GeneratorOptions& opts) {
    if (const Genome* g = std::get_if<Genome>(&action.payload)) {
        auto marks = expand(*g, canvas.width(), canvas.height(), opts);
        draw_marks(canvas, marks);
    } else {
        draw_mark(canvas, std::get<Mark>(action.payload));
    }
}

struct PlanState {
    Canvas canvas;
    int marks_used = 0;
    int budget = 0;
};

struct MctsConfig {
    int depth = 5;
    int iterations = 500;
    double exploration_c = 1.41421356237309515;  // sqrt(2)
    std::vector<MctsAction> actions;
    uint64_t seed = 0;
    MeasureConfig measure;
    GeneratorOptions generator;
};

namespace detail {

struct MctsNode {
    int parent = -1;
    int action = -1;
    int depth = 0;
    int visits = 0;
    double value_sum = 0.0;  // raw leaf values; normalized on the fly
    std::vector<int> children;
    Canvas canvas;
};

}  // namespace detail

struct MctsStats {
    int root_visits = 0;
    std::vector<int> root_child_visits;
    double value_min = 0.0, value_max = 0.0;
};

/// One UCT search from the given state; returns the root action with the
/// highest visit count (ties to the lowest action index). Leaf values are the
/// fitness of the rolled-out canvas, min-max normalized over the values seen
/// during this search.
inline int mcts_plan(const PlanState& state, MeasureId fitness_id, const MctsConfig& cfg,
                     MctsStats* stats = nullptr) {
    if (cfg.actions.empty()) throw ConfigError("mcts: empty action set");
    if (cfg.depth < 1 || cfg.iterations < 1) throw ConfigError("mcts: depth and iterations must be >= 1");
    if (state.marks_used >= state.budget) throw ConfigError("mcts: no budget left to plan");

    const int horizon = std::min(cfg.depth, state.budget - state.marks_used);
    const auto n_actions = static_cast<int>(cfg.actions.size());

    std::vector<detail::MctsNode> nodes;
    nodes.push_back({-1, -1, 0, 0, 0.0, {}, state.canvas});

    RngStream rollout_rng = substream(cfg.seed, "mcts/rollout");
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    auto norm = [&](double v) { return vmax > vmin ? (v - vmin) / (vmax - vmin) : 0.5; };

    for (int it = 0; it < cfg.iterations; ++it) {
        // selection + one expansion
        int cur = 0;
        while (true) {
            if (nodes[cur].depth >= horizon) break;
            if (static_cast<int>(nodes[cur].children.size()) < n_actions) {
                const auto a = static_cast<int>(nodes[cur].children.size());
                detail::MctsNode child;
                child.parent = cur;
                child.action = a;
                child.depth = nodes[cur].depth + 1;
                child.canvas = nodes[cur].canvas;
                apply_action(child.canvas, cfg.actions[a], cfg.generator);
                nodes.push_back(std::move(child));
                nodes[cur].children.push_back(static_cast<int>(nodes.size()) - 1);
                cur = static_cast<int>(nodes.size()) - 1;
                break;
            }
            int best_child = nodes[cur].children[0];
            double best_score = -std::numeric_limits<double>::infinity();
            for (int c : nodes[cur].children) {
                const double mean = norm(nodes[c].value_sum / nodes[c].visits);
                const double score =
                    mean + cfg.exploration_c *
                               std::sqrt(std::log(static_cast<double>(nodes[cur].visits)) /
                                         nodes[c].visits);
                if (score > best_score) {
                    best_score = score;
                    best_child = c;
                }
            }
            cur = best_child;
        }

        // rollout to the horizon with uniform-random actions
        Canvas rollout = nodes[cur].canvas;
        for (int d = nodes[cur].depth; d < horizon; ++d)
            apply_action(rollout, cfg.actions[rollout_rng.below(cfg.actions.size())],
                         cfg.generator);
        const double value = evaluate(rollout, fitness_id, cfg.measure);
        vmin = std::min(vmin, value);
        vmax = std::max(vmax, value);

        for (int n = cur; n != -1; n = nodes[n].parent) {
            ++nodes[n].visits;
            nodes[n].value_sum += value;
        }
    }

    int best_action = 0, best_visits = -1;
    for (int c : nodes[0].children) {
        if (nodes[c].visits > best_visits) {
            best_visits = nodes[c].visits;
            best_action = nodes[c].action;
        }
    }
    if (stats) {
        stats->root_visits = nodes[0].visits;
        stats->root_child_visits.clear();
        for (int c : nodes[0].children) stats->root_child_visits.push_back(nodes[c].visits);
        stats->value_min = vmin;
        stats->value_max = vmax;
    }
    return best_action;
}

struct MctsDrawResult {
    Canvas canvas;
    std::vector<int> actions;
    std::vector<double> fitness_after;
};

/// Plan-and-commit loop: one fresh search per mark until the budget is spent.
inline MctsDrawResult mcts_draw_run(int width, int height, int budget, MeasureId fitness_id,
                                    const MctsConfig& cfg) {
    MctsDrawResult res;
    res.canvas = Canvas::filled(width, height, kWhite);
    for (int step = 0; step < budget; ++step) {
        PlanState st{res.canvas, step, budget};
        MctsConfig step_cfg = cfg;
        step_cfg.seed = substream(cfg.seed, "mcts/step", static_cast<uint64_t>(step)).next_u64();
        const int a = mcts_plan(st, fitness_id, step_cfg);
        apply_action(res.canvas, cfg.actions[a], cfg.generator);
        res.actions.push_back(a);
        res.fitness_after.push_back(evaluate(res.canvas, fitness_id, cfg.measure));
    }
    return res;
}

/// Baseline for experiments: same action set, uniformly random choices.
inline MctsDrawResult random_policy_draw_run(int width, int height, int budget,
                                             MeasureId fitness_id, const MctsConfig& cfg) {
    MctsDrawResult res;
    res.canvas = Canvas::filled(width, height, kWhite);
    RngStream rng = substream(cfg.seed, "random-policy");
    for (int step = 0; step < budget; ++step) {
        const auto a = static_cast<int>(rng.below(cfg.actions.size()));
        apply_action(res.canvas, cfg.actions[a], cfg.generator);
        res.actions.push_back(a);
        res.fitness_after.push_back(evaluate(res.canvas, fitness_id, cfg.measure));
    }
    return res;
}

/// Default action set: four frozen parameter presets per drawing module.
inline std::vector<MctsAction> default_action_set(int canvas_min_dim, uint64_t seed = 12345) {
    std::vector<MctsAction> actions;
    RngStream rng(seed);
    for (GeneratorId id : kAllGenerators) {
        for (int preset = 0; preset < 4; ++preset) {
            Genome g = random_genome(id, rng, canvas_min_dim);
            actions.push_back({generator_name(id) + "/" + std::to_string(preset), g});
        }
    }
    return actions;
}

// ---- generational GA ----

struct GaConfig {
    double mutation_sigma = 0.5;
    double init_sigma = 0.5;  // spread of the initial population around the template
    uint64_t seed = 0;
    int canvas_width = 64;
    int canvas_height = 64;
    GeneratorOptions generator;
};

struct GaResult {
    Genome best;
    double best_fitness = -std::numeric_limits<double>::infinity();
    std::vector<double> best_so_far;  // one entry per fitness evaluation
};

/// Tournament-2 selection, Gaussian mutation, elitism of one. The incumbent
/// best is carried over unmutated, so sigma = 0 preserves it exactly.
inline GaResult ga_evolve(const std::function<double(const Genome&)>& fitness_fn,
                          const Genome& genome_template, int pop_size, int generations,
                          const GaConfig& cfg) {
    if (pop_size < 4) throw ConfigError("ga: population size must be >= 4");

    RngStream init_rng = substream(cfg.seed, "ga/init");
    RngStream select_rng = substream(cfg.seed, "ga/select");
    RngStream mutate_rng = substream(cfg.seed, "ga/mutate");

    std::vector<Genome> pop(pop_size, genome_template);
    for (auto& g : pop) g = mutate(genome_template, cfg.init_sigma, init_rng);

    GaResult res;
    res.best = pop[0];
    std::vector<double> fit(pop_size);

    for (int gen = 0; gen <= generations; ++gen) {
        for (int i = 0; i < pop_size; ++i) {
            double f = fitness_fn(pop[i]);
            if (std::isnan(f)) f = -std::numeric_limits<double>::infinity();
            fit[i] = f;
            if (f > res.best_fitness) {
                res.best_fitness = f;
                res.best = pop[i];
            }
            res.best_so_far.push_back(res.best_fitness);
        }
        if (gen == generations) break;

        std::vector<Genome> next;
        next.reserve(pop_size);
        next.push_back(res.best);  // elitism of 1
        while (static_cast<int>(next.size()) < pop_size) {
            const auto a = static_cast<int>(select_rng.below(pop_size));
            const auto b = static_cast<int>(select_rng.below(pop_size));
            const Genome& parent = fit[a] >= fit[b] ? pop[a] : pop[b];
            next.push_back(mutate(parent, cfg.mutation_sigma, mutate_rng));
        }
        pop = std::move(next);
    }
    return res;
}

}  // namespace drawgames
