#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "drawgames/search.hpp"

using namespace drawgames;

namespace {

Genome trivial_genome(double value = 0.0) {
    Genome g;
    g.module = GeneratorId::LineField;
    g.params = {value, 20, 5, 0, 1};
    g.seed = 1;
    return g;
}

}  // namespace

TEST_CASE("archive insertion: empty cell, strict improvement, ties") {
    Archive a = Archive::with_default_bounds({MeasureId::NegativeEntropy, MeasureId::RegionCount});
    REQUIRE(a.insert(trivial_genome(), 1.0, {-4.0, 3.0}));
    REQUIRE(a.coverage() == 1);

    REQUIRE_FALSE(a.insert(trivial_genome(1), 0.5, {-4.0, 3.0}));
    REQUIRE(a.cells().begin()->second.fitness == 1.0);

    REQUIRE_FALSE(a.insert(trivial_genome(2), 1.0, {-4.0, 3.0}));  // tie keeps incumbent
    REQUIRE(a.cells().begin()->second.genome.params[0] == 0.0);

    REQUIRE(a.insert(trivial_genome(3), 1.5, {-4.0, 3.0}));
    REQUIRE(a.cells().begin()->second.fitness == 1.5);
}

TEST_CASE("descriptors outside bounds clamp into edge cells") {
    Archive a({MeasureId::FillCentralCircle, MeasureId::RegionEntropy}, {{{0.0, 1.0}, {0.0, 8.0}}},
              16);
    REQUIRE(a.insert(trivial_genome(), 0.1, {-100.0, 100.0}));
    const int key = a.cells().begin()->first;
    REQUIRE(key / 16 == 0);
    REQUIRE(key % 16 == 15);
}

TEST_CASE("archive export/import round-trips byte-identically") {
    Archive a = Archive::with_default_bounds({MeasureId::NegativeEntropy, MeasureId::RegionCount});
    REQUIRE(archive_export(a) == "cell_i,cell_j,desc_0,desc_1,fitness,module,seed,params\n");

    a.insert(trivial_genome(17.25), 0.75, {-3.3, 4.2});
    const std::string one = archive_export(a);
    REQUIRE(std::count(one.begin(), one.end(), '\n') == 2);

    RngStream rng(3);
    for (int i = 0; i < 40; ++i) {
        Genome g = random_genome(GeneratorId::OscillatoryArm, rng, 64);
        a.insert(g, rng.next_double(), {rng.uniform(-8, 0), rng.uniform(0, 8)});
    }
    const std::string csv = archive_export(a);
    Archive back = archive_import(csv, a.descriptor_ids(), a.bounds(), a.resolution());
    REQUIRE(archive_export(back) == csv);
}

TEST_CASE("map-elites: seed phase only, monotone coverage and cell fitness, determinism") {
    MapElitesConfig cfg;
    cfg.module = GeneratorId::LineField;
    cfg.initial_population = 30;
    cfg.seed = 11;
    cfg.canvas_width = cfg.canvas_height = 64;

    auto render = [&](const Genome& g) { return render_genome(g, 64, 64, cfg.generator); };

    auto seeded = map_elites_run(render, MeasureId::FillCentralCircle,
                                 {MeasureId::NegativeEntropy, MeasureId::RegionCount}, 30, cfg);
    REQUIRE(seeded.curve.size() == 30);
    REQUIRE(seeded.archive.coverage() <= 30);
    REQUIRE(seeded.seed_phase_best == seeded.curve.back().best_fitness);

    std::map<int, double> cell_fitness;
    int64_t last_coverage = 0;
    bool monotone = true;
    MapElitesConfig instrumented = cfg;
    instrumented.on_eval = [&](int64_t, bool, const Archive& a) {
        monotone = monotone && static_cast<int64_t>(a.coverage()) >= last_coverage;
        last_coverage = static_cast<int64_t>(a.coverage());
        for (const auto& [key, elite] : a.cells()) {
            auto it = cell_fitness.find(key);
            if (it != cell_fitness.end() && elite.fitness < it->second) monotone = false;
            cell_fitness[key] = elite.fitness;
        }
    };
    auto run = map_elites_run(render, MeasureId::FillCentralCircle,
                              {MeasureId::NegativeEntropy, MeasureId::RegionCount}, 400,
                              instrumented);
    REQUIRE(monotone);
    REQUIRE(run.archive.coverage() >= seeded.archive.coverage());

    auto rerun = map_elites_run(render, MeasureId::FillCentralCircle,
                                {MeasureId::NegativeEntropy, MeasureId::RegionCount}, 400, cfg);
    REQUIRE(archive_export(rerun.archive) == archive_export(run.archive));

    REQUIRE_THROWS_AS(map_elites_run(render, MeasureId::FillCentralCircle,
                                     {MeasureId::NegativeEntropy, MeasureId::RegionCount}, 10,
                                     cfg),
                      ConfigError);
}

TEST_CASE("mcts: dominant action wins, first action on one iteration, visit accounting") {
    MctsConfig cfg;
    cfg.actions.push_back({"noop", Genome{GeneratorId::LineField, {0, 10, 0, 0, 1}, 1}});
    cfg.actions.push_back({"fill", Mark{DiscMark{32, 32, 23, kBlack}}});
    cfg.actions.push_back({"corner", Mark{DiscMark{2, 2, 6, kBlack}}});
    cfg.depth = 1;
    cfg.iterations = 30;
    cfg.seed = 5;

    PlanState st{Canvas::filled(64, 64, kWhite), 0, 10};
    MctsStats stats;
    const int best = mcts_plan(st, MeasureId::FillCentralCircle, cfg, &stats);
    REQUIRE(best == 1);
    REQUIRE(stats.root_visits == cfg.iterations);
    int total = 0;
    for (int v : stats.root_child_visits) total += v;
    REQUIRE(total == cfg.iterations);
    REQUIRE(stats.value_max >= stats.value_min);

    MctsConfig one = cfg;
    one.iterations = 1;
    REQUIRE(mcts_plan(st, MeasureId::FillCentralCircle, one) == 0);

    MctsConfig empty = cfg;
    empty.actions.clear();
    REQUIRE_THROWS_AS(mcts_plan(st, MeasureId::FillCentralCircle, empty), ConfigError);
}

TEST_CASE("mcts draw run: budget respected and deterministic") {
    MctsConfig cfg;
    cfg.actions = default_action_set(64);
    cfg.depth = 3;
    cfg.iterations = 20;
    cfg.seed = 9;

    auto a = mcts_draw_run(64, 64, 5, MeasureId::FillCentralCircle, cfg);
    REQUIRE(a.actions.size() == 5);
    REQUIRE(a.fitness_after.size() == 5);
    auto b = mcts_draw_run(64, 64, 5, MeasureId::FillCentralCircle, cfg);
    REQUIRE(a.actions == b.actions);
    REQUIRE(export_ppm(a.canvas) == export_ppm(b.canvas));
}

TEST_CASE("ga: zero generations, monotone trace, sigma-zero elitism, determinism") {
    // fitness depends on params only, so seed churn cannot disturb it
    auto fitness = [](const Genome& g) {
        double s = 0.0;
        for (double p : g.params) s -= p * p;
        return s;
    };
    Genome tmpl = trivial_genome(1.0);

    GaConfig cfg;
    cfg.seed = 21;
    auto zero_gen = ga_evolve(fitness, tmpl, 8, 0, cfg);
    REQUIRE(zero_gen.best_so_far.size() == 8);

    auto run = ga_evolve(fitness, tmpl, 8, 20, cfg);
    REQUIRE(run.best_so_far.size() == 8 * 21);
    for (size_t i = 1; i < run.best_so_far.size(); ++i)
        REQUIRE(run.best_so_far[i] >= run.best_so_far[i - 1]);
    REQUIRE(run.best_fitness == fitness(run.best));

    GaConfig frozen = cfg;
    frozen.mutation_sigma = 0.0;
    auto still = ga_evolve(fitness, tmpl, 8, 10, frozen);
    REQUIRE(still.best_so_far.back() ==
            *std::max_element(still.best_so_far.begin(), still.best_so_far.begin() + 8));

    auto rerun = ga_evolve(fitness, tmpl, 8, 20, cfg);
    REQUIRE(rerun.best_so_far == run.best_so_far);
    REQUIRE(rerun.best.params == run.best.params);

    REQUIRE_THROWS_AS(ga_evolve(fitness, tmpl, 3, 1, cfg), ConfigError);
}

TEST_CASE("default action set covers every module with four presets") {
    auto actions = default_action_set(64);
    REQUIRE(actions.size() == 32);
    for (const auto& a : actions) REQUIRE(std::holds_alternative<Genome>(a.payload));
}
