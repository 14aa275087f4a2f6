#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "drawgames/canvas.hpp"
#include "drawgames/net.hpp"
#include "drawgames/rng.hpp"
#include "drawgames/text.hpp"

namespace drawgames {

// Desk-scale drawing games: a drawer policy A trained by advantage
// actor-critic against a viewer B, reconstructor R, mapper M, and a frozen
// pre-trained autoencoder. Scenes and drawings are G x G luminance grids.

// ---- scenes ----

struct Scene {
    int grid_size = 16;      // G
    int position_index = 0;  // in [0, K)
    Eigen::VectorXd grid;    // G*G luminance values in [0, 1]
};

inline int lattice_side(int K) {
    const auto m = static_cast<int>(std::llround(std::sqrt(static_cast<double>(K))));
    if (m * m != K) throw ConfigError("K must be a perfect square");
    return m;
}

inline constexpr int kSceneDiscRadius = 2;

/// Disc center for a lattice index: centers are spaced 2 cells apart around
/// the grid center, so every disc keeps a margin of 2 cells from the border.
inline std::pair<int, int> scene_center(int position_index, int K, int G) {
    const int m = lattice_side(K);
    if (position_index < 0 || position_index >= K) throw ConfigError("position index out of range");
    const int c_min = G / 2 - (m - 1), c_max = G / 2 + (m - 1);
    if (c_min - kSceneDiscRadius < 0 || c_max + kSceneDiscRadius > G - 1)
        throw ConfigError("scene lattice does not fit in the grid with margin 2");
    const int row = position_index / m, col = position_index % m;
    return {G / 2 + 2 * col - (m - 1), G / 2 + 2 * row - (m - 1)};
}

/// One bright disc (radius 2 cells) on a dark background; distinct indices
/// give distinct grids.
inline Scene make_scene(int position_index, int K, int G = 16) {
    const auto [cx, cy] = scene_center(position_index, K, G);
    Scene s;
    s.grid_size = G;
    s.position_index = position_index;
    s.grid = Eigen::VectorXd::Zero(static_cast<ptrdiff_t>(G) * G);
    const int r2 = kSceneDiscRadius * kSceneDiscRadius;
    for (int y = 0; y < G; ++y)
        for (int x = 0; x < G; ++x)
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r2)
                s.grid[static_cast<ptrdiff_t>(y) * G + x] = 1.0;
    return s;
}

inline std::vector<Scene> all_scenes(int K, int G) {
    std::vector<Scene> out;
    out.reserve(K);
    for (int i = 0; i < K; ++i) out.push_back(make_scene(i, K, G));
    return out;
}

/// Cyclic +1 horizontal lattice translation; the fixed scene transform of the
/// equivariance game.
inline int translate_position(int position_index, int K) {
    const int m = lattice_side(K);
    const int row = position_index / m, col = position_index % m;
    return row * m + (col + 1) % m;
}

// ---- rewards ----

inline constexpr double kRewardEps = 1e-6;

/// reward = -ln(loss + eps); strictly decreasing in loss, finite at loss 0.
inline double reward_from_loss(double loss) { return -std::log(loss + kRewardEps); }

// ---- drawing actions ----

/// Actions index [0, 2 G^2): cell in [0, G^2) plus intensity bit, stamping a
/// radius-2 disc of that intensity at the cell.
inline int drawing_action_count(int G) { return 2 * G * G; }

inline void apply_drawing_action(Eigen::VectorXd& drawing, int action, int G) {
    const int intensity = action / (G * G);
    const int cell = action % (G * G);
    const int cx = cell % G, cy = cell / G;
    const int r2 = kSceneDiscRadius * kSceneDiscRadius;
    for (int dy = -kSceneDiscRadius; dy <= kSceneDiscRadius; ++dy) {
        for (int dx = -kSceneDiscRadius; dx <= kSceneDiscRadius; ++dx) {
            if (dx * dx + dy * dy > r2) continue;
            const int x = cx + dx, y = cy + dy;
            if (x < 0 || x >= G || y < 0 || y >= G) continue;
            drawing[static_cast<ptrdiff_t>(y) * G + x] = intensity;
        }
    }
}

// ---- drawer (policy + value baseline) ----

struct Drawer {
    DenseNet policy;  // softmax over 2 G^2 actions
    DenseNet value;   // scalar baseline
    AdamState policy_opt, value_opt;
};

inline Eigen::VectorXd policy_input(const Scene& scene, int t, int T) {
    const ptrdiff_t n = scene.grid.size();
    Eigen::VectorXd in = Eigen::VectorXd::Zero(n + T);
    in.head(n) = scene.grid;
    in[n + t] = 1.0;
    return in;
}

inline Drawer make_drawer(int G, int T, int hidden, uint64_t master_seed) {
    const int in = G * G + T;
    RngStream pol_rng = substream(master_seed, "init/policy");
    RngStream val_rng = substream(master_seed, "init/value");
    Drawer d;
    d.policy = DenseNet::make({in, hidden, drawing_action_count(G)}, Head::Softmax, pol_rng);
    d.value = DenseNet::make({in, hidden, 1}, Head::Linear, val_rng);
    return d;
}

enum class DrawerMode {
    Trained,        // sample from the policy, record steps for the update
    UniformRandom,  // uniform-random actions, policy untouched
    ConstantEmpty,  // the degenerate always-the-same (blank) drawing
};

struct DrawStep {
    Eigen::VectorXd input;
    Activations acts;
    int action = 0;
};

struct DrawnEpisode {
    Eigen::VectorXd drawing;
    std::vector<DrawStep> steps;  // empty unless DrawerMode::Trained
};

inline DrawnEpisode draw_episode(const DenseNet& policy, const Scene& scene, int T,
                                 RngStream& rng, DrawerMode mode = DrawerMode::Trained) {
    const int G = scene.grid_size;
    DrawnEpisode ep;
    ep.drawing = Eigen::VectorXd::Zero(static_cast<ptrdiff_t>(G) * G);
    for (int t = 0; t < T; ++t) {
        int action = 0;
        if (mode == DrawerMode::Trained) {
            DrawStep step;
            step.input = policy_input(scene, t, T);
            step.acts = forward(policy, step.input);
            action = sample_categorical(step.acts.output, rng);
            step.action = action;
            ep.steps.push_back(std::move(step));
        } else if (mode == DrawerMode::UniformRandom) {
            action = static_cast<int>(rng.below(static_cast<uint64_t>(drawing_action_count(G))));
        } else {
            action = 0;  // intensity 0 at cell 0: a no-op stamp
        }
        apply_drawing_action(ep.drawing, action, G);
    }
    return ep;
}

/// Deterministic argmax rollout, used for final per-position montages.
inline Eigen::VectorXd draw_greedy(const DenseNet& policy, const Scene& scene, int T) {
    const int G = scene.grid_size;
    Eigen::VectorXd drawing = Eigen::VectorXd::Zero(static_cast<ptrdiff_t>(G) * G);
    for (int t = 0; t < T; ++t) {
        const auto acts = forward(policy, policy_input(scene, t, T));
        int best = 0;
        acts.output.maxCoeff(&best);
        apply_drawing_action(drawing, best, G);
    }
    return drawing;
}

// ---- advantage actor-critic update ----

struct AcStats {
    double policy_loss = 0.0;
    double value_loss = 0.0;
    double mean_entropy = 0.0;
};

/// Single-worker A2C: policy loss -log pi(a|s) (R - V(s)) with an entropy
/// bonus, value loss (R - V(s))^2. The advantage is treated as a constant in
/// the policy term. All steps share the episode's terminal reward (gamma=1).
inline AcStats actor_critic_update(Drawer& d, std::span<const DrawStep> steps, double reward,
                                   double entropy_beta, double lr_policy, double lr_value) {
    if (steps.empty()) return {};
    Eigen::VectorXd gpol = Eigen::VectorXd::Zero(d.policy.param_count());
    Eigen::VectorXd gval = Eigen::VectorXd::Zero(d.value.param_count());
    AcStats stats;
    for (const DrawStep& step : steps) {
        const auto vacts = forward(d.value, step.input);
        const double v = vacts.output[0];
        const double advantage = reward - v;

        const Eigen::VectorXd& p = step.acts.output;
        Eigen::VectorXd dLdp = Eigen::VectorXd::Zero(p.size());
        dLdp[step.action] = -advantage / std::max(p[step.action], 1e-12);
        if (entropy_beta != 0.0) dLdp -= entropy_beta * categorical_entropy_grad(p);
        gpol += backward(d.policy, step.acts, dLdp);

        Eigen::VectorXd dv(1);
        dv[0] = -2.0 * advantage;  // d/dv (reward - v)^2
        gval += backward(d.value, vacts, dv);

        stats.policy_loss += -std::log(std::max(p[step.action], 1e-12)) * advantage;
        stats.value_loss += advantage * advantage;
        stats.mean_entropy += categorical_entropy(p);
    }
    const double n = static_cast<double>(steps.size());
    gpol /= n;
    gval /= n;
    adam_step(d.policy, gpol, d.policy_opt, lr_policy);
    adam_step(d.value, gval, d.value_opt, lr_value);
    stats.policy_loss /= n;
    stats.value_loss /= n;
    stats.mean_entropy /= n;
    return stats;
}

// ---- shared configuration and report ----

struct GameConfig {
    int K = 9;
    int G = 16;
    int T = 4;
    int64_t episodes = 20000;
    uint64_t seed = 0;
    int hidden = 32;
    int ae_hidden = 16;
    double lr_policy = 2e-3;
    double lr_value = 2e-3;
    double lr_viewer = 2e-3;
    double lr_reconstructor = 2e-3;
    double lr_mapper = 2e-3;
    double lr_ae = 1e-2;
    int64_t ae_epochs = 5000;
    double entropy_beta = 0.01;
    double w_b = 1.0, w_r = 1.0, w_ae = 1.0, w_e = 1.0;
    /// Episodes spent training the mapper on the initial policy's drawings
    /// before the drawer starts updating. A freshly initialized mapper outputs
    /// near-zero, which hands its reward ceiling to the blank drawing and
    /// collapses the drawer onto the degenerate constant solution before
    /// reconstruction can pay. The reconstructor is deliberately left cold so
    /// the drawer's early reconstruction signal stays alive.
    int64_t mapper_warmup = 2000;
    int64_t log_every = 500;
    int64_t eval_pairs = 400;
    DrawerMode drawer_mode = DrawerMode::Trained;
};

struct MetricsRow {
    int64_t episode = 0;
    double reward = 0.0;  // running mean over the logging window
    double r_b = 0.0, r_r = 0.0, r_ae = 0.0, r_e = 0.0;
    double loss = 0.0;      // running mean of the game's primary loss
    double accuracy = 0.0;  // held-out accuracy where applicable
};

struct TrainingReport {
    std::string game;
    GameConfig config;
    std::vector<MetricsRow> metrics;
    std::vector<Eigen::VectorXd> final_drawings;  // greedy, one per position
    double final_metric = 0.0;     // headline: accuracy (a), MSE (b, e), reward (c, d)
    double baseline_metric = 0.0;  // chance / mean-predictor / best-constant baseline
    uint64_t ae_hash_before = 0, ae_hash_after = 0;

    std::string metrics_csv() const {
        std::string out = "episode,reward,r_b,r_r,r_ae,r_e,loss,accuracy\n";
        for (const auto& m : metrics) {
            out += std::to_string(m.episode) + "," + fmt_g17(m.reward) + "," + fmt_g17(m.r_b) +
                   "," + fmt_g17(m.r_r) + "," + fmt_g17(m.r_ae) + "," + fmt_g17(m.r_e) + "," +
                   fmt_g17(m.loss) + "," + fmt_g17(m.accuracy) + "\n";
        }
        return out;
    }
};

/// MSE of always predicting the mean scene: the information-free floor every
/// reconstruction run is compared against.
inline double mean_predictor_mse(const std::vector<Scene>& scenes) {
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(scenes[0].grid.size());
    for (const auto& s : scenes) mean += s.grid;
    mean /= static_cast<double>(scenes.size());
    double acc = 0.0;
    for (const auto& s : scenes) acc += mse(mean, s.grid);
    return acc / static_cast<double>(scenes.size());
}

// ---- montage export ----

/// Tile per-position drawings into a sqrt(K) x sqrt(K) grid PPM, each cell
/// upscaled by `scale`, with 1px separators.
inline std::vector<uint8_t> drawings_montage_ppm(const std::vector<Eigen::VectorXd>& drawings,
                                                 int G, int scale = 8) {
    const int m = lattice_side(static_cast<int>(drawings.size()));
    const int cell = G * scale;
    const int W = m * cell + (m + 1), H = m * cell + (m + 1);
    std::vector<uint8_t> rgb(static_cast<size_t>(W) * H * 3, 96);  // separator gray
    for (int ty = 0; ty < m; ++ty) {
        for (int tx = 0; tx < m; ++tx) {
            const auto& d = drawings[static_cast<size_t>(ty) * m + tx];
            const int ox = 1 + tx * (cell + 1), oy = 1 + ty * (cell + 1);
            for (int y = 0; y < cell; ++y) {
                for (int x = 0; x < cell; ++x) {
                    const double v = std::clamp(d[static_cast<ptrdiff_t>(y / scale) * G + x / scale], 0.0, 1.0);
                    const auto byte = static_cast<uint8_t>(std::lround(v * 255.0));
                    const size_t o = (static_cast<size_t>(oy + y) * W + ox + x) * 3;
                    rgb[o] = rgb[o + 1] = rgb[o + 2] = byte;
                }
            }
        }
    }
    return write_ppm_bytes(W, H, rgb.data());
}

inline std::vector<uint8_t> drawing_to_ppm(const Eigen::VectorXd& drawing, int G, int scale = 8) {
    const int W = G * scale;
    std::vector<uint8_t> rgb(static_cast<size_t>(W) * W * 3);
    for (int y = 0; y < W; ++y) {
        for (int x = 0; x < W; ++x) {
            const double v = std::clamp(drawing[static_cast<ptrdiff_t>(y / scale) * G + x / scale], 0.0, 1.0);
            const auto byte = static_cast<uint8_t>(std::lround(v * 255.0));
            const size_t o = (static_cast<size_t>(y) * W + x) * 3;
            rgb[o] = rgb[o + 1] = rgb[o + 2] = byte;
        }
    }
    return write_ppm_bytes(W, W, rgb.data());
}

// ---- game a: pure communication ----

namespace detail {

inline Eigen::VectorXd viewer_input(const Eigen::VectorXd& drawing, const Scene& scene_b) {
    Eigen::VectorXd in(drawing.size() + scene_b.grid.size());
    in << drawing, scene_b.grid;
    return in;
}

/// Held-out accuracy of B over balanced same/different pairs with drawings
/// sampled from the current policy. Uses its own stream, so evaluation never
/// perturbs training.
inline double viewer_accuracy(const DenseNet& policy, const DenseNet& viewer,
                              const std::vector<Scene>& scenes, const GameConfig& cfg,
                              int64_t pairs, RngStream rng) {
    const int K = static_cast<int>(scenes.size());
    int64_t correct = 0;
    for (int64_t i = 0; i < pairs; ++i) {
        const auto a = static_cast<int>(rng.below(K));
        const bool same = (i % 2) == 0;  // balanced by construction
        int b = a;
        if (!same) b = static_cast<int>((a + 1 + rng.below(K - 1)) % K);
        Eigen::VectorXd drawing;
        if (cfg.drawer_mode == DrawerMode::Trained) {
            drawing = draw_episode(policy, scenes[a], cfg.T, rng).drawing;
        } else {
            drawing = draw_episode(policy, scenes[a], cfg.T, rng, cfg.drawer_mode).drawing;
        }
        const auto acts = forward(viewer, viewer_input(drawing, scenes[b]));
        int pred = 0;
        acts.output.maxCoeff(&pred);
        correct += (pred == (same ? 1 : 0));
    }
    return static_cast<double>(correct) / static_cast<double>(pairs);
}

}  // namespace detail

/// Game a. A draws its scene; B sees (drawing, own scene) and classifies
/// same/different. B trains on cross entropy; A's episode reward is
/// reward_from_loss of B's loss on that episode, taken before B's update.
inline TrainingReport play_communication_game(const GameConfig& cfg) {
    const auto scenes = all_scenes(cfg.K, cfg.G);
    Drawer drawer = make_drawer(cfg.G, cfg.T, cfg.hidden, cfg.seed);
    RngStream viewer_rng = substream(cfg.seed, "init/viewer");
    DenseNet viewer =
        DenseNet::make({2 * cfg.G * cfg.G, cfg.hidden, 2}, Head::Softmax, viewer_rng);
    AdamState viewer_opt;

    RngStream scene_rng = substream(cfg.seed, "scenes");
    RngStream pair_rng = substream(cfg.seed, "pairs");
    RngStream policy_rng = substream(cfg.seed, "policy");

    TrainingReport report;
    report.game = "communication";
    report.config = cfg;

    double win_reward = 0.0, win_loss = 0.0;
    int64_t win_n = 0;
    for (int64_t ep = 0; ep < cfg.episodes; ++ep) {
        const auto a = static_cast<int>(scene_rng.below(cfg.K));
        const bool same = pair_rng.coin(0.5);
        const int b =
            same ? a : static_cast<int>((a + 1 + pair_rng.below(cfg.K - 1)) % cfg.K);
        const int label = same ? 1 : 0;

        auto episode = draw_episode(drawer.policy, scenes[a], cfg.T, policy_rng, cfg.drawer_mode);

        const auto vin = detail::viewer_input(episode.drawing, scenes[b]);
        const auto vacts = forward(viewer, vin);
        const double ce = cross_entropy(vacts.output, label);
        const double reward = reward_from_loss(ce);

        adam_step(viewer, backward(viewer, vacts, cross_entropy_grad(vacts.output, label)),
                  viewer_opt, cfg.lr_viewer);
        if (cfg.drawer_mode == DrawerMode::Trained)
            actor_critic_update(drawer, episode.steps, reward, cfg.entropy_beta, cfg.lr_policy,
                                cfg.lr_value);

        win_reward += reward;
        win_loss += ce;
        ++win_n;
        if ((ep + 1) % cfg.log_every == 0 || ep + 1 == cfg.episodes) {
            MetricsRow row;
            row.episode = ep + 1;
            row.reward = win_reward / static_cast<double>(win_n);
            row.r_b = row.reward;
            row.loss = win_loss / static_cast<double>(win_n);
            row.accuracy = detail::viewer_accuracy(drawer.policy, viewer, scenes, cfg,
                                                   cfg.eval_pairs,
                                                   substream(cfg.seed, "eval", ep + 1));
            report.metrics.push_back(row);
            win_reward = win_loss = 0.0;
            win_n = 0;
        }
    }

    for (const auto& s : scenes)
        report.final_drawings.push_back(draw_greedy(drawer.policy, s, cfg.T));
    report.final_metric = detail::viewer_accuracy(drawer.policy, viewer, scenes, cfg, 1000,
                                                  substream(cfg.seed, "final-eval"));
    report.baseline_metric = 0.5;
    return report;
}

// ---- game b: pure reconstruction ----

/// Game b. R reconstructs the scene from the drawing alone (MSE); A's reward
/// is reward_from_loss of R's error before R updates.
inline TrainingReport play_reconstruction_game(const GameConfig& cfg) {
    const auto scenes = all_scenes(cfg.K, cfg.G);
    Drawer drawer = make_drawer(cfg.G, cfg.T, cfg.hidden, cfg.seed);
    RngStream recon_rng = substream(cfg.seed, "init/reconstructor");
    DenseNet recon =
        DenseNet::make({cfg.G * cfg.G, cfg.hidden, cfg.G * cfg.G}, Head::Linear, recon_rng);
    AdamState recon_opt;

    RngStream scene_rng = substream(cfg.seed, "scenes");
    RngStream policy_rng = substream(cfg.seed, "policy");

    TrainingReport report;
    report.game = "reconstruction";
    report.config = cfg;

    double win_reward = 0.0, win_loss = 0.0;
    int64_t win_n = 0;
    for (int64_t ep = 0; ep < cfg.episodes; ++ep) {
        const auto a = static_cast<int>(scene_rng.below(cfg.K));
        auto episode = draw_episode(drawer.policy, scenes[a], cfg.T, policy_rng, cfg.drawer_mode);

        const auto racts = forward(recon, episode.drawing);
        const double loss = mse(racts.output, scenes[a].grid);
        const double reward = reward_from_loss(loss);

        adam_step(recon, backward(recon, racts, mse_grad(racts.output, scenes[a].grid)), recon_opt,
                  cfg.lr_reconstructor);
        if (cfg.drawer_mode == DrawerMode::Trained)
            actor_critic_update(drawer, episode.steps, reward, cfg.entropy_beta, cfg.lr_policy,
                                cfg.lr_value);

        win_reward += reward;
        win_loss += loss;
        ++win_n;
        if ((ep + 1) % cfg.log_every == 0 || ep + 1 == cfg.episodes) {
            MetricsRow row;
            row.episode = ep + 1;
            row.reward = win_reward / static_cast<double>(win_n);
            row.r_r = row.reward;
            row.loss = win_loss / static_cast<double>(win_n);
            report.metrics.push_back(row);
            win_reward = win_loss = 0.0;
            win_n = 0;
        }
    }

    double final_mse = 0.0;
    for (const auto& s : scenes) {
        auto drawing = draw_greedy(drawer.policy, s, cfg.T);
        report.final_drawings.push_back(drawing);
        final_mse += mse(forward(recon, drawing).output, s.grid);
    }
    report.final_metric = final_mse / static_cast<double>(cfg.K);
    report.baseline_metric = mean_predictor_mse(scenes);
    return report;
}

// ---- game c: frozen pre-trained autoencoder ----

struct PretrainResult {
    DenseNet ae;
    double final_mse = 0.0;
};

/// Train the autoencoder on scene->scene only (full-batch Adam). Stops early
/// once well under the acceptance threshold.
inline PretrainResult pretrain_autoencoder(const std::vector<Scene>& scenes, int64_t epochs,
                                           double lr, int ae_hidden, uint64_t master_seed) {
    const auto n = static_cast<ptrdiff_t>(scenes[0].grid.size());
    RngStream rng = substream(master_seed, "init/autoencoder");
    PretrainResult out;
    out.ae = DenseNet::make({static_cast<int>(n), ae_hidden, static_cast<int>(n)}, Head::Linear,
                            rng);
    AdamState opt;
    for (int64_t epoch = 0; epoch < epochs; ++epoch) {
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(out.ae.param_count());
        double loss = 0.0;
        for (const auto& s : scenes) {
            const auto acts = forward(out.ae, s.grid);
            loss += mse(acts.output, s.grid);
            grad += backward(out.ae, acts, mse_grad(acts.output, s.grid));
        }
        const double kn = static_cast<double>(scenes.size());
        loss /= kn;
        grad /= kn;
        adam_step(out.ae, grad, opt, lr);
        out.final_mse = loss;
        if (loss < 1e-5) break;
    }
    // report the post-update loss
    double loss = 0.0;
    for (const auto& s : scenes) loss += mse(forward(out.ae, s.grid).output, s.grid);
    out.final_mse = loss / static_cast<double>(scenes.size());
    return out;
}

/// Best achievable mean reward for a drawer that always produces the same
/// drawing, maximized over the blank drawing and each scene's own pattern.
inline double constant_drawing_ae_baseline(const DenseNet& ae, const std::vector<Scene>& scenes) {
    std::vector<Eigen::VectorXd> candidates;
    candidates.push_back(Eigen::VectorXd::Zero(scenes[0].grid.size()));
    for (const auto& s : scenes) candidates.push_back(s.grid);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& d : candidates) {
        const auto out = forward(ae, d).output;
        double r = 0.0;
        for (const auto& s : scenes) r += reward_from_loss(mse(out, s.grid));
        best = std::max(best, r / static_cast<double>(scenes.size()));
    }
    return best;
}

/// Game c. The autoencoder is pre-trained on scenes only and frozen; A's
/// reward is reward_from_loss of the AE's reconstruction of the scene from
/// the drawing. The report carries the AE parameter hash before and after.
inline TrainingReport play_ae_game(const GameConfig& cfg, const DenseNet& ae) {
    const auto scenes = all_scenes(cfg.K, cfg.G);
    Drawer drawer = make_drawer(cfg.G, cfg.T, cfg.hidden, cfg.seed);

    RngStream scene_rng = substream(cfg.seed, "scenes");
    RngStream policy_rng = substream(cfg.seed, "policy");

    TrainingReport report;
    report.game = "autoencoder";
    report.config = cfg;
    report.ae_hash_before = ae.param_hash();

    double win_reward = 0.0, win_loss = 0.0;
    int64_t win_n = 0;
    for (int64_t ep = 0; ep < cfg.episodes; ++ep) {
        const auto a = static_cast<int>(scene_rng.below(cfg.K));
        auto episode = draw_episode(drawer.policy, scenes[a], cfg.T, policy_rng, cfg.drawer_mode);

        const double loss = mse(forward(ae, episode.drawing).output, scenes[a].grid);
        const double reward = reward_from_loss(loss);
        if (cfg.drawer_mode == DrawerMode::Trained)
            actor_critic_update(drawer, episode.steps, reward, cfg.entropy_beta, cfg.lr_policy,
                                cfg.lr_value);

        win_reward += reward;
        win_loss += loss;
        ++win_n;
        if ((ep + 1) % cfg.log_every == 0 || ep + 1 == cfg.episodes) {
            MetricsRow row;
            row.episode = ep + 1;
            row.reward = win_reward / static_cast<double>(win_n);
            row.r_ae = row.reward;
            row.loss = win_loss / static_cast<double>(win_n);
            report.metrics.push_back(row);
            win_reward = win_loss = 0.0;
            win_n = 0;
        }
    }

    double final_reward = 0.0;
    for (const auto& s : scenes) {
        auto drawing = draw_greedy(drawer.policy, s, cfg.T);
        report.final_drawings.push_back(drawing);
        final_reward += reward_from_loss(mse(forward(ae, drawing).output, s.grid));
    }
    report.final_metric = final_reward / static_cast<double>(cfg.K);
    report.baseline_metric = constant_drawing_ae_baseline(ae, scenes);
    report.ae_hash_after = ae.param_hash();
    return report;
}

// ---- game d: equivariance ----

/// Game d. A draws D from the scene and D2 from the transformed scene; M
/// learns D -> D2 (the equivariance loss), R reconstructs both scenes from
/// their drawings. A's reward is w_r (r_R1 + r_R2) + w_e r_M, every term a
/// reward_from_loss taken before the corresponding network updates.
inline TrainingReport play_equivariance_game(const GameConfig& cfg) {
    const auto scenes = all_scenes(cfg.K, cfg.G);
    Drawer drawer = make_drawer(cfg.G, cfg.T, cfg.hidden, cfg.seed);
    RngStream recon_rng = substream(cfg.seed, "init/reconstructor");
    DenseNet recon =
        DenseNet::make({cfg.G * cfg.G, cfg.hidden, cfg.G * cfg.G}, Head::Linear, recon_rng);
    AdamState recon_opt;
    RngStream mapper_rng = substream(cfg.seed, "init/mapper");
    DenseNet mapper =
        DenseNet::make({cfg.G * cfg.G, cfg.hidden, cfg.G * cfg.G}, Head::Linear, mapper_rng);
    AdamState mapper_opt;

    RngStream scene_rng = substream(cfg.seed, "scenes");
    RngStream policy_rng = substream(cfg.seed, "policy");

    TrainingReport report;
    report.game = "equivariance";
    report.config = cfg;

    // Warmup is initialization, not game training: it always runs at a healthy
    // fixed rate so the mapper reliably reaches the mean-drawing predictor no
    // matter how slow the in-game mapper rate is.
    constexpr double kWarmupLr = 2e-3;
    RngStream warm_rng = substream(cfg.seed, "warmup");
    for (int64_t ep = 0; ep < cfg.mapper_warmup; ++ep) {
        const auto a = static_cast<int>(warm_rng.below(cfg.K));
        const int a2 = translate_position(a, cfg.K);
        const auto d1 = draw_episode(drawer.policy, scenes[a], cfg.T, warm_rng, cfg.drawer_mode);
        const auto d2 = draw_episode(drawer.policy, scenes[a2], cfg.T, warm_rng, cfg.drawer_mode);
        const auto m = forward(mapper, d1.drawing);
        adam_step(mapper, backward(mapper, m, mse_grad(m.output, d2.drawing)), mapper_opt,
                  kWarmupLr);
    }

    double win_reward = 0.0, win_r = 0.0, win_e = 0.0, win_loss = 0.0;
    int64_t win_n = 0;
    for (int64_t ep = 0; ep < cfg.episodes; ++ep) {
        const auto a = static_cast<int>(scene_rng.below(cfg.K));
        const int a2 = translate_position(a, cfg.K);

        auto ep1 = draw_episode(drawer.policy, scenes[a], cfg.T, policy_rng, cfg.drawer_mode);
        auto ep2 = draw_episode(drawer.policy, scenes[a2], cfg.T, policy_rng, cfg.drawer_mode);

        const auto r1acts = forward(recon, ep1.drawing);
        const auto r2acts = forward(recon, ep2.drawing);
        const auto macts = forward(mapper, ep1.drawing);
        const double mse_r1 = mse(r1acts.output, scenes[a].grid);
        const double mse_r2 = mse(r2acts.output, scenes[a2].grid);
        const double mse_m = mse(macts.output, ep2.drawing);

        const double r_recon = reward_from_loss(mse_r1) + reward_from_loss(mse_r2);
        const double r_equiv = reward_from_loss(mse_m);
        const double reward = cfg.w_r * r_recon + cfg.w_e * r_equiv;

        adam_step(recon, backward(recon, r1acts, mse_grad(r1acts.output, scenes[a].grid)),
                  recon_opt, cfg.lr_reconstructor);
        const auto r2acts_fresh = forward(recon, ep2.drawing);
        adam_step(recon,
                  backward(recon, r2acts_fresh, mse_grad(r2acts_fresh.output, scenes[a2].grid)),
                  recon_opt, cfg.lr_reconstructor);
        adam_step(mapper, backward(mapper, macts, mse_grad(macts.output, ep2.drawing)), mapper_opt,
                  cfg.lr_mapper);

        if (cfg.drawer_mode == DrawerMode::Trained) {
            std::vector<DrawStep> steps = std::move(ep1.steps);
            for (auto& s : ep2.steps) steps.push_back(std::move(s));
            actor_critic_update(drawer, steps, reward, cfg.entropy_beta, cfg.lr_policy,
                                cfg.lr_value);
        }

        win_reward += reward;
        win_r += r_recon;
        win_e += r_equiv;
        win_loss += mse_r1 + mse_r2;
        ++win_n;
        if ((ep + 1) % cfg.log_every == 0 || ep + 1 == cfg.episodes) {
            MetricsRow row;
            row.episode = ep + 1;
            row.reward = win_reward / static_cast<double>(win_n);
            row.r_r = win_r / static_cast<double>(win_n);
            row.r_e = win_e / static_cast<double>(win_n);
            row.loss = win_loss / static_cast<double>(2 * win_n);
            report.metrics.push_back(row);
            win_reward = win_r = win_e = win_loss = 0.0;
            win_n = 0;
        }
    }

    double final_reward = 0.0;
    for (const auto& s : scenes) {
        const auto& s2 = scenes[translate_position(s.position_index, cfg.K)];
        Eigen::VectorXd d1, d2;
        if (cfg.drawer_mode == DrawerMode::Trained) {
            d1 = draw_greedy(drawer.policy, s, cfg.T);
            d2 = draw_greedy(drawer.policy, s2, cfg.T);
        } else {
            RngStream tmp = substream(cfg.seed, "final-baseline", s.position_index);
            d1 = draw_episode(drawer.policy, s, cfg.T, tmp, cfg.drawer_mode).drawing;
            d2 = draw_episode(drawer.policy, s2, cfg.T, tmp, cfg.drawer_mode).drawing;
        }
        report.final_drawings.push_back(d1);
        const double r1 = reward_from_loss(mse(forward(recon, d1).output, s.grid));
        const double r2 = reward_from_loss(mse(forward(recon, d2).output, s2.grid));
        const double rm = reward_from_loss(mse(forward(mapper, d1).output, d2));
        final_reward += cfg.w_r * (r1 + r2) + cfg.w_e * rm;
    }
    report.final_metric = final_reward / static_cast<double>(cfg.K);
    return report;
}

// ---- game e: mixed losses ----

/// Game e (the paper runs it at K = 25). One drawer trained on the weighted
/// sum of all four rewards; B, R, M train concurrently on their own losses,
/// the autoencoder stays frozen. The logged total is checked against the
/// weighted component sum every episode.
inline TrainingReport play_mixed_game(const GameConfig& cfg, const DenseNet& ae) {
    const auto scenes = all_scenes(cfg.K, cfg.G);
    Drawer drawer = make_drawer(cfg.G, cfg.T, cfg.hidden, cfg.seed);
    RngStream viewer_rng = substream(cfg.seed, "init/viewer");
    DenseNet viewer =
        DenseNet::make({2 * cfg.G * cfg.G, cfg.hidden, 2}, Head::Softmax, viewer_rng);
    AdamState viewer_opt;
    RngStream recon_rng = substream(cfg.seed, "init/reconstructor");
    DenseNet recon =
        DenseNet::make({cfg.G * cfg.G, cfg.hidden, cfg.G * cfg.G}, Head::Linear, recon_rng);
    AdamState recon_opt;
    RngStream mapper_rng = substream(cfg.seed, "init/mapper");
    DenseNet mapper =
        DenseNet::make({cfg.G * cfg.G, cfg.hidden, cfg.G * cfg.G}, Head::Linear, mapper_rng);
    AdamState mapper_opt;

    RngStream scene_rng = substream(cfg.seed, "scenes");
    RngStream pair_rng = substream(cfg.seed, "pairs");
    RngStream policy_rng = substream(cfg.seed, "policy");

    TrainingReport report;
    report.game = "mixed";
    report.config = cfg;
    report.ae_hash_before = ae.param_hash();

    double win_total = 0.0, win_b = 0.0, win_r = 0.0, win_ae = 0.0, win_e = 0.0;
    int64_t win_n = 0;
    for (int64_t ep = 0; ep < cfg.episodes; ++ep) {
        const auto a = static_cast<int>(scene_rng.below(cfg.K));
        const int a2 = translate_position(a, cfg.K);
        const bool same = pair_rng.coin(0.5);
        const int b =
            same ? a : static_cast<int>((a + 1 + pair_rng.below(cfg.K - 1)) % cfg.K);
        const int label = same ? 1 : 0;

        auto ep1 = draw_episode(drawer.policy, scenes[a], cfg.T, policy_rng, cfg.drawer_mode);
        auto ep2 = draw_episode(drawer.policy, scenes[a2], cfg.T, policy_rng, cfg.drawer_mode);

        const auto vin = detail::viewer_input(ep1.drawing, scenes[b]);
        const auto vacts = forward(viewer, vin);
        const double ce = cross_entropy(vacts.output, label);
        const auto racts = forward(recon, ep1.drawing);
        const double mse_r = mse(racts.output, scenes[a].grid);
        const double mse_ae = mse(forward(ae, ep1.drawing).output, scenes[a].grid);
        const auto macts = forward(mapper, ep1.drawing);
        const double mse_m = mse(macts.output, ep2.drawing);

        const double r_b = reward_from_loss(ce);
        const double r_r = reward_from_loss(mse_r);
        const double r_ae = reward_from_loss(mse_ae);
        const double r_e = reward_from_loss(mse_m);
        const double reward = cfg.w_b * r_b + cfg.w_r * r_r + cfg.w_ae * r_ae + cfg.w_e * r_e;

        adam_step(viewer, backward(viewer, vacts, cross_entropy_grad(vacts.output, label)),
                  viewer_opt, cfg.lr_viewer);
        adam_step(recon, backward(recon, racts, mse_grad(racts.output, scenes[a].grid)), recon_opt,
                  cfg.lr_reconstructor);
        const auto r2acts = forward(recon, ep2.drawing);
        adam_step(recon, backward(recon, r2acts, mse_grad(r2acts.output, scenes[a2].grid)),
                  recon_opt, cfg.lr_reconstructor);
        adam_step(mapper, backward(mapper, macts, mse_grad(macts.output, ep2.drawing)), mapper_opt,
                  cfg.lr_mapper);

        if (cfg.drawer_mode == DrawerMode::Trained) {
            std::vector<DrawStep> steps = std::move(ep1.steps);
            for (auto& s : ep2.steps) steps.push_back(std::move(s));
            actor_critic_update(drawer, steps, reward, cfg.entropy_beta, cfg.lr_policy,
                                cfg.lr_value);
        }

        win_total += reward;
        win_b += r_b;
        win_r += r_r;
        win_ae += r_ae;
        win_e += r_e;
        ++win_n;
        if ((ep + 1) % cfg.log_every == 0 || ep + 1 == cfg.episodes) {
            MetricsRow row;
            row.episode = ep + 1;
            const auto n = static_cast<double>(win_n);
            row.reward = win_total / n;
            row.r_b = win_b / n;
            row.r_r = win_r / n;
            row.r_ae = win_ae / n;
            row.r_e = win_e / n;
            report.metrics.push_back(row);
            win_total = win_b = win_r = win_ae = win_e = 0.0;
            win_n = 0;
        }
    }

    double final_mse = 0.0;
    for (const auto& s : scenes) {
        auto drawing = draw_greedy(drawer.policy, s, cfg.T);
        report.final_drawings.push_back(drawing);
        final_mse += mse(forward(recon, drawing).output, s.grid);
    }
    report.final_metric = final_mse / static_cast<double>(cfg.K);
    report.baseline_metric = mean_predictor_mse(scenes);
    report.ae_hash_after = ae.param_hash();
    return report;
}

}  // namespace drawgames
