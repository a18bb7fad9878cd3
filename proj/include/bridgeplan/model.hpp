#ifndef BRIDGEPLAN_MODEL_HPP
#define BRIDGEPLAN_MODEL_HPP

#include <cstdint>
#include <vector>

#include "bridgeplan/geom.hpp"
#include "bridgeplan/nn.hpp"

namespace bridgeplan::model {

// Privileged scene summary handed to the policy. All geometry is ego-frame.
struct ObstacleSlot {
  geom::Vec2 pos;   // m
  geom::Vec2 vel;   // m/s
  double flag = 0.0;  // 1 if the slot is occupied
};

struct Context {
  double ego_speed = 0.0;
  geom::Vec2 target;       // route target point, ego frame
  double lane_offset = 0.0;  // signed offset from route centerline, left positive
  ObstacleSlot slots[4];
  double stop_flag = 0.0;  // 1 if an unserved stop point is ahead
};

constexpr int kContextDim = 25;

struct TimeEmbedding {
  int dim = 16;  // even; sin/cos pairs over log-spaced frequencies
};

std::vector<double> time_embedding(const TimeEmbedding& emb, double t);

struct ModelConfig {
  geom::TrajKind kind = geom::TrajKind::geometric;
  int n_anchor = 20;
  std::vector<int> trunk_widths = {256, 256, 256};
  std::vector<int> classifier_widths = {128, 128};
  TimeEmbedding time_embed;
  // fixed normalization constants; trajectories are encoded as deviations from
  // a straight-ahead baseline so the lateral and speed channels are not
  // swamped by raw forward progress, and checkpoints need no dataset statistics
  double traj_scale = 5.0;   // m
  double ctx_pos_scale = 10.0;
  double ctx_vel_scale = 10.0;
  int x_dim() const { return geom::flat_dim(kind); }
  int denoiser_in() const { return 2 * x_dim() + kContextDim + time_embed.dim; }
};

struct PolicyModel {
  ModelConfig cfg;
  nn::Mlp denoiser;    // (x_t, x_T, z, emb(t)) -> x0 prediction, normalized space
  nn::Mlp classifier;  // z -> anchor logits; the final layer's rows are the
                       // per-anchor embeddings
};

PolicyModel make_policy_model(const ModelConfig& cfg, uint64_t seed);

std::vector<double> encode_context(const ModelConfig& cfg, const Context& ctx);

// straight-ahead flat trajectory subtracted by normalize_traj
std::vector<double> traj_baseline(const ModelConfig& cfg);
std::vector<double> normalize_traj(const ModelConfig& cfg, const std::vector<double>& raw);
std::vector<double> denormalize_traj(const ModelConfig& cfg, const std::vector<double>& norm);

// concatenated denoiser input from already-normalized pieces
std::vector<double> denoiser_input(const ModelConfig& cfg, const std::vector<double>& x_t,
                                   const std::vector<double>& x_T, double t,
                                   const std::vector<double>& z);

// ego-frame meters in, ego-frame meters out
std::vector<double> denoise(const PolicyModel& m, const std::vector<double>& x_t_raw,
                            double t, const std::vector<double>& x_T_raw,
                            const Context& ctx);

std::vector<double> classify(const PolicyModel& m, const Context& ctx);

std::vector<double> softmax(const std::vector<double>& logits);

// argmax of classifier logits; ties resolve to the lowest index
int select_anchor(const PolicyModel& m, const Context& ctx, const geom::AnchorSet& anchors);

std::vector<double> flatten_anchor(const geom::AnchorSet& set, int index);

}  // namespace bridgeplan::model

#endif
