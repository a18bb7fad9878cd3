#ifndef BRIDGEPLAN_TRAINING_HPP
#define BRIDGEPLAN_TRAINING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bridgeplan/geom.hpp"
#include "bridgeplan/model.hpp"
#include "bridgeplan/nn.hpp"
#include "bridgeplan/rng.hpp"
#include "bridgeplan/schedule.hpp"

namespace bridgeplan::training {

enum class Variant { bridge, full, truncated };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct Sample {
  std::vector<double> x0;  // flattened ground-truth trajectory, ego-frame meters
  std::vector<double> z;   // encoded context
  int anchor_index = -1;   // nearest anchor of x0; assigned once after fitting
  // false for recovery frames shortly after an injected disturbance; the anchor
  // vocabulary is fit on nominal frames only, so it holds clean maneuver shapes
  bool nominal = true;
};

struct TrainConfig {
  Variant variant = Variant::bridge;
  int epochs = 10;
  int batch = 64;
  // extra classifier-only epochs appended after joint training; the classifier
  // is a small separate head, so these are cheap relative to joint epochs
  int classifier_epochs = 0;
  nn::LrSchedule lr;
  double w_diffusion = 1.0;
  double w_classifier = 1.0;
  double t_trunc_frac = 0.3;  // truncated variant trains on t in [t_eps, frac*t_max]
  uint64_t seed = 0;
  // batch gradients are accumulated into a fixed number of chunks and reduced
  // in chunk order, so results are bit-identical for any thread count
  int grad_chunks = 16;
  bool parallel = true;
};

// ---- per-sample loss steps ----
// Each returns the sample loss and accumulates `scale * dloss/dparam`.
// The *_at forms take the corruption draw explicitly; the *_step forms draw
// (t, eps) from the rng stream.

double bridge_loss_at(const model::PolicyModel& m, const schedule::ScheduleConfig& sched,
                      const Sample& s, const std::vector<double>& anchor_raw, double t,
                      const std::vector<double>& eps, double weight, nn::Grads& g,
                      double scale);
double full_diffusion_loss_at(const model::PolicyModel& m,
                              const schedule::ScheduleConfig& sched, const Sample& s,
                              double t, const std::vector<double>& eps, double weight,
                              nn::Grads& g, double scale);
double truncated_loss_at(const model::PolicyModel& m, const schedule::ScheduleConfig& sched,
                         const Sample& s, const std::vector<double>& anchor_raw, double t,
                         const std::vector<double>& eps, double weight, nn::Grads& g,
                         double scale);

double bridge_loss_step(const model::PolicyModel& m, const schedule::ScheduleConfig& sched,
                        const Sample& s, const std::vector<double>& anchor_raw, Rng& rng,
                        nn::Grads& g, double scale = 1.0);
double full_diffusion_loss_step(const model::PolicyModel& m,
                                const schedule::ScheduleConfig& sched, const Sample& s,
                                Rng& rng, nn::Grads& g, double scale = 1.0);
double truncated_loss_step(const model::PolicyModel& m,
                           const schedule::ScheduleConfig& sched, const Sample& s,
                           const std::vector<double>& anchor_raw, double t_trunc, Rng& rng,
                           nn::Grads& g, double scale = 1.0);

// cross-entropy against s.anchor_index; reports top-1 correctness
double classifier_loss_step(const model::PolicyModel& m, const Sample& s, nn::Grads& g,
                            double scale, bool* correct = nullptr);

// ---- batch accumulation ----

struct BatchWork {
  std::vector<nn::Grads> denoiser;    // one per chunk
  std::vector<nn::Grads> classifier;
};

BatchWork make_batch_work(const model::PolicyModel& m, int chunks);

struct BatchStats {
  double diffusion_loss = 0.0;
  double classifier_loss = 0.0;
  int correct = 0;
  int count = 0;    // diffusion loss denominator
  int c_count = 0;  // classifier denominator; 0 when the head is disabled
};

// Accumulates mean-scaled gradients for one batch into dg/cg. `order` indexes
// into `dataset`; `epoch_seed` and the position inside the epoch determine each
// sample's rng stream, so the result is independent of threading.
BatchStats accumulate_batch(const model::PolicyModel& m,
                            const schedule::ScheduleConfig& sched, const TrainConfig& cfg,
                            const std::vector<Sample>& dataset,
                            const std::vector<std::vector<double>>& anchors_raw,
                            const std::vector<int>& order, size_t batch_begin,
                            size_t batch_end, uint64_t epoch_seed, BatchWork& work,
                            nn::Grads& dg, nn::Grads& cg);

// ---- training loop ----

struct EpochLog {
  int epoch;
  double diffusion_loss;
  double classifier_loss;
  double classifier_accuracy;
  double lr;
};

struct TrainReport {
  std::vector<EpochLog> epochs;
};

// Joint denoiser+classifier optimization; one serialized AdamW step per batch.
// Non-finite loss aborts with a diagnostic. If log_path is non-empty a CSV
// training log is written.
TrainReport train(model::PolicyModel& m, const std::vector<Sample>& dataset,
                  const geom::AnchorSet& anchors, const schedule::ScheduleConfig& sched,
                  const TrainConfig& cfg, const std::string& log_path = "",
                  uint64_t config_hash = 0);

void assign_anchor_labels(std::vector<Sample>& samples, const geom::AnchorSet& anchors,
                          geom::TrajKind kind);

double classifier_accuracy(const model::PolicyModel& m, const std::vector<Sample>& samples);

// ---- dataset filtering ----

struct FrameSignature {
  int episode = 0;
  double target_speed = 0.0;
  std::vector<double> bearings;  // per-waypoint bearing from ego, radians
};

struct FilterParams {
  double speed_delta = 0.1;        // m/s
  double bearing_delta_deg = 0.5;  // degrees
  double keep_frac = 0.14;         // seeded share of non-trigger frames
  uint64_t seed = 0;
};

// Keeps every frame that trips a threshold against the previous frame of the
// same episode (episode-initial frames always trip), plus exactly
// round(keep_frac * remainder) seeded picks. Order is preserved.
std::vector<char> filter_mask(const std::vector<FrameSignature>& frames,
                              const FilterParams& p);

std::vector<double> waypoint_bearings(const geom::Trajectory& traj);

// ---- dataset file ----

void save_dataset(const std::vector<Sample>& samples, geom::TrajKind kind,
                  const std::string& path, uint64_t seed, uint64_t config_hash);
std::vector<Sample> load_dataset(const std::string& path, geom::TrajKind* kind = nullptr);

}  // namespace bridgeplan::training

#endif
