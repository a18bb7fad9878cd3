#ifndef BRIDGEPLAN_CLI_HPP
#define BRIDGEPLAN_CLI_HPP

#include <cstdint>
#include <string>

#include "bridgeplan/geom.hpp"
#include "bridgeplan/model.hpp"
#include "bridgeplan/sampling.hpp"
#include "bridgeplan/schedule.hpp"
#include "bridgeplan/training.hpp"
#include "bridgeplan/world.hpp"

namespace bridgeplan::cli {

constexpr int kConfigSchemaVersion = 1;

// single flat run configuration; the seed and representation kind are mirrored
// into the sub-configs when loaded
struct RunConfig {
  uint64_t seed = 42;
  geom::TrajKind kind = geom::TrajKind::geometric;
  std::string out_dir = "out";
  schedule::ScheduleConfig sched;
  model::ModelConfig model;
  training::TrainConfig train;
  sampling::SamplerConfig sampler;  // bridge planner
  int full_steps = 100;
  int truncated_steps = 2;
  // data generation
  int data_seeds_per_kind = 75;
  uint64_t data_seed_base = 1001;
  int data_max_ticks = 1200;
  training::FilterParams filter;
  world::PerturbParams perturb;
  // evaluation
  std::string suite_path;  // empty: built-in 4-kind suite
  int eval_seeds_per_kind = 20;
  uint64_t eval_seed_base = 1;
  int eval_max_ticks = 1200;
  bool eval_parallel = true;
};

RunConfig default_config();
std::string config_json(const RunConfig& cfg);  // canonical ordered serialization
uint64_t config_hash(const RunConfig& cfg);
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path);

// model checkpoints stamped with (schema version, variant, kind, seed, config hash)
void save_policy(const std::string& path, const model::PolicyModel& m,
                 training::Variant variant, uint64_t seed, uint64_t cfg_hash);

struct LoadedPolicy {
  model::PolicyModel model;
  training::Variant variant = training::Variant::bridge;
  uint64_t seed = 0;
  uint64_t cfg_hash = 0;
};

LoadedPolicy load_policy(const std::string& path);

// per-variant planner construction shared by eval, plan and the tests
world::PlannerFactory make_planner_factory(const model::PolicyModel& m,
                                           const schedule::ScheduleConfig& sched,
                                           const geom::AnchorSet& anchors,
                                           training::Variant variant,
                                           const RunConfig& cfg);

std::vector<world::EpisodeSpec> eval_suite(const RunConfig& cfg);

std::string report_json(const world::EvalReport& rep,
                        const std::vector<world::EpisodeSpec>& suite,
                        const RunConfig& cfg, training::Variant variant);

// commands; each returns a process exit code and throws on invariant violations
int cmd_generate_data(const RunConfig& cfg, const std::string& out_path);
int cmd_fit_anchors(const RunConfig& cfg, const std::string& dataset_path,
                    const std::string& out_path);
int cmd_train(const RunConfig& cfg, const std::string& variant_name,
              const std::string& dataset_path, const std::string& anchors_path,
              const std::string& out_path, const std::string& log_path);
int cmd_plan(const RunConfig& cfg, const std::string& checkpoint_path,
             const std::string& anchors_path, const std::string& scenario_kind,
             uint64_t scenario_seed, int warmup_ticks, const std::string& plan_out,
             const std::string& trace_out);
int cmd_eval(const RunConfig& cfg, const std::string& checkpoint_path,
             const std::string& anchors_path, const std::string& report_out);
int cmd_render(const std::string& trace_path, const std::string& out_prefix);

}  // namespace bridgeplan::cli

#endif
