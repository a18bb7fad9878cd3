#ifndef BRIDGEPLAN_WORLD_HPP
#define BRIDGEPLAN_WORLD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bridgeplan/geom.hpp"
#include "bridgeplan/model.hpp"
#include "bridgeplan/training.hpp"

namespace bridgeplan::world {

enum class ScenarioKind { lane_fork, parked_overtake, emergency_brake, merge_lite };
constexpr int kNumScenarioKinds = 4;

const char* kind_name(ScenarioKind kind);
ScenarioKind scenario_kind_from_name(const std::string& name);

// physics and road constants
constexpr double kDt = 0.05;            // s
constexpr double kWheelbase = 2.5;      // m
constexpr double kMaxSteer = 0.5;       // rad
constexpr double kMaxAccel = 4.0;       // m/s^2
constexpr double kEgoRadius = 0.9;      // m
constexpr double kRoadHalfWidth = 3.0;  // m, off-road beyond this
constexpr int kReplanTicks = 10;        // 2 Hz replanning over 20 Hz physics
constexpr double kStopServeSpeed = 0.3; // m/s, slower than this serves a stop

struct VelocityProfile {
  enum class Kind { constant, parked, brake_resume };
  Kind kind = Kind::constant;
  double v0 = 0.0;
  double t_brake = 0.0;  // brake_resume: when braking starts
  double decel = 6.0;
  double t_hold = 3.0;   // dwell at rest before resuming
  double accel = 2.0;    // resume acceleration back to v0
};

struct ArcState {
  double s;
  double v;
};

// closed-form arc position/speed at time t (no per-tick accumulation)
ArcState profile_state(const VelocityProfile& p, double t);

struct ScriptedAgent {
  geom::Polyline path;   // world frame
  double s0 = 0.0;
  double lateral = 0.0;  // constant signed offset from the path, left positive
  double radius = 0.9;
  // expert bypass side for parked blockers: +1 left, -1 right, 0 = whichever
  // side is freer. Drawn per scenario and not observable in the context, so
  // near-centered blockers admit two valid maneuvers.
  double bypass_side = 0.0;
  // expert lane-change shape around a parked blocker, drawn per scenario so
  // the maneuver family is a continuum rather than a handful of fixed shapes
  double bump_amp = 2.5;
  double bump_halfwidth = 14.0;
  VelocityProfile profile;
};

struct AgentPose {
  geom::Vec2 pos;
  geom::Vec2 vel;
};

AgentPose agent_pose_at(const ScriptedAgent& a, double t);

struct StopPoint {
  double s;             // arc along the route
  double radius = 3.0;  // serve window
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::lane_fork;
  uint64_t seed = 0;
  geom::Polyline route;  // ego centerline, world frame, ~150 m
  std::vector<ScriptedAgent> agents;
  std::vector<StopPoint> stops;
  double cruise_speed = 8.0;  // reference speed (IDM free speed, efficiency basis)
};

Scenario make_scenario(ScenarioKind kind, uint64_t seed);

struct EgoState {
  geom::Pose pose;
  double speed = 0.0;
  double accel = 0.0;  // last applied longitudinal acceleration
};

struct Controls {
  double steer = 0.0;
  double accel = 0.0;
};

struct World {
  Scenario scenario;
  EgoState ego;
  double time = 0.0;
  int tick = 0;
  double progress = 0.0;  // max route arc reached
  std::vector<char> stop_served;
  std::vector<char> stop_missed;
  bool collided = false;
  bool offroad = false;
};

World make_world(const Scenario& scenario);

// kinematic bicycle step (explicit Euler); advances scripted agents via time,
// then updates collision/off-road/stop flags
void step(World& w, Controls c, double dt = kDt);

// pure pursuit (lookahead 3 m + 0.5*speed) + proportional speed control toward
// the plan speed (geometric) or the spacing-implied speed |p1|/0.25 (temporal).
// A degenerate plan with all points at the origin commands a full brake.
Controls track(const geom::Trajectory& plan, const EgoState& ego);

model::Context build_context(const World& w);

struct ExpertPlan {
  geom::Trajectory traj;  // ego frame
  model::Context ctx;
};

// privileged rule-based expert: IDM longitudinally (stop points and leading
// agents), smooth lane-change offsets around static blockers laterally
ExpertPlan expert_policy(const World& w, geom::TrajKind kind);

struct EpisodeResult {
  bool success = false;
  double completion = 0.0;  // in [0, 1]
  bool collision = false;
  bool offroad = false;
  int missed_targets = 0;
  double driving_score = 0.0;  // 100 * completion * penalties
  double efficiency = 0.0;     // mean speed / cruise * 100, clamped to [0, 100]
  double comfort = 0.0;        // share of ticks with |jerk|<6, |accel|<3, * 100
  int ticks = 0;
  std::string diagnostic;  // non-empty if the planner threw
};

struct TraceRow {
  int tick;
  double t;
  geom::Pose ego;
  double speed;
  double accel;
  std::vector<geom::Vec2> agents;
};

struct PlanSnapshot {
  int tick;
  geom::Pose ego;
  geom::Trajectory plan;  // ego frame at snapshot time
};

struct EpisodeTrace {
  std::vector<TraceRow> rows;
  std::vector<PlanSnapshot> plans;
};

using PlannerFn = std::function<geom::Trajectory(const model::Context&, const World&)>;

EpisodeResult rollout(const Scenario& scenario, const PlannerFn& planner, int max_ticks,
                      EpisodeTrace* trace = nullptr);

PlannerFn expert_planner(geom::TrajKind kind);

// ---- evaluation suites ----

struct EpisodeSpec {
  ScenarioKind kind;
  uint64_t seed;
};

std::vector<EpisodeSpec> default_suite(int seeds_per_kind, uint64_t seed_base);

void save_suite(const std::vector<EpisodeSpec>& suite, const std::string& path);
std::vector<EpisodeSpec> load_suite(const std::string& path);

struct EvalConfig {
  int max_ticks = 1200;
  bool parallel = true;
  uint64_t planner_seed = 0;  // mixed with the episode index per episode
};

struct KindRow {
  ScenarioKind kind;
  int n = 0;
  double ds = 0.0;
  double sr = 0.0;
  double efficiency = 0.0;
  double comfort = 0.0;
};

struct EvalReport {
  std::vector<EpisodeResult> episodes;  // suite order
  double ds = 0.0;
  double sr = 0.0;
  double efficiency = 0.0;
  double comfort = 0.0;
  std::vector<KindRow> by_kind;  // ordered by kind enum value
};

// episodes run independently (optionally in parallel); the factory is called
// once per episode with a seed derived from the episode index and must be
// thread-safe; reduction is in suite order, so the report is deterministic
using PlannerFactory = std::function<PlannerFn(uint64_t episode_seed)>;

EvalReport evaluate(const std::vector<EpisodeSpec>& suite,
                    const PlannerFactory& make_planner, const EvalConfig& cfg = {});

// ---- expert data collection ----

// Occasional ego-state disturbances during collection rollouts; the expert
// recovers, so recorded frames cover off-centerline and off-speed states.
struct PerturbParams {
  double prob = 0.1;      // chance per replan tick
  double lat = 0.6;       // max |lateral nudge| m
  double heading = 0.1;   // max |heading nudge| rad
  double speed = 1.5;     // max |speed nudge| m/s
  // frames recorded within this window after a disturbance are tagged
  // non-nominal: the expert is still recovering, so their anchor labels are
  // ill defined and only the denoiser trains on them
  double recovery_window = 2.5;  // s
  uint64_t seed = 0;
};

struct CollectedData {
  std::vector<training::Sample> samples;  // frames kept by the filter
  size_t raw_count = 0;                   // frames before filtering
  size_t threshold_count = 0;             // frames kept by thresholds alone
};

CollectedData collect_expert_data(const std::vector<EpisodeSpec>& suite,
                                  const model::ModelConfig& mcfg,
                                  const training::FilterParams& filter,
                                  int max_ticks = 1200,
                                  const PerturbParams& perturb = {});

// ---- traces and rendering ----

void save_episode_trace(const EpisodeTrace& trace, const Scenario& scenario,
                        const std::string& path);

struct LoadedTrace {
  ScenarioKind kind;
  uint64_t seed;
  EpisodeTrace trace;
};

LoadedTrace load_episode_trace(const std::string& path);

void render_episode_svg(const EpisodeTrace& trace, const Scenario& scenario,
                        const std::string& path);

}  // namespace bridgeplan::world

#endif
