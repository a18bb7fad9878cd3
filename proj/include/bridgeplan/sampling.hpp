#ifndef BRIDGEPLAN_SAMPLING_HPP
#define BRIDGEPLAN_SAMPLING_HPP

#include <functional>
#include <string>
#include <vector>

#include "bridgeplan/geom.hpp"
#include "bridgeplan/model.hpp"
#include "bridgeplan/rng.hpp"
#include "bridgeplan/schedule.hpp"

namespace bridgeplan::sampling {

struct SamplerConfig {
  int n_steps = 20;
  // first grid node sits just inside the horizon where the bridge variance is
  // nonzero; the state there is initialized to x_T
  double t_start_frac = 1.0 - 1e-3;
};

// score estimate of the bridge marginal given a denoiser output
std::vector<double> bridge_score(const schedule::ScheduleConfig& sched, double t,
                                 const std::vector<double>& x_t,
                                 const std::vector<double>& x_T,
                                 const std::vector<double>& x0_hat);

// probability-flow ODE right-hand side of the pinned bridge
std::vector<double> bridge_ode_rhs(const schedule::ScheduleConfig& sched, double t,
                                   const std::vector<double>& x_t,
                                   const std::vector<double>& x_T,
                                   const std::vector<double>& x0_hat);

using DenoiseFn =
    std::function<std::vector<double>(const std::vector<double>& x_t, double t)>;

struct Trace {
  std::vector<double> ts;
  std::vector<std::vector<double>> states;  // states[0] is the start state
};

// One solver step from t to t_prev. First-order: the denoiser output is frozen
// across the step and the remaining linear ODE is integrated exactly, which is
// what keeps the contraction near the pinned endpoint well behaved.
std::vector<double> bridge_solver_step(const schedule::ScheduleConfig& sched, double t,
                                       double t_prev, const std::vector<double>& x_t,
                                       const std::vector<double>& x_T,
                                       const std::vector<double>& x0_hat);

std::vector<double> diffusion_solver_step(const schedule::ScheduleConfig& sched, double t,
                                          double t_prev, const std::vector<double>& x_t,
                                          const std::vector<double>& x0_hat);

// integrate the bridge from x_T at t_start down to t_eps on a uniform grid
std::vector<double> bridge_integrate(const schedule::ScheduleConfig& sched,
                                     const SamplerConfig& cfg,
                                     const std::vector<double>& x_T,
                                     const DenoiseFn& denoise, Trace* trace = nullptr);

// integrate the standard (non-bridge) flow from x_init at t_hi down to t_eps
std::vector<double> diffusion_integrate(const schedule::ScheduleConfig& sched, int n_steps,
                                        double t_hi, const std::vector<double>& x_init,
                                        const DenoiseFn& denoise, Trace* trace = nullptr);

// anchor selection + bridge integration; deterministic in (model, ctx)
geom::Trajectory plan(const model::PolicyModel& m, const schedule::ScheduleConfig& sched,
                      const geom::AnchorSet& anchors, const model::Context& ctx,
                      const SamplerConfig& cfg, Trace* trace = nullptr,
                      int* selected_anchor = nullptr);

// same, with the anchor supplied in ego-frame meters (test/tooling hook)
geom::Trajectory plan_from_anchor(const model::PolicyModel& m,
                                  const schedule::ScheduleConfig& sched,
                                  const std::vector<double>& anchor_raw,
                                  const model::Context& ctx, const SamplerConfig& cfg,
                                  Trace* trace = nullptr);

// baseline: generate from pure noise; the anchor channel stays zeroed
geom::Trajectory full_diffusion_sample(const model::PolicyModel& m,
                                       const schedule::ScheduleConfig& sched,
                                       const model::Context& ctx, const SamplerConfig& cfg,
                                       Rng& rng, Trace* trace = nullptr);

// baseline: noise the selected anchor to t_trunc, then denoise in n_steps
geom::Trajectory truncated_sample(const model::PolicyModel& m,
                                  const schedule::ScheduleConfig& sched,
                                  const geom::AnchorSet& anchors, const model::Context& ctx,
                                  double t_trunc, int n_steps, Rng& rng,
                                  Trace* trace = nullptr);

void save_trace(const Trace& trace, const std::string& path, const std::string& kind,
                uint64_t seed, uint64_t config_hash);
Trace load_trace(const std::string& path, std::string* kind = nullptr);

}  // namespace bridgeplan::sampling

#endif
