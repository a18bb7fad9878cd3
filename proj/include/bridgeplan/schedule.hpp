#ifndef BRIDGEPLAN_SCHEDULE_HPP
#define BRIDGEPLAN_SCHEDULE_HPP

#include <vector>

namespace bridgeplan::schedule {

// Variance-preserving noise schedule on t in [0, t_max] plus the coefficients
// of the Gaussian bridge pinned at (x_0, x_T).
struct ScheduleConfig {
  double beta_d = 2.0;
  double beta_min = 0.1;
  double t_max = 1.0;
  double t_eps = 1e-4;
  double gamma_clip = 1.0 - 1e-6;  // upper bound on gamma^2 near t_max
};

struct AlphaSigma {
  double alpha;  // signal coefficient, alpha_t = exp(-B(t)/2)
  double sigma;  // marginal std, sigma_t = sqrt(1 - alpha_t^2)
};

struct DriftDiffusion {
  double f;   // drift coefficient f(t)
  double g2;  // squared diffusion coefficient g(t)^2
};

// x_t | x_0, x_T  ~  N(a*x_T + b*x_0, c2*I)
struct BridgeCoeffs {
  double a;
  double b;
  double c2;
  double gamma2;
};

void validate(const ScheduleConfig& cfg);

AlphaSigma vp_alpha_sigma(const ScheduleConfig& cfg, double t);
DriftDiffusion drift_diffusion(const ScheduleConfig& cfg, double t);
BridgeCoeffs bridge_coeffs(const ScheduleConfig& cfg, double t);

// grad_{x_t} log q(x_T | x_t); closed form r*(x_T - r*x_t)/v with
// r = alpha_T/alpha_t and v = sigma_T^2*(1 - gamma_t^2), v floored at 1e-12.
std::vector<double> h_gradient(const ScheduleConfig& cfg, double t,
                               const std::vector<double>& x_t,
                               const std::vector<double>& x_T);

// scalar pieces of h_gradient, shared with the samplers
struct HGradCoeffs {
  double r;
  double v;
};
HGradCoeffs h_gradient_coeffs(const ScheduleConfig& cfg, double t);

}  // namespace bridgeplan::schedule

#endif
