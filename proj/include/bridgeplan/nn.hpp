#ifndef BRIDGEPLAN_NN_HPP
#define BRIDGEPLAN_NN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bridgeplan::nn {

// Fully connected net, GELU on hidden layers, linear output.
struct Mlp {
  std::vector<int> widths;               // [in, hidden..., out]
  std::vector<std::vector<double>> w;    // w[l]: widths[l+1] x widths[l], row-major
  std::vector<std::vector<double>> b;
  int layers() const { return (int)w.size(); }
  int in_dim() const { return widths.front(); }
  int out_dim() const { return widths.back(); }
};

// He-initialized hidden layers; zero_last zeroes the output layer so a fresh
// net is the zero function.
Mlp make_mlp(const std::vector<int>& widths, uint64_t seed, bool zero_last = false);

struct Tape {
  std::vector<std::vector<double>> act;  // act[l]: input of layer l; act[L]: output
  std::vector<std::vector<double>> pre;  // pre-activations of hidden layers
};

std::vector<double> forward(const Mlp& m, const std::vector<double>& x);
const std::vector<double>& forward(const Mlp& m, const std::vector<double>& x, Tape& tape);

struct Grads {
  std::vector<std::vector<double>> w;
  std::vector<std::vector<double>> b;
};

Grads make_grads(const Mlp& m);
void zero_grads(Grads& g);
void add_scaled(Grads& dst, const Grads& src, double scale);

// accumulates scale * dL/dparam into g, given dL/doutput
void backward(const Mlp& m, const Tape& tape, const std::vector<double>& dy,
              Grads& g, double scale = 1.0);

// ---- optimizer ----

struct OptimizerState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 1e-2;  // decoupled; applied to weights, never biases
  int64_t step_count = 0;
  Grads m;
  Grads v;
};

OptimizerState make_optimizer(const Mlp& m);
void adamw_step(OptimizerState& opt, Mlp& m, const Grads& g, double lr);

// ---- learning rate ----

// cosine annealing with warm restarts; epoch is fractional
struct LrSchedule {
  double lr0 = 3e-4;
  double period0 = 10.0;
  double period_mult = 2.0;
};

double lr_at(const LrSchedule& s, double epoch);

// ---- checkpoint container ----
// Layout (all little-endian):
//   8 bytes magic "BPCHKPT1"
//   u32 schema version (1)
//   u32 n_meta,  n_meta x (u32 len, bytes key, u32 len, bytes value)
//   u32 n_blobs, n_blobs x (u32 len, bytes name, u64 count, count x f64)
//   u64 FNV-1a checksum of every preceding byte
using MetaList = std::vector<std::pair<std::string, std::string>>;
using BlobList = std::vector<std::pair<std::string, std::vector<double>>>;

void save_checkpoint(const std::string& path, const MetaList& meta, const BlobList& blobs);
void load_checkpoint(const std::string& path, MetaList& meta, BlobList& blobs);

void append_mlp_blobs(BlobList& blobs, const std::string& prefix, const Mlp& m);
Mlp mlp_from_blobs(const BlobList& blobs, const std::string& prefix);

double gelu(double x);
double gelu_grad(double x);

}  // namespace bridgeplan::nn

#endif
