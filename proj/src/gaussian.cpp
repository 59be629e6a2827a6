#include "schurflow/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace schurflow {

namespace rng {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_at(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + 0x9e3779b97f4a7c15ULL * (counter + 1));
}

double normal_at(std::uint64_t seed, std::uint64_t pair_index) {
  std::uint64_t a = stream_at(seed, 2 * pair_index);
  std::uint64_t b = stream_at(seed, 2 * pair_index + 1);
  // Box-Muller; u1 in (0,1] keeps the log finite.
  double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(mix64(root) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace rng

namespace {

void check_config(const PathConfig& cfg) {
  if (!(cfg.step > 0.0)) throw DomainError("PathConfig: step must be positive");
  if (!(cfg.horizon > 0.0)) throw DomainError("PathConfig: horizon must be positive");
  if (cfg.dim < 1) throw DomainError("PathConfig: dim must be positive");
  double ratio = cfg.horizon / cfg.step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
    throw AlignmentError("PathConfig: horizon is not an integer multiple of step");
}

double cell_increment(std::uint64_t seed, int cell, int coord, int dim, double step) {
  std::uint64_t pair_index = static_cast<std::uint64_t>(cell) * static_cast<std::uint64_t>(dim) +
                             static_cast<std::uint64_t>(coord);
  return rng::normal_at(seed, pair_index) * std::sqrt(step);
}

}  // namespace

GaussianGridPath::GaussianGridPath(PathConfig config, double t_left, RealMatrix increments)
    : config_(config), t_left_(t_left), increments_(std::move(increments)) {
  check_config(config_);
  if (increments_.cols() != config_.dim)
    throw DimensionError("GaussianGridPath: increment columns do not match dim");
}

int GaussianGridPath::cell_index(double t) const {
  double pos = (t - t_left_) / config_.step;
  double rounded = std::round(pos);
  if (std::abs(pos - rounded) > 1e-9 * std::max(1.0, std::abs(pos)))
    throw AlignmentError("time " + std::to_string(t) + " is not grid aligned");
  int idx = static_cast<int>(rounded);
  if (idx < 0 || idx > cells())
    throw AlignmentError("time " + std::to_string(t) + " is outside the sampled window");
  return idx;
}

double GaussianGridPath::interval(double s, double t, const RealVector& h) const {
  if (h.size() != config_.dim) throw DimensionError("interval: direction dimension mismatch");
  if (s > t) throw AlignmentError("interval: s must not exceed t");
  const int lo = cell_index(s);
  const int hi = cell_index(t);
  double value = 0.0;
  for (int i = 0; i < config_.dim; ++i) {
    double coord_sum = 0.0;
    for (int k = lo; k < hi; ++k) coord_sum += increments_(k, i);
    value += h[i] * coord_sum;
  }
  return value;
}

double GaussianGridPath::at(double t, const RealVector& h) const {
  if (t >= 0.0) return interval(0.0, t, h);
  return -interval(t, 0.0, h);
}

GaussianGridPath GaussianGridPath::shifted(double t) const {
  double pos = t / config_.step;
  if (std::abs(pos - std::round(pos)) > 1e-9 * std::max(1.0, std::abs(pos)))
    throw AlignmentError("shifted: shift is not grid aligned");
  // Pure re-indexing: moving the window label keeps every increment intact;
  // probes outside the data surface as alignment errors in cell_index.
  return GaussianGridPath(config_, t_left_ - t, increments_);
}

GaussianGridPath GaussianGridPath::resampled_after(double s, std::uint64_t seed) const {
  if (s < 0.0) throw AlignmentError("resampled_after: s must be nonnegative");
  const int cut = cell_index(s);
  RealMatrix inc = increments_;
  for (int k = cut; k < cells(); ++k)
    for (int i = 0; i < config_.dim; ++i)
      inc(k, i) = cell_increment(seed, k, i, config_.dim, config_.step);
  return GaussianGridPath(config_, t_left_, std::move(inc));
}

GaussianGridPath sample_path(const PathConfig& cfg) {
  check_config(cfg);
  const int half = static_cast<int>(std::round(cfg.horizon / cfg.step));
  const int n_cells = 2 * half;
  RealMatrix inc(n_cells, cfg.dim);
  for (int k = 0; k < n_cells; ++k)
    for (int i = 0; i < cfg.dim; ++i) inc(k, i) = cell_increment(cfg.seed, k, i, cfg.dim, cfg.step);
  return GaussianGridPath(cfg, -cfg.horizon, std::move(inc));
}

Complex char_exact(double s, double t, const RealVector& h, double scale) {
  if (s > t) throw AlignmentError("char_exact: s must not exceed t");
  return Complex(std::exp(-0.5 * scale * scale * (t - s) * h.squaredNorm()), 0.0);
}

}  // namespace schurflow
