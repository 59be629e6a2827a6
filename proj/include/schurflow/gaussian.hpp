#pragma once

#include <cstdint>

#include "schurflow/errors.hpp"
#include "schurflow/types.hpp"

namespace schurflow {

/// Grid discretization of a two-sided cylindrical Brownian motion. Paths live
/// on [-horizon, horizon] with cell width `step`; `dim` is the dimension of
/// the Hilbert space the motion is indexed by. The horizon must be an integer
/// multiple of the step.
struct PathConfig {
  double step = 1.0 / 64.0;
  double horizon = 8.0;
  int dim = 1;
  std::uint64_t seed = 0;
};

namespace rng {

/// SplitMix64 finalizer; the basis of the counter-based generator below.
std::uint64_t mix64(std::uint64_t z);

/// k-th value of the stream keyed by `seed`. Pure function of its arguments,
/// so any sub-stream (a cell, a path, a resample) can be regenerated in
/// isolation.
std::uint64_t stream_at(std::uint64_t seed, std::uint64_t counter);

/// Standard normal drawn from two stream values at counters 2k, 2k+1.
double normal_at(std::uint64_t seed, std::uint64_t pair_index);

/// Seed for the `index`-th member of a family derived from a root seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

}  // namespace rng

/// One sampled path, stored as independent N(0, step) increments per grid
/// cell and coordinate. Increments are a pure function of (config, seed).
/// Immutable once sampled. Shifting re-indexes cells without copying rounds
/// of data; probing outside the sampled window raises AlignmentError.
class GaussianGridPath {
 public:
  GaussianGridPath(PathConfig config, double t_left, RealMatrix increments);

  const PathConfig& config() const { return config_; }
  const RealMatrix& increments() const { return increments_; }
  int cells() const { return static_cast<int>(increments_.rows()); }
  /// Time at the left edge of cell 0 (-horizon for a freshly sampled path).
  double t_left() const { return t_left_; }
  double t_right() const { return t_left_ + cells() * config_.step; }

  /// W(1_{]s,t]} (x) h): sum over the grid cells of ]s,t] of the increments
  /// paired with h. Times must be grid aligned and inside the window.
  double interval(double s, double t, const RealVector& h) const;

  /// W_t(h): interval(0, t, h) for t >= 0 and -interval(t, 0, h) for t < 0,
  /// the two-sided convention used by the dilation group.
  double at(double t, const RealVector& h) const;

  /// Path whose interval(s, s', h) equals this path's interval(s+t, s'+t, h).
  GaussianGridPath shifted(double t) const;

  /// Same increments on cells up to time s, fresh ones (from `seed`) after.
  GaussianGridPath resampled_after(double s, std::uint64_t seed) const;

  /// Grid index of an aligned time; AlignmentError if off-grid or outside
  /// [t_left, t_right].
  int cell_index(double t) const;

 private:
  PathConfig config_;
  double t_left_;
  RealMatrix increments_;  // cells x dim
};

GaussianGridPath sample_path(const PathConfig& cfg);

/// Exact characteristic function of the interval increment:
///   E exp(i * scale * W(1_{]s,t]} (x) h)) = exp(-scale^2 (t-s) |h|^2 / 2).
Complex char_exact(double s, double t, const RealVector& h, double scale);

}  // namespace schurflow
