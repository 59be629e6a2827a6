#pragma once

#include <cstdint>

#include "schurflow/dilation.hpp"
#include "schurflow/gaussian.hpp"
#include "schurflow/operators.hpp"
#include "schurflow/semigroup.hpp"

namespace schurflow {

/// One sample of an operator-valued random variable: the kernel produced on
/// a specific path. The path pointer is observing only; keep the path alive
/// while the sample is in use.
struct PathOperator {
  const GaussianGridPath* path = nullptr;
  Kernel kernel;
};

/// The forward embedding at time t >= 0: conjugation of 1 (x) z by the path
/// unitary. A trace preserving injective *-homomorphism per path.
PathOperator embed_operator(const GaussianGridPath& path, const Embedding& emb, double t,
                            const HSOperator& z);

/// The backward embedding built from increments on ]r, horizon], used by the
/// reversed dilation with its decreasing filtration of future increments.
PathOperator embed_operator_reversed(const GaussianGridPath& path, const Embedding& emb,
                                     double r, const HSOperator& z);

/// Conditional expectation of embed_operator(t, K_f) given the increments up
/// to s, in closed form: the phase is frozen at s and the independent window
/// ]s,t] collapses to exp(-(t-s) |alpha_x - alpha_y|^2). Equals
/// embed_operator(s, T_{t-s} K_f) on the same path.
PathOperator conditional_exact(const GaussianGridPath& path, const Embedding& emb, double s,
                               double t, const HSOperator& f);

/// Monte Carlo counterpart: mean of embed_operator(t, K_f) over paths whose
/// increments after s are independently resampled. Chunked reduction as in
/// dilate_mc, bitwise reproducible.
MCEstimate conditional_mc(const GaussianGridPath& path, const Embedding& emb, double s,
                          double t, const HSOperator& f, int n_resamples,
                          std::uint64_t root_seed, bool parallel = false);

struct MarkovReport {
  double exact_deviation = 0.0;
  bool exact_pass = false;
  // Monte Carlo gate (standard dilation only).
  double mc_pass_fraction = 0.0;
  double mc_max_sigma_ratio = 0.0;
  bool mc_pass = false;
  int mc_samples = 0;
};

struct MarkovGate {
  double exact_tol = 1e-12;
  double sigma_gate = 4.0;
  double pass_fraction = 0.99;
  int mc_samples = 0;  // 0 disables the Monte Carlo half
  std::uint64_t root_seed = 0;
  bool parallel = false;
};

/// E_s pi_t = pi_s T_{t-s} on one path: exact deviation of the closed form
/// versus the right-hand side, plus the Monte Carlo gate when enabled.
MarkovReport verify_standard(const SchurSemigroup& sg, const GaussianGridPath& path, double s,
                             double t, const HSOperator& f, const MarkovGate& gate = {});

/// Reversed dilation with the decreasing filtration of post-r increments:
/// conditioning the backward embedding at s on the increments after t
/// reproduces the backward embedding at t of T_{t-s} K_f, for s <= t.
MarkovReport verify_reversed(const SchurSemigroup& sg, const GaussianGridPath& path, double s,
                             double t, const HSOperator& f, const MarkovGate& gate = {});

}  // namespace schurflow
