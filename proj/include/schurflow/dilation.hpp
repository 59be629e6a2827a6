#pragma once

#include <cstdint>

#include "schurflow/gaussian.hpp"
#include "schurflow/operators.hpp"
#include "schurflow/semigroup.hpp"

namespace schurflow {

/// Diagonal unitary with entries exp(i * theta_x).
struct DiagonalUnitary {
  SpacePtr space;
  RealVector phases;

  Vector diagonal() const;
};

/// Entrywise Monte Carlo estimate of an operator: sample mean plus standard
/// errors (real/imaginary components combined by root-sum-square).
struct MCEstimate {
  HSOperator mean;
  RealMatrix stderr_entries;
  int samples = 0;
};

/// The multiplication unitary of one path at time t: phases
/// sqrt(2) * W_t(alpha_x). Grid-aligned t only; negative t uses the
/// two-sided convention of GaussianGridPath::at.
DiagonalUnitary path_unitary(const GaussianGridPath& path, const Embedding& emb, double t);

/// Conjugation of K_f by the path unitary, computed entrywise:
///   (x,y) -> exp(i sqrt(2) W_t(alpha_x - alpha_y)) f(x,y).
/// Preserves traces and all Schatten norms per path.
HSOperator conjugate(const GaussianGridPath& path, const Embedding& emb, double t,
                     const HSOperator& f);

/// The expectation of the conjugated operator, collapsed in closed form via
/// the Gaussian characteristic function. Identical to sg.apply(t, f).
HSOperator dilate_exact(const SchurSemigroup& sg, double t, const HSOperator& f);

/// Empirical mean of conjugate(path_k, ., t, f) over independent paths whose
/// seeds derive from (root_seed, k). Paths are accumulated in fixed chunks
/// combined in chunk order, so results are bitwise reproducible whether the
/// chunks run sequentially or across threads.
MCEstimate dilate_mc(const SchurSemigroup& sg, double t, const HSOperator& f, int n_samples,
                     std::uint64_t root_seed, bool parallel = false);

/// Checks the dilation group law on one path: conjugating by the window
/// shifted to [t', t+t'] after conjugating at t' must agree with conjugating
/// at t+t'. Returns the maximum entrywise deviation. Handles every sign
/// combination of (t, t') through the two-sided interval conventions.
double group_law_check(const GaussianGridPath& path, const Embedding& emb, double t,
                       double t_prime, const HSOperator& f);

}  // namespace schurflow
