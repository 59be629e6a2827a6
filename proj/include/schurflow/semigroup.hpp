#pragma once

#include <utility>
#include <vector>

#include "schurflow/kernels.hpp"
#include "schurflow/operators.hpp"
#include "schurflow/space.hpp"

namespace schurflow {

/// Markov semigroup of Schur multipliers generated by a point embedding:
/// T_t multiplies kernels entrywise by exp(-t |alpha_x - alpha_y|^2).
/// Every T_t is selfadjoint, unital, completely positive and trace
/// preserving. Symbols are regenerated from the cached generator on each
/// call, so the semigroup law never depends on cache coherence.
class SchurSemigroup {
 public:
  explicit SchurSemigroup(Embedding embedding);

  const Embedding& embedding() const { return embedding_; }
  const SpacePtr& space() const { return embedding_.space(); }

  /// Entrywise exp(-t*psi); unit diagonal. Negative t is rejected, it
  /// belongs to the dilation group rather than the semigroup.
  Kernel symbol_at(double t) const;

  HSOperator apply(double t, const HSOperator& f) const;

  /// The generator symbol psi(x,y) = |alpha_x - alpha_y|^2; the semigroup
  /// satisfies d/dt symbol_at(t) = -psi entrywise at t = 0.
  const Kernel& generator_symbol() const { return psi_; }

 private:
  Embedding embedding_;
  Kernel psi_;
};

/// Recovers the generator symbol from sampled semigroup symbols via
/// entrywise principal logarithms, -log(phi_t)/t, averaged across samples.
/// Samples must be strictly positive entrywise and mutually consistent
/// within tol; at least one sample must have t > 0.
Kernel recover_generator(const std::vector<std::pair<double, Kernel>>& symbols, double tol);

}  // namespace schurflow
