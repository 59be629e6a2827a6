#include "schurflow/semigroup.hpp"

#include <cmath>
#include <utility>

namespace schurflow {

SchurSemigroup::SchurSemigroup(Embedding embedding)
    : embedding_(std::move(embedding)), psi_(squared_distance_kernel(embedding_)) {}

Kernel SchurSemigroup::symbol_at(double t) const {
  if (!(t >= 0.0)) throw DomainError("symbol_at: t must be nonnegative");
  return Kernel(space(), Matrix((-t * psi_.values().array()).exp()));
}

HSOperator SchurSemigroup::apply(double t, const HSOperator& f) const {
  if (!same_space(space(), f.space())) throw DimensionError("SchurSemigroup::apply: space mismatch");
  return schur_apply(symbol_at(t), f);
}

Kernel recover_generator(const std::vector<std::pair<double, Kernel>>& symbols, double tol) {
  const Kernel* first = nullptr;
  int used = 0;
  for (const auto& [t, k] : symbols) {
    if (t < 0.0) throw DomainError("recover_generator: negative sample time");
    if (!first) first = &k;
    if (t > 0.0) ++used;
  }
  if (!first || used == 0)
    throw DomainError("recover_generator: need at least one sample with t > 0");

  const int n = first->size();
  std::vector<RealMatrix> estimates;
  for (const auto& [t, k] : symbols) {
    if (k.size() != n || !same_space(k.space(), first->space()))
      throw DimensionError("recover_generator: samples on different spaces");
    if (t == 0.0) continue;
    RealMatrix est(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Complex v = k(x, y);
        // Principal real logarithms only; anything off the positive axis is
        // not a semigroup symbol and is rejected rather than continued
        // through complex branches.
        if (!(v.real() > 0.0) || std::abs(v.imag()) > tol * std::abs(v.real()) + tol)
          throw DomainError("recover_generator: symbol entry not strictly positive");
        est(x, y) = -std::log(v.real()) / t;
      }
    estimates.push_back(std::move(est));
  }

  RealMatrix mean = RealMatrix::Zero(n, n);
  for (const auto& est : estimates) mean += est;
  mean /= static_cast<double>(estimates.size());

  double max_dev = 0.0;
  for (const auto& est : estimates) max_dev = std::max(max_dev, (est - mean).cwiseAbs().maxCoeff());
  if (max_dev > tol)
    throw InconsistencyError("recover_generator: samples disagree, max deviation " +
                             std::to_string(max_dev));
  return Kernel(first->space(), mean);
}

}  // namespace schurflow
