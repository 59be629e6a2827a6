#pragma once

#include <utility>

#include "schurflow/kernels.hpp"
#include "schurflow/space.hpp"
#include "schurflow/types.hpp"

namespace schurflow {

/// Integral operator on the weighted space with kernel f:
///   (K_f xi)(x) = sum_y f(x,y) xi(y) mu_y.
/// Positivity and singular values are always read off the matrix of K_f in
/// the orthonormal basis e_k / sqrt(mu_k), see l2_matrix().
class HSOperator {
 public:
  explicit HSOperator(Kernel kernel) : kernel_(std::move(kernel)) {}
  HSOperator(SpacePtr space, Matrix values);
  HSOperator(SpacePtr space, const RealMatrix& values);

  const Kernel& kernel() const { return kernel_; }
  const SpacePtr& space() const { return kernel_.space(); }
  const Matrix& values() const { return kernel_.values(); }
  int size() const { return kernel_.size(); }

  Vector apply(const Vector& xi) const;

  /// Kernel (x,y) -> conj(f(y,x)); the weighted-inner-product adjoint.
  HSOperator adjoint() const;

  /// Kernel (x,y) -> f(y,x); the involutive *-antiautomorphism R.
  HSOperator flip() const;

  /// sum_x f(x,x) mu_x.
  Complex trace() const;

  /// Matrix of the operator in the orthonormal basis of the weighted space:
  /// M(x,y) = sqrt(mu_x) f(x,y) sqrt(mu_y). Operator norm, singular values
  /// and traces of K_f equal those of this matrix.
  Matrix l2_matrix() const;

  /// l^p norm of the singular values of l2_matrix(); p may be infinity.
  double schatten_norm(double p) const;

 private:
  Kernel kernel_;
};

/// Identity operator's kernel: diag(1/mu_x).
HSOperator identity_operator(SpacePtr space);

HSOperator compose(const HSOperator& f, const HSOperator& g);

/// tr(R(z) y), the duality bracket pairing bounded operators with trace class.
Complex duality_pairing(const HSOperator& z, const HSOperator& y);

/// Entrywise multiplication of the kernel by a symbol.
HSOperator schur_apply(const Kernel& phi, const HSOperator& f);

/// A multiplier is selfadjoint on the Hilbert-Schmidt space iff its symbol is
/// real valued.
bool is_selfadjoint_multiplier(const Kernel& phi, double tol);

/// A positive multiplier is unital (equivalently trace preserving) iff the
/// symbol has unit diagonal.
bool is_unital_multiplier(const Kernel& phi, double tol);

/// Complete positivity of the multiplier, decided through positive
/// definiteness of its symbol.
DefinitenessCertificate is_cp_multiplier(const Kernel& phi, double tol);

}  // namespace schurflow
