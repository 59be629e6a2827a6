#include "schurflow/operators.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace schurflow {

namespace {

void require_same_space(const HSOperator& f, const HSOperator& g, const char* what) {
  if (!same_space(f.space(), g.space())) throw DimensionError(std::string(what) + ": space mismatch");
}

RealVector singular_values(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

}  // namespace

HSOperator::HSOperator(SpacePtr space, Matrix values)
    : kernel_(std::move(space), std::move(values)) {}

HSOperator::HSOperator(SpacePtr space, const RealMatrix& values)
    : kernel_(std::move(space), values) {}

Vector HSOperator::apply(const Vector& xi) const {
  if (xi.size() != size()) throw DimensionError("HSOperator::apply: vector length mismatch");
  const RealVector& mu = space()->weights();
  return values() * (mu.cast<Complex>().asDiagonal() * xi);
}

HSOperator HSOperator::adjoint() const {
  return HSOperator(space(), Matrix(values().adjoint()));
}

HSOperator HSOperator::flip() const {
  return HSOperator(space(), Matrix(values().transpose()));
}

Complex HSOperator::trace() const {
  Complex acc{0.0, 0.0};
  for (int x = 0; x < size(); ++x) acc += values()(x, x) * space()->weight(x);
  return acc;
}

Matrix HSOperator::l2_matrix() const {
  RealVector root = space()->weights().cwiseSqrt();
  return root.cast<Complex>().asDiagonal() * values() * root.cast<Complex>().asDiagonal();
}

double HSOperator::schatten_norm(double p) const {
  if (std::isnan(p) || p < 1.0) throw DomainError("schatten_norm: p must be >= 1 or infinity");
  RealVector sv = singular_values(l2_matrix());
  if (std::isinf(p)) return sv.size() ? sv.maxCoeff() : 0.0;
  if (p == 1.0) return sv.sum();
  if (p == 2.0) return sv.norm();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], p);
  return std::pow(acc, 1.0 / p);
}

HSOperator identity_operator(SpacePtr space) {
  RealMatrix k = RealMatrix::Zero(space->size(), space->size());
  for (int x = 0; x < space->size(); ++x) k(x, x) = 1.0 / space->weight(x);
  return HSOperator(std::move(space), k);
}

HSOperator compose(const HSOperator& f, const HSOperator& g) {
  require_same_space(f, g, "compose");
  const RealVector& mu = f.space()->weights();
  Matrix h = f.values() * mu.cast<Complex>().asDiagonal() * g.values();
  return HSOperator(f.space(), std::move(h));
}

Complex duality_pairing(const HSOperator& z, const HSOperator& y) {
  require_same_space(z, y, "duality_pairing");
  return compose(z.flip(), y).trace();
}

HSOperator schur_apply(const Kernel& phi, const HSOperator& f) {
  if (!same_space(phi.space(), f.space())) throw DimensionError("schur_apply: space mismatch");
  return HSOperator(f.space(), Matrix(phi.values().cwiseProduct(f.values())));
}

bool is_selfadjoint_multiplier(const Kernel& phi, double tol) {
  return phi.values().imag().cwiseAbs().maxCoeff() <= tol;
}

bool is_unital_multiplier(const Kernel& phi, double tol) {
  return (phi.values().diagonal().array() - Complex(1.0, 0.0)).abs().maxCoeff() <= tol;
}

DefinitenessCertificate is_cp_multiplier(const Kernel& phi, double tol) {
  return is_positive_definite(phi, tol);
}

}  // namespace schurflow
