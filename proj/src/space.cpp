#include "schurflow/space.hpp"

#include <utility>

namespace schurflow {

FiniteSpace::FiniteSpace(RealVector weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
  if (weights_.size() < 1) throw DimensionError("FiniteSpace: need at least one atom");
  for (Eigen::Index k = 0; k < weights_.size(); ++k) {
    if (!(weights_[k] > 0.0))
      throw DomainError("FiniteSpace: weight " + std::to_string(k) + " is not strictly positive");
  }
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(weights_.size()))
    throw DimensionError("FiniteSpace: label count does not match atom count");
}

SpacePtr make_space(RealVector weights, std::vector<std::string> labels) {
  return std::make_shared<const FiniteSpace>(std::move(weights), std::move(labels));
}

SpacePtr make_space(std::initializer_list<double> weights) {
  RealVector w(static_cast<Eigen::Index>(weights.size()));
  Eigen::Index k = 0;
  for (double v : weights) w[k++] = v;
  return make_space(std::move(w));
}

SpacePtr unit_space(int n) { return make_space(RealVector::Ones(n)); }

bool same_space(const FiniteSpace& a, const FiniteSpace& b) {
  return a.size() == b.size() && a.weights() == b.weights();
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_space(*a, *b);
}

Embedding::Embedding(SpacePtr space, RealMatrix points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (!space_) throw DimensionError("Embedding: null space");
  if (points_.rows() != space_->size())
    throw DimensionError("Embedding: point rows do not match atom count");
  if (points_.cols() < 1) throw DimensionError("Embedding: dimension must be positive");
}

Complex weighted_inner(const Vector& xi, const Vector& eta, const FiniteSpace& sp) {
  if (xi.size() != sp.size() || eta.size() != sp.size())
    throw DimensionError("weighted_inner: vector length does not match atom count");
  Complex acc{0.0, 0.0};
  for (int k = 0; k < sp.size(); ++k) acc += sp.weight(k) * std::conj(xi[k]) * eta[k];
  return acc;
}

}  // namespace schurflow
