#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schurflow/errors.hpp"
#include "schurflow/types.hpp"

namespace schurflow {

/// Weighted finite set of atoms; the discrete measure space everything in
/// this library is indexed by. Atom masses are strictly positive. Immutable
/// after construction and safe to share across threads.
class FiniteSpace {
 public:
  explicit FiniteSpace(RealVector weights, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(weights_.size()); }
  const RealVector& weights() const { return weights_; }
  double weight(int k) const { return weights_[k]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  RealVector weights_;
  std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(RealVector weights, std::vector<std::string> labels = {});
SpacePtr make_space(std::initializer_list<double> weights);
SpacePtr unit_space(int n);

bool same_space(const FiniteSpace& a, const FiniteSpace& b);
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Points alpha_x in R^d, one row per atom of the underlying space.
class Embedding {
 public:
  Embedding(SpacePtr space, RealMatrix points);

  const SpacePtr& space() const { return space_; }
  int dim() const { return static_cast<int>(points_.cols()); }
  const RealMatrix& points() const { return points_; }
  RealVector point(int x) const { return points_.row(x); }

 private:
  SpacePtr space_;
  RealMatrix points_;
};

/// Discrete weighted L2 inner product; conjugate-linear in the first slot.
Complex weighted_inner(const Vector& xi, const Vector& eta, const FiniteSpace& sp);

}  // namespace schurflow
