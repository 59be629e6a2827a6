#pragma once

#include <vector>

#include "schurflow/kernels.hpp"
#include "schurflow/operators.hpp"
#include "schurflow/space.hpp"

namespace schurflow {

/// Partition of the atom set into disjoint nonempty blocks. Block masses are
/// the sums of member weights; zero-mass blocks cannot occur since atom
/// weights are strictly positive.
class Partition {
 public:
  Partition(SpacePtr space, std::vector<std::vector<int>> blocks);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  double block_mass(int k) const { return masses_[k]; }
  const RealVector& block_masses() const { return masses_; }
  /// Index of the block containing atom x.
  int block_of(int x) const { return block_of_[x]; }

  /// True if every block of `finer` is contained in one block of *this.
  bool is_refined_by(const Partition& finer) const;

  static Partition singletons(SpacePtr space);

 private:
  SpacePtr space_;
  std::vector<std::vector<int>> blocks_;
  RealVector masses_;
  std::vector<int> block_of_;
};

/// Average operator: component k = sum_{x in A_k} xi_x mu_x / sqrt(mu(A_k)).
Vector block_average(const Partition& part, const Vector& xi);

/// Isometric embedding sending e_k to 1_{A_k} / sqrt(mu(A_k)); the weighted
/// adjoint of block_average.
Vector block_embed(const Partition& part, const Vector& c);

/// Compression of an operator to the block matrix algebra:
/// entry (i,j) = sum_{x in A_i, y in A_j} z(x,y) mu_x mu_y / sqrt(mu(A_i) mu(A_j)).
/// Unital and contractive.
Matrix compress_operator(const Partition& part, const HSOperator& z);

/// Lift of a block matrix back to an operator kernel, constant on block
/// rectangles: kernel(x,y) = m_ij / sqrt(mu(A_i) mu(A_j)) on A_i x A_j.
/// compress_operator(lift_matrix(m)) = m.
HSOperator lift_matrix(const Partition& part, const Matrix& m);

/// Block average of a symbol:
/// entry (i,j) = sum_{A_i x A_j} phi mu mu / (mu(A_i) mu(A_j)).
/// The compressed multiplier equals the Schur multiplier by this matrix.
Matrix compress_symbol(const Kernel& phi, const Partition& part);

/// Block-constant lift of compress_symbol: the conditional expectation of the
/// symbol onto the partition. Preserves positive definiteness.
Kernel coarsen_symbol(const Kernel& phi, const Partition& part);

struct RefinementReport {
  struct Level {
    int blocks;
    double max_pairing_error;  // max over probes of |<coarsened - phi, probe>|
    double max_projection_error;  // max over probes of the S2 compression error
  };
  std::vector<Level> levels;
  bool nonincreasing = false;
  bool zero_at_singletons = false;
};

/// Walks a nested chain of partitions (each refining the previous) and
/// reports, per level, the weak pairing error of the coarsened symbol against
/// L1 probe kernels and the S2 error of compress-then-lift on the probes.
/// Both sequences are checked to be nonincreasing within `slack` and to
/// vanish when the chain ends in singletons.
RefinementReport refinement_convergence(const Kernel& phi, const std::vector<Partition>& chain,
                                        const std::vector<HSOperator>& probes,
                                        double slack = 1e-12);

}  // namespace schurflow
