#pragma once

#include <utility>
#include <vector>

#include "schurflow/space.hpp"
#include "schurflow/types.hpp"

namespace schurflow {

/// Complex function on pairs of atoms. Houses multiplier symbols, semigroup
/// generators and the kernels of integral operators alike.
class Kernel {
 public:
  Kernel(SpacePtr space, Matrix values);
  Kernel(SpacePtr space, const RealMatrix& values);

  const SpacePtr& space() const { return space_; }
  const Matrix& values() const { return values_; }
  int size() const { return static_cast<int>(values_.rows()); }
  Complex operator()(int x, int y) const { return values_(x, y); }

 private:
  SpacePtr space_;
  Matrix values_;
};

/// Outcome of a definiteness test. When the verdict is negative the witness
/// vector exhibits the violation: a quadratic form below -tol for eigenvalue
/// failures, a form with nonzero imaginary part for hermiticity failures.
struct DefinitenessCertificate {
  bool verdict = false;
  bool hermitian = true;
  double min_eigenvalue = 0.0;
  Vector witness;
  Complex quad_form{0.0, 0.0};
};

struct SchoenbergReport {
  struct Entry {
    double t;
    bool positive;
    double min_eigenvalue;
  };
  std::vector<Entry> entries;
  bool all_positive = true;
};

/// Scale-aware default cutoff for eigenvalue thresholding: 1e-10 * n * max|entry|.
double definiteness_tol(const Kernel& k);

bool is_hermitian(const Kernel& k, double tol);

/// Positive definiteness = PSD-ness of the value matrix. The certificate
/// carries the minimum eigenvalue of the hermitian part and, on failure,
/// a witness vector.
DefinitenessCertificate is_positive_definite(const Kernel& k, double tol);
DefinitenessCertificate is_positive_definite(const Kernel& k);

/// Negative definiteness: hermitian, and the quadratic form is <= tol on the
/// hyperplane of coefficient vectors summing to zero. min_eigenvalue reports
/// the negated top eigenvalue of the compressed form, so the verdict is
/// uniformly min_eigenvalue >= -tol.
DefinitenessCertificate is_negative_definite(const Kernel& k, double tol);
DefinitenessCertificate is_negative_definite(const Kernel& k);

/// Entrywise exp(-t*psi) positivity sweep over a grid of times.
SchoenbergReport schoenberg_check(const Kernel& psi, const std::vector<double>& t_grid,
                                  double tol);

/// Squared-distance kernel of an embedding: psi(x,y) = |alpha_x - alpha_y|^2.
Kernel squared_distance_kernel(const Embedding& emb);

/// Gram kernel of an embedding: phi(x,y) = <alpha_x, alpha_y>.
Kernel gram_kernel(const Embedding& emb);

/// Recovers a point embedding from a real negative definite kernel with zero
/// diagonal, via the positive definite kernel
///   phi(x,y) = (psi(x,base) + psi(base,y) - psi(x,y)) / 2
/// factorized by eigendecomposition. Eigenvalues within tolerance of zero are
/// dropped, so the returned dimension is the numerical rank (at least 1).
/// The squared distances of the result reproduce psi.
Embedding embedding_from_ndk(const Kernel& psi, int base = 0);

/// Discrete integral positivity: PSD-ness of the weight-congruent matrix
/// [mu_x phi(x,y) mu_y]; n_trials random test functions are evaluated as
/// additional witnesses of the quadratic form.
DefinitenessCertificate integrally_pd_check(const Kernel& phi, int n_trials, double tol,
                                            unsigned long long seed = 0x9ddfea08eb382d69ULL);

}  // namespace schurflow
