#include "schurflow/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace schurflow {

namespace {

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

// Orthonormal basis of the hyperplane { c : sum c_i = 0 }, as the trailing
// columns of a Householder Q mapping e_1 to the normalized all-ones vector.
RealMatrix sum_zero_basis(int n) {
  RealMatrix ones = RealMatrix::Ones(n, 1) / std::sqrt(static_cast<double>(n));
  Eigen::HouseholderQR<RealMatrix> qr(ones);
  RealMatrix q = qr.householderQ();
  return q.rightCols(n - 1);
}

Complex quad_form(const Matrix& m, const Vector& c) { return (c.adjoint() * m * c)(0, 0); }

}  // namespace

Kernel::Kernel(SpacePtr space, Matrix values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw DimensionError("Kernel: null space");
  if (values_.rows() != values_.cols()) throw DimensionError("Kernel: values not square");
  if (values_.rows() != space_->size())
    throw DimensionError("Kernel: dimension does not match atom count");
}

Kernel::Kernel(SpacePtr space, const RealMatrix& values)
    : Kernel(std::move(space), Matrix(values.cast<Complex>())) {}

double definiteness_tol(const Kernel& k) {
  double scale = k.values().cwiseAbs().maxCoeff();
  return 1e-10 * k.size() * std::max(scale, 1.0);
}

bool is_hermitian(const Kernel& k, double tol) { return hermiticity_defect(k.values()) <= tol; }

DefinitenessCertificate is_positive_definite(const Kernel& k, double tol) {
  DefinitenessCertificate cert;
  const Matrix& m = k.values();
  cert.hermitian = hermiticity_defect(m) <= tol;

  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  cert.min_eigenvalue = es.eigenvalues()(0);
  bool spectrum_ok = cert.min_eigenvalue >= -tol;
  cert.verdict = cert.hermitian && spectrum_ok;
  if (cert.verdict) return cert;

  if (!spectrum_ok) {
    cert.witness = es.eigenvectors().col(0);
    cert.quad_form = quad_form(m, cert.witness);
  } else {
    // Hermiticity failure with PSD hermitian part: witness a vector whose
    // quadratic form has nonzero imaginary part, from the skew part.
    Matrix skew_h = Complex(0.0, 0.5) * (m.adjoint() - m);  // i*(m - m^H)/2, hermitian
    Eigen::SelfAdjointEigenSolver<Matrix> sk(skew_h);
    int idx = std::abs(sk.eigenvalues()(0)) > std::abs(sk.eigenvalues()(k.size() - 1))
                  ? 0
                  : k.size() - 1;
    cert.witness = sk.eigenvectors().col(idx);
    cert.quad_form = quad_form(m, cert.witness);
  }
  return cert;
}

DefinitenessCertificate is_positive_definite(const Kernel& k) {
  return is_positive_definite(k, definiteness_tol(k));
}

DefinitenessCertificate is_negative_definite(const Kernel& k, double tol) {
  DefinitenessCertificate cert;
  const Matrix& m = k.values();
  cert.hermitian = hermiticity_defect(m) <= tol;
  const int n = k.size();
  if (n == 1) {
    // No nonzero sum-zero vectors; the form condition is vacuous.
    cert.verdict = cert.hermitian;
    cert.min_eigenvalue = 0.0;
    return cert;
  }

  Matrix basis = sum_zero_basis(n).cast<Complex>();
  Matrix compressed = basis.adjoint() * hermitian_part(m) * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(compressed);
  double max_eig = es.eigenvalues()(n - 2);
  cert.min_eigenvalue = -max_eig;
  cert.verdict = cert.hermitian && max_eig <= tol;
  if (!cert.verdict) {
    cert.witness = basis * es.eigenvectors().col(n - 2);
    cert.quad_form = quad_form(m, cert.witness);
  }
  return cert;
}

DefinitenessCertificate is_negative_definite(const Kernel& k) {
  return is_negative_definite(k, definiteness_tol(k));
}

SchoenbergReport schoenberg_check(const Kernel& psi, const std::vector<double>& t_grid,
                                  double tol) {
  SchoenbergReport report;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("schoenberg_check: grid times must be positive");
    Kernel exp_kernel(psi.space(), Matrix((-t * psi.values().array()).exp()));
    auto cert = is_positive_definite(exp_kernel, tol);
    report.entries.push_back({t, cert.verdict, cert.min_eigenvalue});
    report.all_positive = report.all_positive && cert.verdict;
  }
  return report;
}

Kernel squared_distance_kernel(const Embedding& emb) {
  const RealMatrix& p = emb.points();
  const int n = static_cast<int>(p.rows());
  RealMatrix psi(n, n);
  for (int x = 0; x < n; ++x) {
    psi(x, x) = 0.0;
    for (int y = x + 1; y < n; ++y) {
      double d2 = (p.row(x) - p.row(y)).squaredNorm();
      psi(x, y) = d2;
      psi(y, x) = d2;
    }
  }
  return Kernel(emb.space(), psi);
}

Kernel gram_kernel(const Embedding& emb) {
  RealMatrix g = emb.points() * emb.points().transpose();
  return Kernel(emb.space(), g);
}

Embedding embedding_from_ndk(const Kernel& psi, int base) {
  const int n = psi.size();
  if (base < 0 || base >= n) throw DomainError("embedding_from_ndk: base index out of range");
  const double tol = definiteness_tol(psi);
  if (psi.values().imag().cwiseAbs().maxCoeff() > tol)
    throw PreconditionError("embedding_from_ndk: kernel is not real-valued");
  if (psi.values().real().diagonal().cwiseAbs().maxCoeff() > tol)
    throw PreconditionError("embedding_from_ndk: kernel diagonal is not zero");
  auto cert = is_negative_definite(psi, tol);
  if (!cert.verdict)
    throw PreconditionError(
        "embedding_from_ndk: kernel is not negative definite (violation " +
        std::to_string(-cert.min_eigenvalue) + ")");

  RealMatrix psi_r = psi.values().real();
  RealMatrix phi(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      phi(x, y) = 0.5 * (psi_r(x, base) + psi_r(base, y) - psi_r(x, y));

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (phi + phi.transpose()));
  const RealVector& eig = es.eigenvalues();
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (eig(i) > tol) kept.push_back(i);

  const int dim = std::max<int>(1, static_cast<int>(kept.size()));
  RealMatrix points = RealMatrix::Zero(n, dim);
  for (size_t j = 0; j < kept.size(); ++j)
    points.col(static_cast<int>(j)) = es.eigenvectors().col(kept[j]) * std::sqrt(eig(kept[j]));
  return Embedding(psi.space(), points);
}

DefinitenessCertificate integrally_pd_check(const Kernel& phi, int n_trials, double tol,
                                            unsigned long long seed) {
  const int n = phi.size();
  const RealVector& mu = phi.space()->weights();
  Matrix congruent = mu.cast<Complex>().asDiagonal() * phi.values() *
                     mu.cast<Complex>().asDiagonal();
  auto cert = is_positive_definite(Kernel(phi.space(), congruent), tol);

  // Random test functions, evaluated as explicit witnesses of the integral
  // quadratic form. The smallest observed form is folded into quad_form when
  // it undercuts the eigenvector witness.
  std::uint64_t state = seed;
  auto next_unit = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  double min_form = cert.witness.size() ? cert.quad_form.real() : 0.0;
  Vector min_xi;
  for (int trial = 0; trial < n_trials; ++trial) {
    Vector xi(n);
    for (int k = 0; k < n; ++k) xi[k] = Complex(next_unit(), next_unit());
    double form = (xi.adjoint() * congruent * xi)(0, 0).real();
    if (form < min_form) {
      min_form = form;
      min_xi = xi / xi.norm();
    }
  }
  if (min_xi.size() && min_form < -tol) {
    cert.witness = min_xi;
    cert.quad_form = (min_xi.adjoint() * congruent * min_xi)(0, 0);
  }
  return cert;
}

}  // namespace schurflow
