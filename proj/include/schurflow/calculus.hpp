#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schurflow/operators.hpp"
#include "schurflow/semigroup.hpp"

namespace schurflow {

/// Bounded analytic function on a sector around the positive axis, with the
/// decay certificate |f(z)| <= c |z|^s / (1+|z|)^{2s}. The bound is
/// spot-checked on a logarithmic grid of sector points at construction.
class SectorFunction {
 public:
  SectorFunction(std::function<Complex(Complex)> evaluator, double theta_max, double decay_s,
                 double decay_c);

  Complex operator()(Complex z) const { return evaluator_(z); }
  double theta_max() const { return theta_max_; }
  double decay_s() const { return decay_s_; }
  double decay_c() const { return decay_c_; }

  /// Pointwise product; sector angles intersect, decay exponents add.
  SectorFunction operator*(const SectorFunction& other) const;

  /// z^s / (1+z)^m for m >= 2s > 0, analytic up to the negative axis.
  static SectorFunction rational(double s, int m);

 private:
  std::function<Complex(Complex)> evaluator_;
  double theta_max_;
  double decay_s_;
  double decay_c_;
};

/// The three stock functions: "z/(1+z)^2", "e^-z-e^-2z", "z^0.5/(1+z)".
const std::map<std::string, SectorFunction>& builtin_sector_functions();

/// Resolves a --function value: builtin name (several aliases accepted) or a
/// rational spec of the form "z^a/(1+z)^b".
SectorFunction parse_sector_function(const std::string& spec);

/// Two-ray sector contour in log-radius coordinates: nodes per ray on
/// [-truncation, truncation], trapezoidal rule, rays at angles +-theta.
struct ContourQuadrature {
  double theta = 2.356194490192344928846982537459627163;  // 3*pi/4
  int nodes = 400;
  double truncation = 30.0;
};

/// Symbol of (lambda - A)^{-1} for the generator A acting as the multiplier
/// by psi: entrywise 1/(lambda - psi(x,y)). lambda must stay clear of the
/// finitely many values of psi.
Kernel resolvent(const SchurSemigroup& sg, Complex lambda);

/// Symbol of f(A) by direct evaluation: f(psi(x,y)) where psi > 0, and 0 on
/// the entries where psi vanishes (the decay of f forces the value at the
/// spectral point 0).
Kernel hinfty_oracle(const SchurSemigroup& sg, const SectorFunction& f);

/// Symbol of f(A) by the Cauchy integral over the sector boundary, evaluated
/// with the given quadrature. Approaches hinfty_oracle as nodes and
/// truncation grow.
Kernel hinfty_contour(const SchurSemigroup& sg, const SectorFunction& f,
                      const ContourQuadrature& quad);

struct CalcBoundReport {
  double p = 2.0;
  double f_sup_norm = 0.0;         // sup |f| over the sector sample grid
  double max_multiplier_norm = 0.0;  // max_k |M_{f(A)} g_k|_p over unit g_k
  double ratio = 0.0;              // empirical lower bound, no upper claim
  double exact_s2_ratio = 0.0;     // p = 2 only: max |f(psi)| / f_sup_norm
  int trials = 0;
};

/// Empirical functional-calculus bound probe on the Schatten-p space: the
/// ratio of the attained multiplier norm to the sup norm of f on the sector.
/// For p = 2 the multiplier norm is exactly the sup of the symbol, so the
/// ratio is a true value and never exceeds 1.
CalcBoundReport hcalc_bound_check(const SchurSemigroup& sg, const SectorFunction& f,
                                  const ContourQuadrature& quad, double p, int n_trials,
                                  std::uint64_t seed = 0x8f1bbcdc5a826f1bULL);

struct BmoNorms {
  double col = 0.0;
  double row = 0.0;
  double bmo = 0.0;
};

/// Semigroup BMO norms: col = sup_t |T_t(|x - T_t x|^2)|_inf^{1/2} with the
/// sup taken over the grid plus the closed-form t -> infinity limit; row is
/// the same for the adjoint, bmo their maximum.
BmoNorms bmo_norms(const SchurSemigroup& sg, const HSOperator& x,
                   const std::vector<double>& t_grid);

/// Projection onto the part of x that decays under the semigroup: zeroes the
/// entries where the generator symbol vanishes. The complement is the
/// t -> infinity limit of T_t(x).
HSOperator decaying_part(const SchurSemigroup& sg, const HSOperator& x);

struct InterpolationReport {
  double p = 2.0;
  double schatten_p = 0.0;
  double bmo = 0.0;
  double schatten_1 = 0.0;
  double ratio = 0.0;  // schatten_p / (p * bmo^{1-1/p} * schatten_1^{1/p})
};

/// Data-only report around the BMO interpolation inequality: the three norms
/// of the decaying part of x and their ratio. No pass/fail is attached; the
/// interpolation-space norm itself is not computed.
InterpolationReport interpolation_report(const SchurSemigroup& sg, const HSOperator& x,
                                         double p, const std::vector<double>& t_grid);

}  // namespace schurflow
