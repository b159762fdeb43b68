#pragma once

#include "pitypical/series.hpp"

namespace pityp {

/// The numerical polynomial theta_k, degree q^k, with pi-power-denominator
/// coefficients; theta_0 = T.
struct ThetaPolynomial {
  int k = 0;
  Series<LaurentScalar> poly;  // length q^k + 1
  SpecPtr spec;
};

/// theta_k by the recursion
///   theta_k = -pi^{-k} [ sum_{0<=i<k} pi^i theta_i(T)^{q^{k-i}} - T ].
/// Coefficient denominators reach pi^{(q^k-1)/(q-1)}; representing them
/// faithfully needs M + (q^k-1)/(q-1) residue digits, so large k over
/// large q is rejected (BadPrecision) rather than silently rounded.
ThetaPolynomial theta_poly(const SpecPtr& spec, int k);

/// theta_k(a) by the same recursion on values; each step divides by pi^k
/// exactly, so integrality of the value is certified constructively.
/// Throws NotDivisible when the value fails to be integral.
OElement theta_value(const SpecPtr& spec, int k, const OElement& a);

struct ThetaEvalReport {
  int k = 0;
  long checked = 0;
  bool all_integral = true;
  long first_failure = -1;  // sample index
};

ThetaEvalReport theta_eval_check(const SpecPtr& spec, int k, const std::vector<OElement>& samples);

struct FrobeniusIdentityReport {
  bool poly_identity = false;   // T^q + pi theta_1(T) = T as polynomials
  bool value_identity = true;   // a^q + pi theta_1(a) = a on samples
  bool residue_identity = true; // a^q == a mod pi on samples
  long checked = 0;
};

FrobeniusIdentityReport frobenius_identity_check(const SpecPtr& spec,
                                                 const std::vector<OElement>& samples);

}  // namespace pityp
