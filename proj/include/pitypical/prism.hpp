#pragma once

#include "pitypical/lubin_tate.hpp"
#include "pitypical/witt.hpp"

namespace pityp {

/// q_n = g([pi^{n-1}](T)) where g = f/T; computed by composition, never by
/// series division ([pi^{n-1}] has non-unit leading behaviour at finite
/// pi-precision).  q_1 = f/T; q_n(0) = pi.
Series<OElement> compute_qn(const FrobeniusSeries& fs, int n, int D);

/// Constructive ideal-membership witness: pi = q_{n+1} + c * q_n mod
/// T^{D+1}, with c = [pi^{n-1}] * (ftilde o [pi^n]) and
/// ftilde = (pi - q_1)/T.  Re-checkable by pure multiplication.
struct PrismCertificate {
  SpecPtr spec;
  FrobeniusSeries f;
  int n = 1;
  Series<OElement> qn, qn1, cofactor;
  int checked_mod_degree = 0;  // identity verified mod T^{checked_mod_degree + 1}
  bool pass = false;
};

/// Builds and verifies the certificate; throws CertificateFailure when the
/// identity fails at precision (never expected — indicates a bug upstream).
PrismCertificate prism_certificate(const FrobeniusSeries& fs, int n, int D);

/// phi(q_n) = q_n o f; asserted equal to q_{n+1} before returning.
Series<OElement> phi_ideal_image(const FrobeniusSeries& fs, int n, int D);

struct PrismConditionReport {
  int n = 1;
  int D = 0;
  bool phi_matches_next = false;    // phi(q_n) = q_{n+1}
  bool certificate = false;         // pi = q_{n+1} + c q_n mod T^{D+1}
  bool origin_distinguished = false;  // v_pi(q_n(0)) = 1; for n = 1, q_n(0) = pi exactly
  std::vector<u64> delta_qn_residue;  // delta(q_n) mod (pi, T), informational
  bool pass() const { return phi_matches_next && certificate && origin_distinguished; }
};

PrismConditionReport verify_prism_condition(const FrobeniusSeries& fs, int n, int D);

}  // namespace pityp
