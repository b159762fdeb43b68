#pragma once

#include "pitypical/series.hpp"

namespace pityp {

/// A Frobenius series f for the uniformizer pi: f == pi*T mod degree 2 and
/// f == T^q mod pi.  Coefficients are treated as exact (polynomial) data.
struct FrobeniusSeries {
  Series<OElement> f;
  SpecPtr spec;

  /// f viewed as a polynomial, zero-padded or truncated to degree D.
  Series<OElement> poly(int D) const { return f.extended(D).truncated(D); }
};

FrobeniusSeries validate_frobenius_series(Series<OElement> f, SpecPtr spec);

/// The default choice f = pi*T + T^q.
FrobeniusSeries default_frobenius(const SpecPtr& spec, int D = -1);

/// The unique group law F over o_L with F == X+Y mod total degree 2 and
/// f(F(X,Y)) = F(f(X), f(Y)) mod total degree D+1, by the degree-by-degree
/// solver; the degree-r correction divides by pi^r - pi = pi(pi^{r-1} - 1).
Bivariate<OElement> build_group_law(const FrobeniusSeries& fs, int D);

/// The unique [a] with [a] == a*T mod degree 2 and f([a]) = [a](f).
Series<OElement> build_endomorphism(const FrobeniusSeries& fs, const OElement& a, int D);
Series<OElement> build_endomorphism(const FrobeniusSeries& fs, i64 a, int D);

/// n-fold composite f(f(...f(T))); [pi^0] = T.
Series<OElement> iterate_pi(const FrobeniusSeries& fs, int n, int D);

/// The logarithm: log == T mod degree 2 with log(f(T)) = pi*log(T).
Series<LaurentScalar> logarithm(const FrobeniusSeries& fs, int D);

struct FormalGroupModel {
  SpecPtr spec;
  std::string source;  // "from-f" or "honda"
  Series<LaurentScalar> log;
  Bivariate<OElement> F;
  Series<OElement> pi_endo;
  int integral_checked_deg = 0;  // degree to which F/[pi] integrality was verified
};

/// Honda model: log = sum_k pi^{-k} T^{q^k}; exp is its compositional
/// inverse; F = exp(log X + log Y), [pi] = exp(pi log T).  Integrality of
/// F and [pi] is verified up to check_deg (default: min(D, 24); the
/// intermediate denominators grow linearly with degree and are capped by
/// the 64-bit residue budget).
FormalGroupModel honda_model(const SpecPtr& spec, int D, int check_deg = -1);

FormalGroupModel model_from_f(const FrobeniusSeries& fs, int D);

/// Genus of CP^m: (m+1) * c_{m+1} where log = sum c_j T^j.
LaurentScalar genus_cp(const FormalGroupModel& model, int m);

}  // namespace pityp
