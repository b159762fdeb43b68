#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pitypical/errors.hpp"

namespace pityp {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Element of W(k_L) = Z_p[omega]/(g), as f residues mod p^M (ascending
// powers of omega).
using Wk = std::vector<u64>;

class LocalFieldSpec;
using SpecPtr = std::shared_ptr<const LocalFieldSpec>;

/// Presentation of o_L = W(k_L)[pi]/E(pi): prime p, unramified polynomial g
/// (monic degree f, irreducible mod p), Eisenstein polynomial E (monic
/// degree e over W(k_L)), working precision exponent M.
class LocalFieldSpec : public std::enable_shared_from_this<LocalFieldSpec> {
 public:
  u64 p = 0;
  int M = 0;      // elements exact mod p^M
  int f = 1;      // residue degree
  int e = 1;      // ramification degree
  u64 q = 0;      // p^f
  int n = 1;      // e*f = [L:Q_p]
  u64 pM = 0;     // p^M
  std::vector<u64> g;       // length f+1, monic, residues mod p^M
  std::vector<Wk> E;        // length e+1, monic, E[i] is a Wk
  std::vector<i64> g_int;   // exact integer coefficients as given
  std::vector<std::vector<i64>> E_int;

  // Largest precision exponent representable in 64-bit residues for p.
  static int precision_cap(u64 p);

  bool same_field(const LocalFieldSpec& o) const;
  bool operator==(const LocalFieldSpec& o) const;

  // Same field data at precision min(cap, M + extra).
  SpecPtr elevated(int extra) const;

 private:
  friend SpecPtr make_field_spec(u64 p, std::vector<i64> g, std::vector<std::vector<i64>> E, int M);
  LocalFieldSpec() = default;
};

/// Validates and builds a field presentation.  g and E are given with
/// (possibly negative) integer coefficients, ascending degree; each E
/// coefficient is a vector over the omega-basis of W(k_L).
SpecPtr make_field_spec(u64 p, std::vector<i64> g, std::vector<std::vector<i64>> E, int M);

/// Convenience: E with plain integer coefficients.
SpecPtr make_field_spec_int(u64 p, std::vector<i64> g, std::vector<i64> E, int M);

/// Element of o_L in the basis pi^i omega^j, residues mod p^M.
/// valid_prec (vp) is the guaranteed absolute p-precision: the element is
/// known exactly mod p^vp.  Stored residues are canonical mod p^M but carry
/// no guarantee beyond p^vp.
class OElement {
 public:
  SpecPtr spec;
  std::vector<u64> c;  // e*f residues, row-major in (i, j)
  int vp = 0;

  OElement() = default;
  OElement(SpecPtr s, std::vector<u64> coeffs, int valid_prec);

  static OElement zero(const SpecPtr& s);
  static OElement one(const SpecPtr& s);
  static OElement pi(const SpecPtr& s);
  static OElement from_int(const SpecPtr& s, i64 v);
  static OElement random(const SpecPtr& s, std::mt19937_64& rng);
  /// Random element with coordinates below p^digits.  Scalars fed to maps
  /// that do not factor through o_L/p^M (e.g. a -> [a]) must be exact, so
  /// sample pairs at <= (M-2)/2 digits to keep their products exact too.
  static OElement random_digits(const SpecPtr& s, std::mt19937_64& rng, int digits);

  OElement operator+(const OElement& b) const;
  OElement operator-(const OElement& b) const;
  OElement operator-() const;
  OElement operator*(const OElement& b) const;

  OElement pow(u64 n) const;
  OElement pow_q() const { return pow(spec->q); }
  OElement mul_pi() const { return *this * pi(spec); }

  /// pi-adic valuation detectable at current precision; nullopt means the
  /// element is indistinguishable from 0 mod p^vp (infinite, with caveat).
  std::optional<long> val_pi() const;

  /// Exact division by pi^k.  Uses pi^e = p * Y with Y a unit of o_L,
  /// i.e. 1/pi = -pi^{e-1} u(pi)^{-1} / p from E(pi) = 0.
  /// Costs ceil(k/e) of absolute p-precision.
  OElement div_pi_exact(long k) const;

  /// Multiplicative inverse of a unit (val_pi == 0), by Newton lifting of
  /// the residue-field inverse.
  OElement inverse() const;

  bool is_zero() const;                       // at current precision
  bool eq(const OElement& b) const;           // at min precision
  bool eq_at(const OElement& b, int prec) const;

  /// Residue mod pi as an element of k_L = F_p[omega]/(g): f residues mod p.
  std::vector<u64> residue() const;

  /// Same element viewed at a lower precision M2 (spec2 must present the
  /// same field with M2 <= M).
  OElement reduced_to(const SpecPtr& spec2) const;

 private:
  void check_same_spec(const OElement& b) const;
};

/// Element of L with a pi-power denominator: num / pi^denom_exp.
/// Kept lazily normalized: reduce() strips pi factors that are decidable
/// at current precision.
class LaurentScalar {
 public:
  OElement num;
  long denom_exp = 0;

  LaurentScalar() = default;
  explicit LaurentScalar(OElement n, long m = 0);

  static LaurentScalar zero(const SpecPtr& s) { return LaurentScalar(OElement::zero(s)); }
  static LaurentScalar one(const SpecPtr& s) { return LaurentScalar(OElement::one(s)); }

  LaurentScalar operator+(const LaurentScalar& b) const;
  LaurentScalar operator-(const LaurentScalar& b) const;
  LaurentScalar operator-() const;
  LaurentScalar operator*(const LaurentScalar& b) const;

  LaurentScalar& reduce();

  bool is_zero() const;
  /// Cross-multiplied equality (no division, no precision loss).
  bool eq(const LaurentScalar& b) const;

  /// Integrality at current precision: yes / no / undecidable.
  enum class Tri { yes, no, unknown };
  Tri integral() const;

  /// Conversion to o_L; throws IntegralityFailure when not integral or
  /// undecidable at precision.
  OElement to_integral() const;
};

// Residue-field helpers (k_L = F_p[omega]/(g mod p)).
std::vector<u64> kl_mul(const LocalFieldSpec& s, const std::vector<u64>& a, const std::vector<u64>& b);
bool kl_is_zero(const std::vector<u64>& a);

}  // namespace pityp
