#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "pitypical/field.hpp"

namespace pityp {

// Carrier-ring interface used by the generic series / Witt code.  Overloads
// below cover OElement and LaurentScalar; Series<R> provides its own (a
// truncated series ring is itself a carrier, e.g. o_L[[T]] for Witt pairs).

inline OElement ring_zero(const OElement& like) { return OElement::zero(like.spec); }
inline OElement ring_one(const OElement& like) { return OElement::one(like.spec); }
inline OElement ring_mul_pi(const OElement& a) { return a.mul_pi(); }
inline OElement ring_div_pi(const OElement& a, long k) { return a.div_pi_exact(k); }
inline u64 ring_q(const OElement& a) { return a.spec->q; }
inline bool ring_is_zero(const OElement& a) { return a.is_zero(); }
inline bool ring_eq(const OElement& a, const OElement& b) { return a.eq(b); }
inline OElement ring_inverse(const OElement& a) { return a.inverse(); }

inline LaurentScalar ring_zero(const LaurentScalar& like) { return LaurentScalar::zero(like.num.spec); }
inline LaurentScalar ring_one(const LaurentScalar& like) { return LaurentScalar::one(like.num.spec); }
inline LaurentScalar ring_mul_pi(const LaurentScalar& a) {
  if (a.denom_exp > 0) { LaurentScalar r = a; r.denom_exp -= 1; return r; }
  return LaurentScalar(a.num.mul_pi(), 0);
}
inline LaurentScalar ring_div_pi(const LaurentScalar& a, long k) {
  return LaurentScalar(a.num, a.denom_exp + k);
}
inline u64 ring_q(const LaurentScalar& a) { return a.num.spec->q; }
inline bool ring_is_zero(const LaurentScalar& a) { return a.is_zero(); }
inline bool ring_eq(const LaurentScalar& a, const LaurentScalar& b) { return a.eq(b); }
inline LaurentScalar ring_inverse(const LaurentScalar& a) {
  LaurentScalar r = a;
  r.reduce();
  OElement inv = r.num.inverse();
  return LaurentScalar(inv * OElement::pi(inv.spec).pow((u64)r.denom_exp), 0);
}

template <typename R>
R ring_pow(const R& a, u64 n) {
  R acc = ring_one(a);
  R sq = a;
  while (n) {
    if (n & 1) acc = acc * sq;
    if (n >>= 1) sq = sq * sq;
  }
  return acc;
}

/// Truncated univariate power series over a carrier ring R: coefficients
/// for degrees 0..D.  Arithmetic truncates to the smaller D of the
/// operands and never extends it.
template <typename R>
class Series {
 public:
  std::vector<R> coeffs;  // index = degree, size D+1
  std::string var = "T";

  Series() = default;
  Series(std::vector<R> cs, std::string v) : coeffs(std::move(cs)), var(std::move(v)) {
    if (coeffs.empty()) throw Error(ErrorCode::ParseError, "empty series");
  }

  int deg() const { return (int)coeffs.size() - 1; }

  static Series zeros(const R& like, int D, std::string v = "T") {
    return Series(std::vector<R>((size_t)D + 1, ring_zero(like)), std::move(v));
  }
  static Series constant(const R& value, int D, std::string v = "T") {
    Series s = zeros(value, D, std::move(v));
    s.coeffs[0] = value;
    return s;
  }
  static Series identity(const R& like, int D, std::string v = "T") {
    Series s = zeros(like, D, std::move(v));
    if (D >= 1) s.coeffs[1] = ring_one(like);
    return s;
  }

  Series truncated(int D2) const {
    if (D2 >= deg()) return *this;
    Series s = *this;
    s.coeffs.resize((size_t)D2 + 1, ring_zero(coeffs[0]));
    return s;
  }

  /// Zero-padded extension; only meaningful when the series is an exact
  /// polynomial (the Frobenius series in play all are).
  Series extended(int D2) const {
    Series s = *this;
    if (D2 > deg()) s.coeffs.resize((size_t)D2 + 1, ring_zero(coeffs[0]));
    return s;
  }

  Series operator+(const Series& b) const {
    int D = std::min(deg(), b.deg());
    Series r = truncated(D);
    for (int i = 0; i <= D; ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
    return r;
  }
  Series operator-(const Series& b) const {
    int D = std::min(deg(), b.deg());
    Series r = truncated(D);
    for (int i = 0; i <= D; ++i) r.coeffs[i] = r.coeffs[i] - b.coeffs[i];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.coeffs) x = -x;
    return r;
  }
  Series operator*(const Series& b) const {
    int D = std::min(deg(), b.deg());
    Series r = zeros(coeffs[0], D, var);
    for (int i = 0; i <= D; ++i) {
      if (ring_is_zero(coeffs[i])) continue;
      for (int j = 0; i + j <= D && j <= b.deg(); ++j)
        r.coeffs[i + j] = r.coeffs[i + j] + coeffs[i] * b.coeffs[j];
    }
    return r;
  }

  Series scale(const R& s) const {
    Series r = *this;
    for (auto& x : r.coeffs) x = x * s;
    return r;
  }

  bool eq(const Series& b) const {
    int D = std::min(deg(), b.deg());
    for (int i = 0; i <= D; ++i)
      if (!ring_eq(coeffs[i], b.coeffs[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : coeffs)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  /// Index of the first coefficient not indistinguishable from 0;
  /// deg()+1 if none (precision-caveat case).
  int t_valuation() const {
    for (int i = 0; i <= deg(); ++i)
      if (!ring_is_zero(coeffs[i])) return i;
    return deg() + 1;
  }

  R eval(const R& x) const {  // Horner
    R acc = coeffs[deg()];
    for (int i = deg() - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
  }
};

/// g(h) truncated at min(D_g, D_h); requires h(0) = 0.
template <typename R>
Series<R> compose(const Series<R>& g, const Series<R>& h) {
  if (!ring_is_zero(h.coeffs[0]))
    throw Error(ErrorCode::NonzeroConstant, "inner series has nonzero constant term");
  int D = std::min(g.deg(), h.deg());
  Series<R> ht = h.truncated(D);
  Series<R> acc = Series<R>::constant(g.coeffs[g.deg()], D, h.var);
  for (int i = g.deg() - 1; i >= 0; --i) {
    acc = acc * ht;
    acc.coeffs[0] = acc.coeffs[0] + g.coeffs[i];
  }
  return acc;
}

/// Inverse of a series with unit constant term, mod T^{D+1}.
template <typename R>
Series<R> invert_unit(const Series<R>& g) {
  R c0 = g.coeffs[0];
  if (ring_is_zero(c0)) throw Error(ErrorCode::NotUnit, "constant term is zero");
  R c0inv = [&] {
    try {
      return ring_inverse(c0);
    } catch (const Error&) {
      throw Error(ErrorCode::NotUnit, "constant term is not a unit");
    }
  }();
  int D = g.deg();
  Series<R> r = Series<R>::zeros(c0, D, g.var);
  r.coeffs[0] = c0inv;
  // h_n = -c0^{-1} * sum_{i=1..n} g_i h_{n-i}
  for (int n = 1; n <= D; ++n) {
    R s = ring_zero(c0);
    for (int i = 1; i <= n; ++i) s = s + g.coeffs[i] * r.coeffs[n - i];
    r.coeffs[n] = -(c0inv * s);
  }
  return r;
}

/// Quotient g / h for h = T^k * unit; truncation degree drops by k.
template <typename R>
Series<R> exact_divide(const Series<R>& g, const Series<R>& h) {
  int k = h.t_valuation();
  if (k > h.deg()) throw Error(ErrorCode::NotDivisible, "divisor is zero at precision");
  {
    try {
      ring_inverse(h.coeffs[k]);
    } catch (const Error&) {
      throw Error(ErrorCode::NotDivisible, "divisor is not T^k times a unit series");
    }
  }
  for (int i = 0; i < k && i <= g.deg(); ++i)
    if (!ring_is_zero(g.coeffs[i]))
      throw Error(ErrorCode::NotDivisible, "dividend not divisible by T^" + std::to_string(k));
  int Dg = g.deg() - k, Dh = h.deg() - k;
  if (Dg < 0) throw Error(ErrorCode::NotDivisible, "dividend truncated below T^k");
  Series<R> gs(std::vector<R>(g.coeffs.begin() + k, g.coeffs.end()), g.var);
  Series<R> u(std::vector<R>(h.coeffs.begin() + k, h.coeffs.end()), h.var);
  int D = std::min(Dg, Dh);
  return gs.truncated(D) * invert_unit(u.truncated(D));
}

/// Coefficientwise exact pi-power division.
template <typename R>
Series<R> series_div_pi(const Series<R>& g, long k) {
  Series<R> r = g;
  for (auto& x : r.coeffs) x = ring_div_pi(x, k);
  return r;
}

template <typename R>
Series<R> series_mul_pi(const Series<R>& g) {
  Series<R> r = g;
  for (auto& x : r.coeffs) x = ring_mul_pi(x);
  return r;
}

// Series over OElement are themselves carriers (o_L[[T]] as an o_L-algebra).
template <typename R>
Series<R> ring_zero(const Series<R>& like) { return Series<R>::zeros(like.coeffs[0], like.deg(), like.var); }
template <typename R>
Series<R> ring_one(const Series<R>& like) { return Series<R>::constant(ring_one(like.coeffs[0]), like.deg(), like.var); }
template <typename R>
Series<R> ring_mul_pi(const Series<R>& a) { return series_mul_pi(a); }
template <typename R>
Series<R> ring_div_pi(const Series<R>& a, long k) { return series_div_pi(a, k); }
template <typename R>
u64 ring_q(const Series<R>& a) { return ring_q(a.coeffs[0]); }
template <typename R>
bool ring_is_zero(const Series<R>& a) { return a.is_zero(); }
template <typename R>
bool ring_eq(const Series<R>& a, const Series<R>& b) { return a.eq(b); }

/// Mod-pi reduction of a series over o_L: residue coefficients in k_L
/// plus the T-adic valuation of the input (deg+1 when indistinguishable
/// from 0, flagged).
struct ResidueSeries {
  std::vector<std::vector<u64>> coeffs;  // each an f-vector mod p
  int t_valuation = 0;                   // of the residue series
};

struct Reductions {
  ResidueSeries mod_pi;
  int t_valuation;        // of the input series, at precision
  bool precision_caveat;  // t_valuation ran off the end
};

inline Reductions reductions(const Series<OElement>& g) {
  Reductions r;
  r.mod_pi.coeffs.reserve(g.coeffs.size());
  int rv = g.deg() + 1;
  for (int i = 0; i <= g.deg(); ++i) {
    auto res = g.coeffs[i].residue();
    if (rv > g.deg() && !kl_is_zero(res)) rv = i;
    r.mod_pi.coeffs.push_back(std::move(res));
  }
  r.mod_pi.t_valuation = rv;
  r.t_valuation = g.t_valuation();
  r.precision_caveat = r.t_valuation > g.deg();
  return r;
}

/// Bivariate truncated series: triangular coefficients c[i][j], i+j <= D.
template <typename R>
class Bivariate {
 public:
  std::vector<std::vector<R>> c;  // row i has D-i+1 entries
  std::string varx = "X", vary = "Y";

  int deg() const { return (int)c.size() - 1; }

  static Bivariate zeros(const R& like, int D) {
    Bivariate b;
    b.c.resize((size_t)D + 1);
    for (int i = 0; i <= D; ++i) b.c[i].assign((size_t)(D - i) + 1, ring_zero(like));
    return b;
  }
  static Bivariate constant(const R& value, int D) {
    Bivariate b = zeros(value, D);
    b.c[0][0] = value;
    return b;
  }

  Bivariate truncated(int D2) const {
    if (D2 >= deg()) return *this;
    Bivariate b = zeros(c[0][0], D2);
    for (int i = 0; i <= D2; ++i)
      for (int j = 0; i + j <= D2; ++j) b.c[i][j] = c[i][j];
    return b;
  }

  Bivariate operator+(const Bivariate& b) const {
    int D = std::min(deg(), b.deg());
    Bivariate r = truncated(D);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) r.c[i][j] = r.c[i][j] + b.c[i][j];
    return r;
  }
  Bivariate operator-(const Bivariate& b) const {
    int D = std::min(deg(), b.deg());
    Bivariate r = truncated(D);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) r.c[i][j] = r.c[i][j] - b.c[i][j];
    return r;
  }
  Bivariate operator-() const {
    Bivariate r = *this;
    for (auto& row : r.c)
      for (auto& x : row) x = -x;
    return r;
  }
  Bivariate operator*(const Bivariate& b) const {
    int D = std::min(deg(), b.deg());
    Bivariate r = zeros(c[0][0], D);
    for (int i1 = 0; i1 <= D; ++i1)
      for (int j1 = 0; i1 + j1 <= D; ++j1) {
        if (ring_is_zero(c[i1][j1])) continue;
        for (int i2 = 0; i1 + j1 + i2 <= D && i2 <= b.deg(); ++i2)
          for (int j2 = 0; i1 + j1 + i2 + j2 <= D && i2 + j2 <= b.deg(); ++j2)
            r.c[i1 + i2][j1 + j2] = r.c[i1 + i2][j1 + j2] + c[i1][j1] * b.c[i2][j2];
      }
    return r;
  }

  Bivariate scale(const R& s) const {
    Bivariate r = *this;
    for (auto& row : r.c)
      for (auto& x : row) x = x * s;
    return r;
  }

  bool eq(const Bivariate& b) const {
    int D = std::min(deg(), b.deg());
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j)
        if (!ring_eq(c[i][j], b.c[i][j])) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i <= deg(); ++i)
      for (int j = i; i + j <= deg(); ++j)
        if (!ring_eq(c[i][j], c[j][i])) return false;
    return true;
  }

  Bivariate transposed() const {
    Bivariate r = zeros(c[0][0], deg());
    for (int i = 0; i <= deg(); ++i)
      for (int j = 0; i + j <= deg(); ++j) r.c[j][i] = c[i][j];
    return r;
  }

  /// Homogeneous part of total degree d, as a dense row c[i], i + j = d.
  std::vector<R> homogeneous(int d) const {
    std::vector<R> h;
    h.reserve((size_t)d + 1);
    for (int i = 0; i <= d; ++i) h.push_back(c[i][d - i]);
    return h;
  }

  /// F(x, y) in any commutative R-algebra T with ring ops, scale(R) and
  /// a zero prototype; x, y must be "topologically nilpotent" (zero
  /// constant term) for the truncation to be exact.
  template <typename T>
  T eval(const T& x, const T& y) const {
    T res = ring_zero(x);
    T xpow = ring_one(x);
    for (int i = 0; i <= deg(); ++i) {
      // Horner in y over row i
      int top = deg() - i;
      T inner = scale_alg(ring_one(x), c[i][top]);
      for (int j = top - 1; j >= 0; --j) {
        inner = inner * y;
        inner = inner + scale_alg(ring_one(x), c[i][j]);
      }
      res = res + xpow * inner;
      if (i < deg()) xpow = xpow * x;
    }
    return res;
  }

 private:
  template <typename T>
  static T scale_alg(const T& t, const R& s) {
    if constexpr (std::is_same_v<T, R>) return t * s;
    else return t.scale(s);
  }
};

/// Substitute univariate g into a bivariate argument S with S(0,0) = 0.
template <typename R>
Bivariate<R> compose_bivariate(const Series<R>& g, const Bivariate<R>& S) {
  if (!ring_is_zero(S.c[0][0]))
    throw Error(ErrorCode::NonzeroConstant, "bivariate argument has nonzero constant term");
  int D = std::min(g.deg(), S.deg());
  Bivariate<R> St = S.truncated(D);
  Bivariate<R> acc = Bivariate<R>::constant(g.coeffs[g.deg()], D);
  for (int i = g.deg() - 1; i >= 0; --i) {
    acc = acc * St;
    acc.c[0][0] = acc.c[0][0] + g.coeffs[i];
  }
  return acc;
}

/// Minimal dense trivariate truncated ring, for the associativity check.
template <typename R>
class Trivariate {
 public:
  int D = 0;
  std::vector<R> a;  // index of (i,j,k) with i+j+k <= D

  static size_t index(int D, int i, int j, int k) {
    // count monomials (i',j',k') lexicographically before (i,j,k)
    (void)k;
    size_t idx = 0;
    for (int x = 0; x < i; ++x) idx += (size_t)(D - x + 1) * (D - x + 2) / 2;
    for (int y = 0; y < j; ++y) idx += (size_t)(D - i - y + 1);
    return idx + (size_t)k;
  }

  static Trivariate zeros(const R& like, int D) {
    Trivariate t;
    t.D = D;
    size_t total = (size_t)(D + 1) * (D + 2) * (D + 3) / 6;
    t.a.assign(total, ring_zero(like));
    return t;
  }

  R& at(int i, int j, int k) { return a[index(D, i, j, k)]; }
  const R& at(int i, int j, int k) const { return a[index(D, i, j, k)]; }

  Trivariate operator+(const Trivariate& b) const {
    Trivariate r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + b.a[i];
    return r;
  }
  Trivariate operator*(const Trivariate& b) const {
    Trivariate r = zeros(a[0], D);
    for (int i1 = 0; i1 <= D; ++i1)
      for (int j1 = 0; i1 + j1 <= D; ++j1)
        for (int k1 = 0; i1 + j1 + k1 <= D; ++k1) {
          const R& x = at(i1, j1, k1);
          if (ring_is_zero(x)) continue;
          int rem = D - i1 - j1 - k1;
          for (int i2 = 0; i2 <= rem; ++i2)
            for (int j2 = 0; i2 + j2 <= rem; ++j2)
              for (int k2 = 0; i2 + j2 + k2 <= rem; ++k2) {
                const R& y = b.at(i2, j2, k2);
                if (ring_is_zero(y)) continue;
                R& tgt = r.a[index(D, i1 + i2, j1 + j2, k1 + k2)];
                tgt = tgt + x * y;
              }
        }
    return r;
  }

  Trivariate scale(const R& s) const {
    Trivariate r = *this;
    for (auto& x : r.a) x = x * s;
    return r;
  }

  bool eq(const Trivariate& b) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (!ring_eq(a[i], b.a[i])) return false;
    return true;
  }

  /// Cyclic variable permutation (i,j,k) -> value at (j,k,i).
  Trivariate cycled() const {
    Trivariate r = zeros(a[0], D);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j)
        for (int k = 0; i + j + k <= D; ++k) r.at(i, j, k) = at(j, k, i);
    return r;
  }
};

template <typename R>
Trivariate<R> ring_zero(const Trivariate<R>& like) { return Trivariate<R>::zeros(like.a[0], like.D); }
template <typename R>
Trivariate<R> ring_one(const Trivariate<R>& like) {
  auto t = Trivariate<R>::zeros(like.a[0], like.D);
  t.a[0] = ring_one(like.a[0]);
  return t;
}

template <typename R>
Bivariate<R> ring_zero(const Bivariate<R>& like) { return Bivariate<R>::zeros(like.c[0][0], like.deg()); }
template <typename R>
Bivariate<R> ring_one(const Bivariate<R>& like) { return Bivariate<R>::constant(ring_one(like.c[0][0]), like.deg()); }

}  // namespace pityp
