#include "pitypical/field.hpp"

#include <algorithm>
#include <cmath>

namespace pityp {

namespace {

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { u64 r = a + b; return r >= m ? r - m : r; }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 pow_u64_checked(u64 base, int exp, u64 limit) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return 0;  // overflow sentinel
    r *= base;
  }
  return r;
}

// v_p of a residue known mod p^prec; returns prec when indistinguishable
// from 0 (i.e. valuation >= prec).
int vp_residue(u64 c, u64 p, int prec) {
  int v = 0;
  while (v < prec && c % p == 0) {
    if (c == 0) return prec;
    c /= p;
    ++v;
  }
  return v;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- F_p[x] helpers for the residual irreducibility test ----

using FpPoly = std::vector<u64>;  // ascending, coefficients in [0, p)

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
  a = fp_trim(std::move(a));
  FpPoly mm = fp_trim(m);
  u64 lead_inv = 1;
  {  // inverse of leading coefficient of m mod p
    u64 lead = mm.back(), x = 1;
    for (u64 i = 0; i < p - 2; ++i) x = mulmod(x, lead, p);
    lead_inv = p == 2 ? lead : x;
  }
  while (a.size() >= mm.size() && !a.empty()) {
    u64 factor = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - mm.size();
    for (size_t i = 0; i < mm.size(); ++i)
      a[i + shift] = submod(a[i + shift], mulmod(factor, mm[i], p), p);
    a = fp_trim(std::move(a));
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  return fp_mod(std::move(r), m, p);
}

// x^(p^k) mod m, by k rounds of p-th powering.
FpPoly fp_frobenius_power(FpPoly base, int k, const FpPoly& m, u64 p) {
  for (int round = 0; round < k; ++round) {
    FpPoly acc{1};
    FpPoly sq = base;
    u64 exp = p;
    while (exp) {
      if (exp & 1) acc = fp_mulmod(acc, sq, m, p);
      sq = fp_mulmod(sq, sq, m, p);
      exp >>= 1;
    }
    base = std::move(acc);
  }
  return base;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility of g over F_p: x^(p^f) == x mod g, and for every proper
// divisor d of f, gcd(x^(p^d) - x, g) is trivial.
bool fp_irreducible(const FpPoly& g, u64 p) {
  int f = (int)g.size() - 1;
  if (f == 1) return true;
  FpPoly x{0, 1};
  FpPoly xf = fp_frobenius_power(x, f, g, p);
  FpPoly diff = xf;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = submod(diff[1], 1, p);
  if (!fp_trim(diff).empty()) return false;
  for (int d = 1; d < f; ++d) {
    if (f % d != 0) continue;
    FpPoly xd = fp_frobenius_power(x, d, g, p);
    FpPoly t = xd;
    t.resize(std::max<size_t>(t.size(), 2), 0);
    t[1] = submod(t[1], 1, p);
    FpPoly gg = fp_gcd(g, fp_trim(t), p);
    if (gg.size() > 1) return false;
  }
  return true;
}

}  // namespace

// ---- W(k_L) arithmetic (residues mod p^M, reduced mod g) ----

namespace {

Wk wk_zero(const LocalFieldSpec& s) { return Wk(s.f, 0); }

Wk wk_add(const LocalFieldSpec& s, const Wk& a, const Wk& b) {
  Wk r(s.f);
  for (int j = 0; j < s.f; ++j) r[j] = addmod(a[j], b[j], s.pM);
  return r;
}

Wk wk_sub(const LocalFieldSpec& s, const Wk& a, const Wk& b) {
  Wk r(s.f);
  for (int j = 0; j < s.f; ++j) r[j] = submod(a[j], b[j], s.pM);
  return r;
}

// Reduce an omega-polynomial of degree < 2f-1 mod g (monic).
void wk_reduce(const LocalFieldSpec& s, std::vector<u64>& t) {
  for (int d = (int)t.size() - 1; d >= s.f; --d) {
    u64 lead = t[d];
    if (lead == 0) continue;
    t[d] = 0;
    for (int j = 0; j < s.f; ++j)
      t[d - s.f + j] = submod(t[d - s.f + j], mulmod(lead, s.g[j], s.pM), s.pM);
  }
  t.resize(s.f);
}

Wk wk_mul(const LocalFieldSpec& s, const Wk& a, const Wk& b) {
  if (s.f == 1) return {mulmod(a[0], b[0], s.pM)};
  std::vector<u64> t(2 * s.f - 1, 0);
  for (int i = 0; i < s.f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s.f; ++j)
      t[i + j] = addmod(t[i + j], mulmod(a[i], b[j], s.pM), s.pM);
  }
  wk_reduce(s, t);
  return t;
}

bool wk_is_zero(const Wk& a) {
  for (u64 x : a)
    if (x) return false;
  return true;
}

}  // namespace

std::vector<u64> kl_mul(const LocalFieldSpec& s, const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      t[i + j] = addmod(t[i + j], mulmod(a[i] % s.p, b[j] % s.p, s.p), s.p);
  // reduce mod g mod p
  FpPoly gp(s.g.size());
  for (size_t i = 0; i < s.g.size(); ++i) gp[i] = s.g[i] % s.p;
  gp.back() = 1;
  t = fp_mod(std::move(t), gp, s.p);
  t.resize(s.f, 0);
  return t;
}

bool kl_is_zero(const std::vector<u64>& a) {
  for (u64 x : a)
    if (x) return false;
  return true;
}

// ---- LocalFieldSpec ----

int LocalFieldSpec::precision_cap(u64 p) {
  int m = 0;
  u64 v = 1;
  while (v <= (u64(1) << 62) / p) {
    v *= p;
    ++m;
  }
  return m;
}

bool LocalFieldSpec::same_field(const LocalFieldSpec& o) const {
  if (p != o.p || f != o.f || e != o.e) return false;
  // compare g and E at the coarser precision
  u64 m = std::min(pM, o.pM);
  for (int j = 0; j <= f; ++j)
    if (g[j] % m != o.g[j] % m) return false;
  for (int i = 0; i <= e; ++i)
    for (int j = 0; j < f; ++j)
      if (E[i][j] % m != o.E[i][j] % m) return false;
  return true;
}

bool LocalFieldSpec::operator==(const LocalFieldSpec& o) const {
  return M == o.M && same_field(o);
}

SpecPtr LocalFieldSpec::elevated(int extra) const {
  int M2 = std::min(precision_cap(p), M + extra);
  return make_field_spec(p, g_int, E_int, M2);
}

SpecPtr make_field_spec(u64 p, std::vector<i64> gin, std::vector<std::vector<i64>> Ein, int M) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::ParseError, "p is not prime");
  if (M < 2) throw Error(ErrorCode::BadPrecision, "M must be >= 2");
  int cap = LocalFieldSpec::precision_cap(p);
  if (M > cap)
    throw Error(ErrorCode::BadPrecision,
                "M exceeds the 64-bit residue cap for p (" + std::to_string(cap) + ")");
  if (gin.size() < 2) throw Error(ErrorCode::ParseError, "g must have degree >= 1");
  if (Ein.size() < 2) throw Error(ErrorCode::ParseError, "E must have degree >= 1");

  auto spec = SpecPtr(new LocalFieldSpec());
  auto* s = const_cast<LocalFieldSpec*>(spec.get());
  s->p = p;
  s->M = M;
  s->f = (int)gin.size() - 1;
  s->e = (int)Ein.size() - 1;
  s->n = s->e * s->f;
  s->pM = pow_u64_checked(p, M, u64(1) << 62);
  if (s->pM == 0) throw Error(ErrorCode::BadPrecision, "p^M overflows");
  s->q = pow_u64_checked(p, s->f, u64(1) << 62);
  if (s->q == 0) throw Error(ErrorCode::BadPrecision, "q = p^f overflows");

  auto to_res = [&](i64 v) -> u64 {
    i64 m = (i64)s->pM;
    i64 r = v % m;
    if (r < 0) r += m;
    return (u64)r;
  };

  if (gin.back() != 1) throw Error(ErrorCode::ParseError, "g must be monic");
  s->g_int = gin;
  s->E_int = Ein;
  s->g.resize(s->f + 1);
  for (int j = 0; j <= s->f; ++j) s->g[j] = to_res(gin[j]);

  FpPoly gp(s->f + 1);
  for (int j = 0; j <= s->f; ++j) gp[j] = s->g[j] % p;
  if (!fp_irreducible(gp, p))
    throw Error(ErrorCode::ReducibleResidual, "g factors mod p");

  s->E.resize(s->e + 1);
  for (int i = 0; i <= s->e; ++i) {
    if (Ein[i].size() != (size_t)s->f)
      throw Error(ErrorCode::ParseError, "E coefficient has wrong W(k_L) dimension");
    s->E[i].resize(s->f);
    for (int j = 0; j < s->f; ++j) s->E[i][j] = to_res(Ein[i][j]);
  }
  if (!(s->E[s->e][0] == 1 && [&] {
        for (int j = 1; j < s->f; ++j)
          if (s->E[s->e][j]) return false;
        return true;
      }()))
    throw Error(ErrorCode::ParseError, "E must be monic");

  // Eisenstein: interior coefficients in (p), constant term p-valuation
  // exactly 1.
  for (int i = 1; i < s->e; ++i)
    for (int j = 0; j < s->f; ++j)
      if (s->E[i][j] % p != 0)
        throw Error(ErrorCode::NotEisenstein, "interior coefficient of E not in (p)");
  int v0 = M;
  for (int j = 0; j < s->f; ++j)
    v0 = std::min(v0, vp_residue(s->E[0][j], p, M));
  if (v0 != 1)
    throw Error(ErrorCode::NotEisenstein,
                "constant term of E has p-valuation " + std::to_string(v0) + ", expected 1");
  return spec;
}

SpecPtr make_field_spec_int(u64 p, std::vector<i64> g, std::vector<i64> E, int M) {
  std::vector<std::vector<i64>> Ew(E.size());
  size_t f = g.size() - 1;
  for (size_t i = 0; i < E.size(); ++i) {
    Ew[i].assign(f, 0);
    Ew[i][0] = E[i];
  }
  return make_field_spec(p, std::move(g), std::move(Ew), M);
}

// ---- OElement ----

OElement::OElement(SpecPtr s, std::vector<u64> coeffs, int valid_prec) {
  spec = std::move(s);
  if (coeffs.size() != (size_t)(spec->e * spec->f))
    throw Error(ErrorCode::ParseError, "coefficient array has wrong shape");
  for (u64& x : coeffs) x %= spec->pM;
  c = std::move(coeffs);
  vp = std::min(valid_prec, spec->M);
  if (vp < 1) throw Error(ErrorCode::BadPrecision, "element has no valid precision left");
}

OElement OElement::zero(const SpecPtr& s) {
  return OElement(s, std::vector<u64>(s->e * s->f, 0), s->M);
}

OElement OElement::one(const SpecPtr& s) {
  std::vector<u64> c(s->e * s->f, 0);
  c[0] = 1;
  return OElement(s, std::move(c), s->M);
}

OElement OElement::pi(const SpecPtr& s) {
  std::vector<u64> c(s->e * s->f, 0);
  if (s->e == 1) {
    // pi = -E_0
    for (int j = 0; j < s->f; ++j) c[j] = (s->pM - s->E[0][j]) % s->pM;
  } else {
    c[s->f] = 1;  // the basis element pi^1
  }
  return OElement(s, std::move(c), s->M);
}

OElement OElement::from_int(const SpecPtr& s, i64 v) {
  std::vector<u64> c(s->e * s->f, 0);
  i64 m = (i64)s->pM;
  i64 r = v % m;
  if (r < 0) r += m;
  c[0] = (u64)r;
  return OElement(s, std::move(c), s->M);
}

OElement OElement::random(const SpecPtr& s, std::mt19937_64& rng) {
  std::vector<u64> c(s->e * s->f);
  for (u64& x : c) x = rng() % s->pM;
  return OElement(s, std::move(c), s->M);
}

OElement OElement::random_digits(const SpecPtr& s, std::mt19937_64& rng, int digits) {
  if (digits < 1 || digits > s->M) throw Error(ErrorCode::OutOfRange, "digit count out of range");
  u64 bound = 1;
  for (int i = 0; i < digits; ++i) bound *= s->p;
  std::vector<u64> c(s->e * s->f);
  for (u64& x : c) x = rng() % bound;
  return OElement(s, std::move(c), s->M);
}

void OElement::check_same_spec(const OElement& b) const {
  if (!spec || !b.spec || !(*spec == *b.spec))
    throw Error(ErrorCode::SpecMismatch, "operands belong to different field specs");
}

OElement OElement::operator+(const OElement& b) const {
  check_same_spec(b);
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = addmod(c[i], b.c[i], spec->pM);
  return OElement(spec, std::move(r), std::min(vp, b.vp));
}

OElement OElement::operator-(const OElement& b) const {
  check_same_spec(b);
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = submod(c[i], b.c[i], spec->pM);
  return OElement(spec, std::move(r), std::min(vp, b.vp));
}

OElement OElement::operator-() const {
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] ? spec->pM - c[i] : 0;
  return OElement(spec, std::move(r), vp);
}

OElement OElement::operator*(const OElement& b) const {
  check_same_spec(b);
  const auto& s = *spec;
  const int e = s.e, f = s.f;

  std::vector<u64> r;
  if (e == 1 && f == 1) {
    r = {mulmod(c[0], b.c[0], s.pM)};
  } else {
    // polynomial in pi of degree <= 2e-2 with Wk coefficients
    std::vector<Wk> t(2 * e - 1, wk_zero(s));
    for (int i1 = 0; i1 < e; ++i1) {
      Wk a1(c.begin() + i1 * f, c.begin() + (i1 + 1) * f);
      if (wk_is_zero(a1)) continue;
      for (int i2 = 0; i2 < e; ++i2) {
        Wk b2(b.c.begin() + i2 * f, b.c.begin() + (i2 + 1) * f);
        if (wk_is_zero(b2)) continue;
        t[i1 + i2] = wk_add(s, t[i1 + i2], wk_mul(s, a1, b2));
      }
    }
    // reduce pi-degree by pi^e = -sum E_i pi^i
    for (int d = 2 * e - 2; d >= e; --d) {
      Wk lead = t[d];
      if (wk_is_zero(lead)) continue;
      t[d] = wk_zero(s);
      for (int i = 0; i < e; ++i)
        t[d - e + i] = wk_sub(s, t[d - e + i], wk_mul(s, lead, s.E[i]));
    }
    r.resize(e * f);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < f; ++j) r[i * f + j] = t[i][j];
  }

  // Valuation-aware absolute precision of the product.  At full precision
  // the rule collapses to M, so skip the valuation scans.
  if (vp == s.M && b.vp == s.M) return OElement(spec, std::move(r), s.M);
  auto va = val_pi(), vb = b.val_pi();
  long fa = va ? *va / s.e : vp;       // floor(v_pi/e) in p-units
  long fb = vb ? *vb / s.e : b.vp;
  int prec = (int)std::min<long>({(long)s.M, vp + fb, b.vp + fa});
  return OElement(spec, std::move(r), prec);
}

OElement OElement::pow(u64 n) const {
  OElement acc = one(spec);
  OElement sq = *this;
  while (n) {
    if (n & 1) acc = acc * sq;
    if (n >>= 1) sq = sq * sq;
  }
  return acc;
}

std::optional<long> OElement::val_pi() const {
  const auto& s = *spec;
  long best = -1;
  for (int i = 0; i < s.e; ++i) {
    int v = vp;
    for (int j = 0; j < s.f; ++j)
      v = std::min(v, vp_residue(c[i * s.f + j], s.p, vp));
    if (v >= vp) continue;  // row indistinguishable from 0
    long cand = (long)s.e * v + i;
    if (best < 0 || cand < best) best = cand;
  }
  if (best < 0) return std::nullopt;
  return best;
}

OElement OElement::div_pi_exact(long k) const {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "negative pi power");
  if (k == 0) return *this;
  const auto& s = *spec;
  auto v = val_pi();
  if (v && *v < k)
    throw Error(ErrorCode::NotDivisible,
                "val_pi = " + std::to_string(*v) + " < " + std::to_string(k));
  if (!v && (long)s.e * vp < k)
    throw Error(ErrorCode::NotDivisible,
                "divisibility by pi^" + std::to_string(k) + " undecidable at precision");

  long sdiv = (k + s.e - 1) / s.e;  // ceil(k/e)
  if (sdiv >= vp)
    throw Error(ErrorCode::NotDivisible, "pi-division would exhaust precision");

  // a / pi^k = a * pi^(s*e-k) * Y^{-s} / p^s, with pi^e = p * Y.
  OElement t = *this;
  long extra = sdiv * s.e - k;
  if (extra > 0) t = t * pi(spec).pow((u64)extra);
  // Y = pi^e / p = (-E_0 - E_1 pi - ...) / p, exact from the integer data.
  std::vector<u64> yc(s.e * s.f, 0);
  i64 m = (i64)s.pM;
  for (int i = 0; i < s.e; ++i)
    for (int j = 0; j < s.f; ++j) {
      i64 v2 = (-s.E_int[i][j] / (i64)s.p) % m;
      if (v2 < 0) v2 += m;
      yc[i * s.f + j] = (u64)v2;
    }
  OElement Y(spec, std::move(yc), s.M);
  OElement t2 = t * Y.inverse().pow((u64)sdiv);

  u64 ps = 1;
  for (long i = 0; i < sdiv; ++i) ps *= s.p;
  std::vector<u64> r(t2.c.size());
  for (size_t i = 0; i < r.size(); ++i) {
    if (t2.c[i] % ps != 0)
      throw Error(ErrorCode::NotDivisible, "residue not divisible by p^s after unit factor");
    r[i] = t2.c[i] / ps;
  }
  return OElement(spec, std::move(r), (int)(t2.vp - sdiv));
}

OElement OElement::inverse() const {
  const auto& s = *spec;
  auto v = val_pi();
  if (!v || *v != 0) throw Error(ErrorCode::NotUnit, "inverse of a non-unit");

  // residue-field inverse of row 0
  std::vector<u64> r0 = residue();
  // invert in F_p[omega]/g via Fermat on the multiplicative group: the unit
  // group has order q-1, so r0^(q-2) works; do it by square-and-multiply.
  std::vector<u64> acc(s.f, 0);
  acc[0] = 1;
  std::vector<u64> sq = r0;
  u64 exp = s.q - 2;
  while (exp) {
    if (exp & 1) acc = kl_mul(s, acc, sq);
    sq = kl_mul(s, sq, sq);
    exp >>= 1;
  }
  std::vector<u64> xc(s.e * s.f, 0);
  for (int j = 0; j < s.f; ++j) xc[j] = acc[j];
  OElement x(spec, std::move(xc), s.M);

  OElement two = from_int(spec, 2);
  int needed = s.e * s.M;
  int have = 1;
  while (have < needed) {
    x = x * (two - *this * x);
    have *= 2;
  }
  if (!(*this * x).eq(one(spec)))
    throw Error(ErrorCode::NotUnit, "Newton inversion failed to converge");
  return x;
}

bool OElement::is_zero() const {
  if (vp == spec->M) {
    for (u64 x : c)
      if (x) return false;
    return true;
  }
  u64 pm = pow_u64_checked(spec->p, vp, u64(1) << 62);
  for (u64 x : c)
    if (x % pm) return false;
  return true;
}

bool OElement::eq(const OElement& b) const { return eq_at(b, std::min(vp, b.vp)); }

bool OElement::eq_at(const OElement& b, int prec) const {
  check_same_spec(b);
  if (prec > std::min(vp, b.vp))
    throw Error(ErrorCode::BadPrecision, "comparison beyond valid precision");
  if (prec == spec->M) return c == b.c;
  u64 pm = pow_u64_checked(spec->p, prec, u64(1) << 62);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] % pm != b.c[i] % pm) return false;
  return true;
}

std::vector<u64> OElement::residue() const {
  std::vector<u64> r(spec->f);
  for (int j = 0; j < spec->f; ++j) r[j] = c[j] % spec->p;
  return r;
}

OElement OElement::reduced_to(const SpecPtr& spec2) const {
  if (!spec->same_field(*spec2))
    throw Error(ErrorCode::SpecMismatch, "reduced_to across different fields");
  if (spec2->M > spec->M)
    throw Error(ErrorCode::BadPrecision, "cannot lift to higher precision");
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] % spec2->pM;
  return OElement(spec2, std::move(r), std::min(vp, spec2->M));
}

// ---- LaurentScalar ----

LaurentScalar::LaurentScalar(OElement n, long m) : num(std::move(n)), denom_exp(m) {
  if (m < 0) throw Error(ErrorCode::OutOfRange, "negative denominator exponent");
  reduce();
}

LaurentScalar& LaurentScalar::reduce() {
  if (denom_exp == 0) return *this;
  auto v = num.val_pi();
  if (!v) {
    // indistinguishable from 0: strip what precision supports
    long strip = std::min<long>(denom_exp, (long)num.spec->e * (num.vp - 1));
    if (strip > 0) {
      num = num.div_pi_exact(strip);
      denom_exp -= strip;
    }
    return *this;
  }
  long strip = std::min(*v, denom_exp);
  if (strip > 0) {
    num = num.div_pi_exact(strip);
    denom_exp -= strip;
  }
  return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& b) const {
  long m = std::max(denom_exp, b.denom_exp);
  OElement pi = OElement::pi(num.spec);
  OElement an = denom_exp == m ? num : num * pi.pow((u64)(m - denom_exp));
  OElement bn = b.denom_exp == m ? b.num : b.num * pi.pow((u64)(m - b.denom_exp));
  return LaurentScalar(an + bn, m);
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& b) const { return *this + (-b); }

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  r.num = -r.num;
  return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& b) const {
  return LaurentScalar(num * b.num, denom_exp + b.denom_exp);
}

bool LaurentScalar::is_zero() const { return num.is_zero(); }

bool LaurentScalar::eq(const LaurentScalar& b) const {
  OElement pi = OElement::pi(num.spec);
  OElement lhs = num * pi.pow((u64)b.denom_exp);
  OElement rhs = b.num * pi.pow((u64)denom_exp);
  return lhs.eq(rhs);
}

LaurentScalar::Tri LaurentScalar::integral() const {
  LaurentScalar r = *this;
  r.reduce();
  if (r.denom_exp == 0) return Tri::yes;
  auto v = r.num.val_pi();
  if (v) return *v >= r.denom_exp ? Tri::yes : Tri::no;  // strip left it < denom
  return (long)r.num.spec->e * r.num.vp >= r.denom_exp ? Tri::yes : Tri::unknown;
}

OElement LaurentScalar::to_integral() const {
  LaurentScalar r = *this;
  r.reduce();
  if (r.denom_exp == 0) return r.num;
  Tri t = integral();
  if (t == Tri::no)
    throw Error(ErrorCode::IntegralityFailure, "value has a genuine pi denominator");
  if (t == Tri::unknown)
    throw Error(ErrorCode::IntegralityFailure, "integrality undecidable at current precision");
  return r.num.div_pi_exact(r.denom_exp);
}

}  // namespace pityp
