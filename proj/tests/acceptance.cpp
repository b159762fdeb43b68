// Acceptance gate: one line per criterion, exact arithmetic throughout,
// D = 64, M = 12.  Exit status 0 iff every line is PASS.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pitypical/presets.hpp"
#include "pitypical/selftest.hpp"

using namespace pityp;

namespace {

constexpr int kD = 64;

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail) {
  if (ok)
    std::printf("PASS %d: %s\n", idx, what.c_str());
  else
    std::printf("FAIL %d: %s — %s\n", idx, what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

u64 ipow(u64 b, int k) {
  u64 r = 1;
  while (k-- > 0) r *= b;
  return r;
}

// ---- 1. genus values on the Honda model -------------------------------

bool genus_values(std::string& detail) {
  for (const auto& name : {std::string("q2"), std::string("q3"), std::string("q2-ramified")}) {
    auto s = preset_spec(name);
    auto model = honda_model(s, 41);
    for (int m = 0; m <= 40; ++m) {
      auto g = genus_cp(model, m);
      // expected: q^k / pi^k when m + 1 = q^k, zero otherwise
      u64 mp1 = (u64)m + 1;
      int k = 0;
      u64 pw = 1;
      while (pw < mp1) pw *= s->q, ++k;
      bool spiky = (pw == mp1);
      auto expect = spiky ? LaurentScalar(OElement::from_int(s, (i64)ipow(s->q, k)), k)
                          : LaurentScalar::zero(s);
      if (!g.eq(expect)) {
        detail = name + ": CP^" + std::to_string(m) + " off";
        return false;
      }
    }
  }
  return true;
}

// ---- 2. T^q + pi theta_1(T) = T ---------------------------------------

bool theta_identity(std::string& detail) {
  std::mt19937_64 rng(201);
  for (const auto& name : preset_names()) {
    auto s = preset_spec(name);
    std::vector<OElement> samples;
    for (int t = 0; t < 10; ++t) samples.push_back(OElement::random(s, rng));
    auto rep = frobenius_identity_check(s, samples);
    if (!rep.poly_identity || !rep.value_identity || !rep.residue_identity) {
      detail = name + ": lift identity fails";
      return false;
    }
    // theta_1 = pi^{-1}(T - T^q) coefficientwise
    auto t1 = theta_poly(s, 1).poly;
    bool ok = t1.deg() == (int)s->q && t1.coeffs[0].is_zero() &&
              t1.coeffs[1].eq(LaurentScalar(OElement::one(s), 1)) &&
              t1.coeffs[s->q].eq(LaurentScalar(-OElement::one(s), 1));
    for (u64 i = 2; ok && i < s->q; ++i) ok = t1.coeffs[i].is_zero();
    if (!ok) {
      detail = name + ": theta_1 coefficients off";
      return false;
    }
  }
  return true;
}

// ---- 3. theta_k lands in o_L ------------------------------------------

bool theta_integrality(std::string& detail) {
  std::mt19937_64 rng(301);
  for (const auto& name : preset_names()) {
    auto s = preset_spec(name);
    std::vector<OElement> samples;
    for (int t = 0; t < 100; ++t) samples.push_back(OElement::random(s, rng));
    for (int k = 1; k <= 4; ++k) {
      auto rep = theta_eval_check(s, k, samples);
      if (!rep.all_integral || rep.checked != 100) {
        detail = name + " k=" + std::to_string(k) + ": sample " +
                 std::to_string(rep.first_failure) + " not integral";
        return false;
      }
    }
  }
  auto s = preset_spec("q2");
  if (!theta_value(s, 2, OElement::from_int(s, 3)).eq(OElement::from_int(s, -24))) {
    detail = "theta_2(3) != -24 over Q_2";
    return false;
  }
  return true;
}

// ---- 4. Witt ring axioms + literal-reading regression ------------------

bool witt_axioms(std::string& detail) {
  std::mt19937_64 rng(401);
  for (const auto& name : {std::string("q2"), std::string("q3"), std::string("q2-ramified")}) {
    auto s = preset_spec(name);
    std::vector<std::array<WittPair<OElement>, 3>> triples;
    for (int t = 0; t < 200; ++t)
      triples.push_back({WittPair<OElement>{OElement::random(s, rng), OElement::random(s, rng)},
                         WittPair<OElement>{OElement::random(s, rng), OElement::random(s, rng)},
                         WittPair<OElement>{OElement::random(s, rng), OElement::random(s, rng)}});
    auto rep = witt_ring_check<OElement>(triples);
    if (!rep.pass()) {
      for (const auto& [ax, ok] : rep.axioms)
        if (!ok) detail = name + ": axiom " + ax + " at triple " + std::to_string(rep.first_failure);
      return false;
    }
    auto lit = witt_ring_check<OElement>(triples, &witt_mul_literal<OElement>);
    bool ghost_mul_failed = false;
    for (const auto& [ax, ok] : lit.axioms)
      if (ax == "ghost_mul") ghost_mul_failed = !ok;
    if (!ghost_mul_failed) {
      detail = name + ": literal-reading multiplication unexpectedly ghost-compatible";
      return false;
    }
  }
  return true;
}

// ---- 5. Lubin-Tate solver ---------------------------------------------

bool group_law_associative(const Bivariate<OElement>& F, int Dh) {
  auto Ft = F.truncated(Dh);
  auto zero = ring_zero(Ft.c[0][0]);
  // H = F(Y, Z) as a trivariate; powers of H give F(X, F(Y, Z)) directly
  auto H = Trivariate<OElement>::zeros(zero, Dh);
  for (int j = 0; j <= Dh; ++j)
    for (int k = 0; j + k <= Dh; ++k) H.at(0, j, k) = Ft.c[j][k];
  std::vector<Trivariate<OElement>> Hp;
  Hp.reserve((size_t)Dh + 1);
  Hp.push_back(ring_one(H));
  for (int j = 1; j <= Dh; ++j) Hp.push_back(Hp.back() * H);
  auto G = Trivariate<OElement>::zeros(zero, Dh);
  for (int i = 0; i <= Dh; ++i)
    for (int j = 0; i + j <= Dh; ++j) {
      const OElement& cij = Ft.c[i][j];
      if (cij.is_zero()) continue;
      const auto& P = Hp[j];
      for (int a = 0; a + i <= Dh; ++a)
        for (int b = 0; a + b + i <= Dh; ++b)
          for (int c = 0; a + b + c + i <= Dh; ++c) {
            const OElement& x = P.at(a, b, c);
            if (x.is_zero()) continue;
            G.at(a + i, b, c) = G.at(a + i, b, c) + cij * x;
          }
    }
  // symmetry + invariance under cyclic permutation == associativity
  return G.eq(G.cycled());
}

bool lubin_tate_solver(std::string& detail) {
  std::mt19937_64 rng(501);
  for (const auto& name : preset_names()) {
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, kD);
    auto F = build_group_law(fs, kD);
    if (!F.is_symmetric()) {
      detail = name + ": F not commutative";
      return false;
    }
    if (!group_law_associative(F, kD / 2)) {
      detail = name + ": F not associative at degree " + std::to_string(kD / 2);
      return false;
    }
    if (!build_endomorphism(fs, OElement::pi(s), kD).eq(fs.poly(kD))) {
      detail = name + ": [pi] != f";
      return false;
    }
    // a -> [a] does not factor through o_L/p^M, so sample scalars whose
    // product is still exactly representable: half the digit budget each,
    // with an integer second factor (basis reductions stay sign-free)
    int half = (s->M - 2) / 2;
    u64 bound = 1;
    for (int i = 0; i < half; ++i) bound *= s->p;
    for (int t = 0; t < 20; ++t) {
      auto a = OElement::random_digits(s, rng, half);
      auto b = OElement::from_int(s, (i64)(rng() % bound));
      auto ea = build_endomorphism(fs, a, kD);
      auto eb = build_endomorphism(fs, b, kD);
      auto eab = build_endomorphism(fs, a * b, kD);
      if (!compose(ea, eb).eq(eab)) {
        detail = name + ": [a]o[b] != [ab] at pair " + std::to_string(t);
        return false;
      }
    }
    auto ep = build_endomorphism(fs, (i64)s->p, kD);
    u64 height = ipow(s->p, s->n);
    if ((u64)reductions(ep).mod_pi.t_valuation != height) {
      detail = name + ": [p] mod pi has T-valuation " +
               std::to_string(reductions(ep).mod_pi.t_valuation) + ", want " +
               std::to_string(height);
      return false;
    }
  }
  return true;
}

// ---- 6. multiplicative oracle over Q_2 --------------------------------

bool multiplicative_oracle(std::string& detail) {
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, kD);  // f = 2T + T^2
  auto F = build_group_law(fs, kD);
  for (int i = 0; i <= kD; ++i)
    for (int j = 0; i + j <= kD; ++j) {
      bool unit = (i == 1 && j == 0) || (i == 0 && j == 1) || (i == 1 && j == 1);
      if (!F.c[i][j].eq(OElement::from_int(s, unit ? 1 : 0))) {
        detail = "F coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                 ") off for X + Y + XY";
        return false;
      }
    }
  for (i64 a : {3, 5, 7}) {
    auto e = build_endomorphism(fs, a, kD);
    auto expect = Series<OElement>::zeros(OElement::zero(s), kD);
    u64 binom = 1;  // C(a, i)
    for (i64 i = 1; i <= a; ++i) {
      binom = binom * (u64)(a - i + 1) / (u64)i;
      expect.coeffs[i] = OElement::from_int(s, (i64)binom);
    }
    if (!e.eq(expect)) {
      detail = "[" + std::to_string(a) + "] != (1+T)^" + std::to_string(a) + " - 1";
      return false;
    }
  }
  for (int n = 1; n <= 4; ++n) {
    // Phi_{2^n}(1+T) = (1+T)^{2^{n-1}} + 1
    int half = 1 << (n - 1);
    auto expect = Series<OElement>::zeros(OElement::zero(s), kD);
    u64 binom = 1;
    for (int i = 0; i <= half; ++i) {
      expect.coeffs[i] = OElement::from_int(s, (i64)binom);
      binom = binom * (u64)(half - i) / (u64)(i + 1);
    }
    expect.coeffs[0] = OElement::from_int(s, 2);
    if (!compute_qn(fs, n, kD).eq(expect)) {
      detail = "q_" + std::to_string(n) + " != Phi_{2^" + std::to_string(n) + "}(1+T)";
      return false;
    }
  }
  return true;
}

// ---- 7. prism certificates --------------------------------------------

bool prism_certificates(std::string& detail) {
  for (const auto& name : preset_names()) {
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, kD);
    for (int n = 1; n <= 4; ++n) {
      auto rep = verify_prism_condition(fs, n, kD);
      if (!rep.pass()) {
        detail = name + " n=" + std::to_string(n) + ": condition fails";
        return false;
      }
      u64 lead = (s->q - 1) * ipow(s->q, n - 1);
      u64 want = lead > (u64)kD ? (u64)kD + 1 : lead;  // residue vanishes through T^D
      u64 got = (u64)reductions(compute_qn(fs, n, kD)).mod_pi.t_valuation;
      if (got != want) {
        detail = name + " n=" + std::to_string(n) + ": q_n mod pi T-valuation " +
                 std::to_string(got) + ", want " + std::to_string(want);
        return false;
      }
    }
  }
  // closed form over Q_2: q_2 - T q_1 = 2
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, kD);
  auto q1 = compute_qn(fs, 1, kD), q2 = compute_qn(fs, 2, kD);
  auto tq1 = Series<OElement>::identity(OElement::zero(s), kD) * q1;
  if (!(q2 - tq1).eq(Series<OElement>::constant(OElement::from_int(s, 2), kD - 1))) {
    detail = "q_2 - T q_1 != 2 over Q_2";
    return false;
  }
  return true;
}

// ---- 8. delta-structure section ---------------------------------------

bool delta_section(std::string& detail) {
  std::mt19937_64 rng(801);
  const int Ds = 16;
  for (const auto& name : preset_names()) {
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, Ds);
    auto d = canonical_delta(fs.poly(Ds));
    std::vector<std::pair<Series<OElement>, Series<OElement>>> samples;
    for (int t = 0; t < 100; ++t) {
      auto a = Series<OElement>::zeros(OElement::zero(s), Ds);
      auto b = a;
      for (int i = 0; i <= Ds; ++i) {
        a.coeffs[i] = OElement::random(s, rng);
        b.coeffs[i] = OElement::random(s, rng);
      }
      samples.emplace_back(std::move(a), std::move(b));
    }
    auto res = section_check(d, samples);
    if (!res.pass) {
      detail = name + ": section breaks " + res.failed_law + " at pair " +
               std::to_string(res.counterexample_index);
      return false;
    }
    // closed forms for f = pi T + T^q
    int Dc = 2 * (int)s->q + 2;
    auto dc = canonical_delta(default_frobenius(s, Dc).poly(Dc));
    auto T = Series<OElement>::identity(OElement::zero(s), Dc);
    if (!dc.apply(T).eq(T)) {
      detail = name + ": delta(T) != T";
      return false;
    }
    auto expect = Series<OElement>::zeros(OElement::zero(s), Dc);
    expect.coeffs[2] = OElement::pi(s);
    expect.coeffs[s->q + 1] = OElement::from_int(s, 2);
    if (!dc.apply(T * T).eq(expect)) {
      detail = name + ": delta(T^2) != pi T^2 + 2 T^{q+1}";
      return false;
    }
  }
  return true;
}

// ---- 9. determinism and JSON round-trips ------------------------------

bool determinism_roundtrip(std::string& detail) {
  auto r1 = run_selftest(2026);
  auto r2 = run_selftest(2026);
  if (r1.dump() != r2.dump()) {
    detail = "selftest bytes differ between runs at the same seed";
    return false;
  }
  if (!(r1["pass"] == true)) {
    detail = "selftest reports failure";
    return false;
  }
  std::mt19937_64 rng(901);
  auto names = preset_names();
  for (int t = 0; t < 100; ++t) {
    auto s = preset_spec(names[t % names.size()]);
    if (spec_from_json(to_json(*s)) == nullptr || !(*spec_from_json(to_json(*s)) == *s)) {
      detail = "spec round-trip";
      return false;
    }
    auto a = OElement::random(s, rng);
    if (!oelement_from_json(s, to_json(a)).eq(a)) {
      detail = "element round-trip";
      return false;
    }
    LaurentScalar l(OElement::random(s, rng), (long)(rng() % 4));
    if (!laurent_from_json(s, to_json(l)).eq(l)) {
      detail = "scalar round-trip";
      return false;
    }
    auto g = Series<OElement>::zeros(OElement::zero(s), 8);
    for (int i = 0; i <= 8; ++i) g.coeffs[i] = OElement::random(s, rng);
    if (to_json(series_from_json(s, to_json(g))).dump() != to_json(g).dump()) {
      detail = "series round-trip";
      return false;
    }
    auto lg = Series<LaurentScalar>::zeros(LaurentScalar::zero(s), 6);
    for (int i = 0; i <= 6; ++i) lg.coeffs[i] = LaurentScalar(OElement::random(s, rng), (long)(rng() % 3));
    if (to_json(laurent_series_from_json(s, to_json(lg))).dump() != to_json(lg).dump()) {
      detail = "scalar-series round-trip";
      return false;
    }
    auto F = Bivariate<OElement>::zeros(OElement::zero(s), 6);
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j) F.c[i][j] = OElement::random(s, rng);
    if (to_json(bivariate_from_json(s, to_json(F))).dump() != to_json(F).dump()) {
      detail = "bivariate round-trip";
      return false;
    }
    WittPair<OElement> w{OElement::random(s, rng), OElement::random(s, rng)};
    if (!witt_eq(witt_from_json(s, to_json(w)), w)) {
      detail = "Witt pair round-trip";
      return false;
    }
  }
  return true;
}

void run(int idx, const std::string& what, bool (*fn)(std::string&)) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const Error& e) {
    detail = e.what();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(idx, what, ok, detail);
}

}  // namespace

int main() {
  run(1, "genus of CP^m on the Honda model (q^k/pi^k at m = q^k - 1, else 0)", &genus_values);
  run(2, "T^q + pi theta_1(T) = T and theta_1 = (T - T^q)/pi", &theta_identity);
  run(3, "theta_k maps o_L into o_L for k <= 4 (100 samples/preset)", &theta_integrality);
  run(4, "Witt ring axioms + ghost homomorphy (200 triples/carrier); literal mul fails ghost",
      &witt_axioms);
  run(5, "group law comm/assoc, [a]o[b]=[ab], [pi]=f, height of [p]", &lubin_tate_solver);
  run(6, "multiplicative oracle: F = X+Y+XY, [a] = (1+T)^a - 1, q_n cyclotomic", &multiplicative_oracle);
  run(7, "prism: phi(q_n) = q_{n+1}, pi = q_{n+1} + c q_n, q_n mod pi valuation", &prism_certificates);
  run(8, "delta section preserves Witt ops; delta(T), delta(T^2) closed forms", &delta_section);
  run(9, "selftest determinism and JSON round-trips", &determinism_roundtrip);
  return g_failures == 0 ? 0 : 1;
}
