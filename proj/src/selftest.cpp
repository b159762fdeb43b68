#include "pitypical/selftest.hpp"

#include <random>

#include "pitypical/presets.hpp"

namespace pityp {

namespace {

struct SuiteBuilder {
  ojson checks = ojson::array();
  bool pass = true;

  void add(const std::string& name, bool ok, long count = -1, const std::string& detail = "") {
    ojson c;
    c["name"] = name;
    c["pass"] = ok;
    if (count >= 0) c["count"] = count;
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    pass = pass && ok;
  }

  ojson finish(const std::string& suite) {
    ojson j;
    j["suite"] = suite;
    j["checks"] = std::move(checks);
    j["pass"] = pass;
    return j;
  }
};

OElement random_nonzero(const SpecPtr& s, std::mt19937_64& rng) {
  for (;;) {
    OElement a = OElement::random(s, rng);
    if (a.val_pi()) return a;
  }
}

Series<OElement> random_nilpotent_series(const SpecPtr& s, int D, std::mt19937_64& rng) {
  auto g = Series<OElement>::zeros(OElement::zero(s), D);
  for (int i = 1; i <= D; ++i) g.coeffs[i] = OElement::random(s, rng);
  return g;
}

// ---- field suite ----

ojson field_suite(u64 seed) {
  SuiteBuilder b;
  for (const auto& name : preset_names()) {
    std::mt19937_64 rng(seed);
    SpecPtr s = preset_spec(name);
    OElement pi = OElement::pi(s);

    bool frob = true;
    for (int t = 0; t < 50; ++t) {
      OElement a = OElement::random(s, rng);
      auto diff = a.pow_q() - a;
      auto r = diff.residue();
      if (!kl_is_zero(r)) frob = false;
    }
    b.add(name + "/qth-power-congruence", frob, 50);

    bool divpi = true;
    for (int t = 0; t < 50; ++t) {
      OElement a = OElement::random(s, rng);
      long k = 1 + (long)(rng() % (u64)(2 * s->e));
      if (!(a * pi.pow((u64)k)).div_pi_exact(k).eq(a)) divpi = false;
    }
    b.add(name + "/pi-division-roundtrip", divpi, 50);

    bool axioms = true;
    for (int t = 0; t < 50; ++t) {
      OElement x = OElement::random(s, rng), y = OElement::random(s, rng),
               z = OElement::random(s, rng);
      if (!((x * y) * z).eq(x * (y * z))) axioms = false;
      if (!(x * y).eq(y * x)) axioms = false;
      if (!(x * (y + z)).eq(x * y + x * z)) axioms = false;
    }
    b.add(name + "/ring-axioms", axioms, 50);

    bool valadd = true;
    for (int t = 0; t < 50; ++t) {
      OElement x = random_nonzero(s, rng), y = random_nonzero(s, rng);
      auto vx = x.val_pi(), vy = y.val_pi();
      if (*vx + *vy >= (long)s->e * s->M) continue;
      auto vxy = (x * y).val_pi();
      if (!vxy || *vxy != *vx + *vy) valadd = false;
    }
    b.add(name + "/valuation-additivity", valadd, 50);
  }
  return b.finish("field");
}

// ---- series suite ----

ojson series_suite(u64 seed) {
  SuiteBuilder b;
  const int D = 12;
  for (const auto& name : {std::string("q2"), std::string("q2-ramified"), std::string("q3")}) {
    std::mt19937_64 rng(seed);
    SpecPtr s = preset_spec(name);

    bool assoc = true;
    for (int t = 0; t < 10; ++t) {
      auto g = random_nilpotent_series(s, D, rng);
      auto h = random_nilpotent_series(s, D, rng);
      auto k = random_nilpotent_series(s, D, rng);
      if (!compose(compose(g, h), k).eq(compose(g, compose(h, k)))) assoc = false;
    }
    b.add(name + "/compose-associative", assoc, 10);

    bool div = true;
    for (int t = 0; t < 10; ++t) {
      auto g = random_nilpotent_series(s, D, rng);
      int k = 1 + (int)(rng() % 3);
      auto h = Series<OElement>::zeros(OElement::zero(s), D);
      h.coeffs[k] = OElement::one(s);
      for (int i = k + 1; i <= D; ++i) h.coeffs[i] = OElement::random(s, rng);
      if (!exact_divide(g * h, h).eq(g.truncated(D - k))) div = false;
    }
    b.add(name + "/exact-divide-roundtrip", div, 10);

    bool hom = true;
    for (int t = 0; t < 10; ++t) {
      auto g = random_nilpotent_series(s, D, rng);
      auto h = random_nilpotent_series(s, D, rng);
      auto prod = reductions(g * h).mod_pi.coeffs;
      auto rg = reductions(g).mod_pi.coeffs, rh = reductions(h).mod_pi.coeffs;
      for (int i = 0; i <= D; ++i) {
        std::vector<u64> acc(s->f, 0);
        for (int jx = 0; jx <= i; ++jx) {
          auto m = kl_mul(*s, rg[jx], rh[i - jx]);
          for (int x = 0; x < s->f; ++x) acc[x] = (acc[x] + m[x]) % s->p;
        }
        if (acc != prod[i]) hom = false;
      }
    }
    b.add(name + "/mod-pi-homomorphism", hom, 10);
  }
  return b.finish("series");
}

// ---- lubin-tate suite ----

ojson lubin_tate_suite(u64 seed) {
  SuiteBuilder b;
  const int D = 16;
  for (const auto& name : preset_names()) {
    std::mt19937_64 rng(seed);
    SpecPtr s = preset_spec(name);
    auto fs = default_frobenius(s, D);
    auto F = build_group_law(fs, D);

    b.add(name + "/group-law-symmetric", F.is_symmetric());
    bool unital = true;
    for (int i = 0; i <= D; ++i) {
      if (!F.c[i][0].eq(i == 1 ? OElement::one(s) : OElement::zero(s))) unital = false;
    }
    b.add(name + "/group-law-unital", unital);

    {
      int Da = D / 2;
      auto Ft = F.truncated(Da);
      auto X = Trivariate<OElement>::zeros(OElement::zero(s), Da);
      auto Y = X, Z = X;
      X.at(1, 0, 0) = OElement::one(s);
      Y.at(0, 1, 0) = OElement::one(s);
      Z.at(0, 0, 1) = OElement::one(s);
      auto G = Ft.eval(Ft.eval(X, Y), Z);
      b.add(name + "/group-law-associative", G.eq(G.cycled()));
    }

    b.add(name + "/pi-endomorphism-is-f",
          build_endomorphism(fs, OElement::pi(s), D).eq(fs.poly(D)));

    bool mult = true;
    // scalar products must stay exactly representable (a -> [a] does not
    // factor through o_L/p^M): half the digit budget each, integer factor
    int half = (s->M - 2) / 2;
    u64 bound = 1;
    for (int i = 0; i < half; ++i) bound *= s->p;
    for (int t = 0; t < 5; ++t) {
      OElement a = OElement::random_digits(s, rng, half);
      OElement c = OElement::from_int(s, (i64)(rng() % bound));
      auto ea = build_endomorphism(fs, a, D), ec = build_endomorphism(fs, c, D);
      if (!compose(ea, ec).eq(build_endomorphism(fs, a * c, D))) mult = false;
    }
    b.add(name + "/endomorphism-multiplicative", mult, 5);

    {
      auto ep = build_endomorphism(fs, (i64)s->p, D);
      auto red = reductions(ep);
      u64 h = 1;
      for (int i = 0; i < s->n; ++i) h *= s->p;
      b.add(name + "/height", (u64)red.mod_pi.t_valuation == h);
    }

    {
      auto lg = logarithm(fs, D);
      auto lf = compose(lg, [&] {
        auto fl = Series<LaurentScalar>::zeros(LaurentScalar::zero(s), D);
        for (int i = 0; i <= D; ++i) fl.coeffs[i] = LaurentScalar(fs.poly(D).coeffs[i]);
        return fl;
      }());
      auto pil = lg.scale(LaurentScalar(OElement::pi(s)));
      b.add(name + "/log-linearizes-f", lf.eq(pil));
    }
  }

  {
    // genus over q2 (Honda coordinate): q^k pi^{-k} at m = q^k - 1, else 0
    SpecPtr s = preset_spec("q2");
    auto model = honda_model(s, 20);
    bool genus_ok = true;
    for (int m = 0; m <= 18; ++m) {
      auto g = genus_cp(model, m);
      long k = -1;
      u64 v = 1;
      for (long kk = 0; (long)v - 1 <= m; v *= s->q, ++kk)
        if ((long)v - 1 == m) { k = kk; break; }
      if (k >= 0) {
        u64 qk = 1;
        for (long i = 0; i < k; ++i) qk *= s->q;
        if (!g.eq(LaurentScalar(OElement::from_int(s, (i64)qk), k))) genus_ok = false;
      } else if (!g.is_zero()) {
        genus_ok = false;
      }
    }
    b.add("q2/genus-support", genus_ok, 19);
  }

  {
    // multiplicative oracle over q2: F = X + Y + XY, [3] = (1+T)^3 - 1
    SpecPtr s = preset_spec("q2");
    auto fs = default_frobenius(s, D);
    auto F = build_group_law(fs, D);
    auto expect = Bivariate<OElement>::zeros(OElement::zero(s), D);
    expect.c[1][0] = OElement::one(s);
    expect.c[0][1] = OElement::one(s);
    expect.c[1][1] = OElement::one(s);
    b.add("q2/multiplicative-group-law", F.eq(expect));
    auto e3 = build_endomorphism(fs, (i64)3, D);
    auto bin = Series<OElement>::zeros(OElement::zero(s), D);
    bin.coeffs[1] = OElement::from_int(s, 3);
    bin.coeffs[2] = OElement::from_int(s, 3);
    bin.coeffs[3] = OElement::one(s);
    b.add("q2/binomial-endomorphism", e3.eq(bin));
  }
  return b.finish("lubin-tate");
}

// ---- witt suite ----

ojson witt_suite(u64 seed) {
  SuiteBuilder b;
  struct Carrier {
    std::string name;
    SpecPtr spec;
  };
  std::vector<Carrier> carriers = {
      {"zmod-p2", make_field_spec_int(2, {0, 1}, {-2, 1}, 12)},
      {"zmod-p3", make_field_spec_int(3, {0, 1}, {-3, 1}, 12)},
      {"o-q2-ramified", preset_spec("q2-ramified")},
  };
  for (const auto& car : carriers) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<WittPair<OElement>, 3>> triples;
    for (int t = 0; t < 50; ++t)
      triples.push_back({WittPair<OElement>{OElement::random(car.spec, rng), OElement::random(car.spec, rng)},
                         WittPair<OElement>{OElement::random(car.spec, rng), OElement::random(car.spec, rng)},
                         WittPair<OElement>{OElement::random(car.spec, rng), OElement::random(car.spec, rng)}});
    auto rep = witt_ring_check(triples);
    b.add(car.name + "/ring-axioms-and-ghost", rep.pass(), rep.triples);

    auto lit = witt_ring_check(triples, &witt_mul_literal<OElement>);
    bool ghost_mul_failed = false;
    for (const auto& [n, ok] : lit.axioms)
      if (n == "ghost_mul" && !ok) ghost_mul_failed = true;
    b.add(car.name + "/literal-mul-fails-ghost", ghost_mul_failed, lit.triples,
          "the dot-product reading of the second multiplication component must break ghost "
          "multiplicativity");
  }

  {
    // hand values over Z mod 2^12
    SpecPtr s = carriers[0].spec;
    auto w = [&](i64 a0, i64 a1) {
      return WittPair<OElement>{OElement::from_int(s, a0), OElement::from_int(s, a1)};
    };
    bool hv = witt_eq(witt_add(w(1, 1), w(1, 1)), w(2, 1)) &&
              witt_eq(witt_mul(w(1, 1), w(1, 1)), w(1, 4)) &&
              witt_eq(witt_mul(w(2, 0), w(0, 1)), w(0, 4));
    b.add("zmod-p2/hand-values", hv, 3);
  }
  return b.finish("witt");
}

// ---- delta suite ----

ojson delta_suite(u64 seed) {
  SuiteBuilder b;
  const int D = 10;
  for (const auto& name : preset_names()) {
    std::mt19937_64 rng(seed);
    SpecPtr s = preset_spec(name);
    auto fs = default_frobenius(s, D * (int)s->q);
    auto pe = fs.poly(D * (int)s->q);
    auto delta = canonical_delta(pe);

    auto T = Series<OElement>::identity(OElement::zero(s), D * (int)s->q);
    b.add(name + "/delta-of-T", delta.apply(T).eq(T));

    auto T2 = Series<OElement>::zeros(OElement::zero(s), D * (int)s->q);
    T2.coeffs[2] = OElement::one(s);
    auto expect = Series<OElement>::zeros(OElement::zero(s), D * (int)s->q);
    expect.coeffs[2] = OElement::pi(s);
    expect.coeffs[s->q + 1] = OElement::from_int(s, 2);
    b.add(name + "/delta-of-T-squared", delta.apply(T2).eq(expect));

    std::vector<std::pair<Series<OElement>, Series<OElement>>> pairs;
    for (int t = 0; t < 10; ++t)
      pairs.emplace_back(random_nilpotent_series(s, D * (int)s->q, rng),
                         random_nilpotent_series(s, D * (int)s->q, rng));
    auto res = section_check(delta, pairs);
    b.add(name + "/series-section-homomorphism", res.pass, (long)pairs.size(), res.failed_law);

    std::vector<std::pair<OElement, OElement>> cpairs;
    for (int t = 0; t < 25; ++t)
      cpairs.emplace_back(OElement::random(s, rng), OElement::random(s, rng));
    auto cres = section_check(constants_delta(), cpairs);
    b.add(name + "/constants-section-homomorphism", cres.pass, (long)cpairs.size(), cres.failed_law);
  }
  return b.finish("delta");
}

// ---- theta suite ----

ojson theta_suite(u64 seed) {
  SuiteBuilder b;
  for (const auto& name : preset_names()) {
    std::mt19937_64 rng(seed);
    SpecPtr s = preset_spec(name);
    std::vector<OElement> samples;
    for (int t = 0; t < 25; ++t) samples.push_back(OElement::random(s, rng));

    auto fid = frobenius_identity_check(s, samples);
    b.add(name + "/frobenius-identity", fid.poly_identity && fid.value_identity && fid.residue_identity,
          fid.checked);

    for (int k = 2; k <= 4; ++k) {
      auto rep = theta_eval_check(s, k, samples);
      b.add(name + "/integrality-k" + std::to_string(k), rep.all_integral, rep.checked);
    }
  }
  {
    // explicit theta_1 = (T - T^q)/pi on q3
    SpecPtr s = preset_spec("q3");
    auto th1 = theta_poly(s, 1).poly;
    auto expect = Series<LaurentScalar>::zeros(LaurentScalar::zero(s), (int)s->q);
    expect.coeffs[1] = LaurentScalar(OElement::one(s), 1);
    expect.coeffs[s->q] = LaurentScalar(-OElement::one(s), 1);
    b.add("q3/theta1-closed-form", th1.eq(expect));
  }
  return b.finish("theta");
}

// ---- prism suite ----

ojson prism_suite(u64 seed) {
  SuiteBuilder b;
  const int D = 32;
  for (const auto& name : preset_names()) {
    SpecPtr s = preset_spec(name);
    auto fs = default_frobenius(s, D);
    for (int n = 1; n <= 3; ++n) {
      auto rep = verify_prism_condition(fs, n, D);
      b.add(name + "/condition-n" + std::to_string(n),
            rep.phi_matches_next && rep.certificate && rep.origin_distinguished);

      auto qn = compute_qn(fs, n, D);
      b.add(name + "/defining-quotient-n" + std::to_string(n),
            (qn * iterate_pi(fs, n - 1, D)).eq(iterate_pi(fs, n, D)));

      u64 lead = (s->q - 1);
      for (int i = 0; i < n - 1; ++i) lead *= s->q;
      if (lead <= (u64)D) {
        auto red = reductions(qn);
        b.add(name + "/mod-pi-valuation-n" + std::to_string(n),
              (u64)red.mod_pi.t_valuation == lead);
      }
    }
  }

  {
    // cyclotomic oracle over q2: q_n = Phi_{2^n}(1+T) = (1+T)^{2^{n-1}} + 1
    SpecPtr s = preset_spec("q2");
    auto fs = default_frobenius(s, D);
    bool cyc = true;
    for (int n = 1; n <= 4; ++n) {
      auto qn = compute_qn(fs, n, D);
      int half = 1 << (n - 1);
      auto expect = Series<OElement>::zeros(OElement::zero(s), D);
      u64 binom = 1;
      for (int i = 0; i <= half; ++i) {
        expect.coeffs[i] = OElement::from_int(s, (i64)(binom % s->pM));
        binom = binom * (u64)(half - i) / (u64)(i + 1);
      }
      expect.coeffs[0] = OElement::from_int(s, 2);
      if (!qn.eq(expect)) cyc = false;
    }
    b.add("q2/cyclotomic-oracle", cyc, 4);
  }

  {
    // completeness proxy: (pi, q_n)^k inside (pi, T)^k for k <= 4
    std::mt19937_64 rng(seed);
    (void)rng;
    bool contained = true;
    for (const auto& name : {std::string("q2"), std::string("q3")}) {
      SpecPtr s = preset_spec(name);
      auto fs = default_frobenius(s, D);
      OElement pi = OElement::pi(s);
      for (int n = 1; n <= 2; ++n) {
        auto qn = compute_qn(fs, n, D);
        for (int k = 1; k <= 4; ++k) {
          for (int i = 0; i <= k; ++i) {
            // generator pi^i q_n^{k-i}; membership in (pi, T)^k means the
            // T^j coefficient is divisible by pi^{k-j} for j < k
            auto gsr = Series<OElement>::constant(pi.pow((u64)i), D);
            for (int r = 0; r < k - i; ++r) gsr = gsr * qn;
            for (int jx = 0; jx < k; ++jx) {
              auto v = gsr.coeffs[jx].val_pi();
              long needv = k - jx;
              if (v ? *v < needv : (long)s->e * gsr.coeffs[jx].vp < needv) contained = false;
            }
          }
        }
      }
    }
    b.add("completeness-proxy", contained);
  }
  return b.finish("prism");
}

}  // namespace

ojson run_selftest(u64 seed) {
  ojson report;
  report["seed"] = seed;
  ojson suites = ojson::array();
  suites.push_back(delta_suite(seed));
  suites.push_back(field_suite(seed));
  suites.push_back(lubin_tate_suite(seed));
  suites.push_back(prism_suite(seed));
  suites.push_back(series_suite(seed));
  suites.push_back(theta_suite(seed));
  suites.push_back(witt_suite(seed));
  bool pass = true;
  for (const auto& s : suites) pass = pass && s["pass"].get<bool>();
  report["suites"] = std::move(suites);
  report["pass"] = pass;
  return report;
}

}  // namespace pityp
