#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pitypical/presets.hpp"
#include "pitypical/series.hpp"

using namespace pityp;

namespace {

Series<OElement> from_ints(const SpecPtr& s, std::vector<i64> cs, int D) {
  auto g = Series<OElement>::zeros(OElement::zero(s), D);
  for (size_t i = 0; i < cs.size(); ++i) g.coeffs[i] = OElement::from_int(s, cs[i]);
  return g;
}

}  // namespace

TEST_CASE("series ring operations") {
  auto s = preset_spec("q2");
  auto f = from_ints(s, {0, 2, 1}, 8);  // 2T + T^2
  CHECK((f * f).eq(from_ints(s, {0, 0, 4, 4, 1}, 8)));
  CHECK((f + from_ints(s, {0, 0, -1}, 8)).eq(from_ints(s, {0, 2}, 8)));
}

TEST_CASE("composition") {
  auto s = preset_spec("q2");
  auto f = from_ints(s, {0, 2, 1}, 8);
  auto id = Series<OElement>::identity(OElement::zero(s), 8);
  CHECK(compose(f, id).eq(f));
  CHECK(compose(from_ints(s, {0, 0, 1}, 8), f).eq(from_ints(s, {0, 0, 4, 4, 1}, 8)));
  // f(f) = (1+T)^4 - 1 by the binomial oracle
  CHECK(compose(f, f).eq(from_ints(s, {0, 4, 6, 4, 1}, 8)));
  CHECK_THROWS_AS((void)compose(f, from_ints(s, {1, 1}, 8)), Error);
}

TEST_CASE("unit inversion is geometric for 1 + T") {
  auto s = preset_spec("q3");
  auto g = from_ints(s, {1, 1}, 6);
  auto h = invert_unit(g);
  for (int i = 0; i <= 6; ++i)
    CHECK(h.coeffs[i].eq(OElement::from_int(s, i % 2 ? -1 : 1)));
  CHECK_THROWS_AS((void)invert_unit(from_ints(s, {0, 1}, 6)), Error);
  CHECK_THROWS_AS((void)invert_unit(from_ints(s, {3, 1}, 6)), Error);
}

TEST_CASE("exact division by T^k units") {
  auto s = preset_spec("q2");
  auto f = from_ints(s, {0, 2, 1}, 8);
  CHECK(exact_divide(f, Series<OElement>::identity(OElement::zero(s), 8))
            .eq(from_ints(s, {2, 1}, 7)));
  CHECK(exact_divide(from_ints(s, {0, 0, 0, 1}, 8),
                     Series<OElement>::identity(OElement::zero(s), 8))
            .eq(from_ints(s, {0, 0, 1}, 7)));
  CHECK_THROWS_AS(
      (void)exact_divide(from_ints(s, {1, 1}, 8), Series<OElement>::identity(OElement::zero(s), 8)),
      Error);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto g = Series<OElement>::zeros(OElement::zero(s), 10);
    for (int i = 0; i <= 10; ++i) g.coeffs[i] = OElement::random(s, rng);
    auto h = from_ints(s, {0, 0, 1, 7}, 10);  // T^2 (1 + 7T)
    CHECK(exact_divide(g * h, h).eq(g.truncated(8)));
  }
}

TEST_CASE("mod-pi reduction and T-valuation") {
  auto s = preset_spec("q2");
  auto f = from_ints(s, {0, 2, 1}, 8);
  auto r = reductions(f);
  CHECK(r.t_valuation == 1);
  CHECK(r.mod_pi.t_valuation == 2);
  CHECK_FALSE(r.precision_caveat);
  auto rp = reductions(from_ints(s, {0, 2, 4}, 8));
  CHECK(rp.mod_pi.t_valuation == 9);  // reduces to 0 mod pi

  auto q3 = preset_spec("q3");
  CHECK(reductions(from_ints(q3, {0, 3, 0, 1}, 8)).mod_pi.t_valuation == 3);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(6);
  auto s = preset_spec("q2-ramified");
  for (int t = 0; t < 5; ++t) {
    auto mk = [&] {
      auto g = Series<OElement>::zeros(OElement::zero(s), 10);
      for (int i = 1; i <= 10; ++i) g.coeffs[i] = OElement::random(s, rng);
      return g;
    };
    auto g = mk(), h = mk(), k = mk();
    CHECK(compose(compose(g, h), k).eq(compose(g, compose(h, k))));
  }
}

TEST_CASE("bivariate arithmetic and evaluation") {
  auto s = preset_spec("q2");
  auto F = Bivariate<OElement>::zeros(OElement::zero(s), 6);
  F.c[1][0] = OElement::one(s);
  F.c[0][1] = OElement::one(s);
  F.c[1][1] = OElement::one(s);  // X + Y + XY
  CHECK(F.is_symmetric());
  CHECK(F.eq(F.transposed()));
  // evaluate at scalars: F(1, 2) = 1 + 2 + 2 = 5
  CHECK(F.eval(OElement::one(s), OElement::from_int(s, 2)).eq(OElement::from_int(s, 5)));
  // substitute a univariate series: F(T, T) = 2T + T^2
  auto T = Series<OElement>::identity(OElement::zero(s), 6);
  CHECK(F.eval(T, T).eq(from_ints(s, {0, 2, 1}, 6)));
  auto h2 = F.homogeneous(2);
  CHECK(h2[0].is_zero());
  CHECK(h2[1].eq(OElement::one(s)));
}

TEST_CASE("trivariate cyclic permutation") {
  auto s = preset_spec("q2");
  auto t = Trivariate<OElement>::zeros(OElement::zero(s), 4);
  t.at(2, 1, 0) = OElement::from_int(s, 7);
  auto c = t.cycled();
  CHECK(c.at(0, 2, 1).eq(OElement::from_int(s, 7)));
  CHECK(c.at(2, 1, 0).is_zero());
  // a cyclically symmetric value is fixed
  auto sym = Trivariate<OElement>::zeros(OElement::zero(s), 4);
  sym.at(1, 1, 1) = OElement::from_int(s, 3);
  CHECK(sym.eq(sym.cycled()));
}
