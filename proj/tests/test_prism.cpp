#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pitypical/presets.hpp"
#include "pitypical/prism.hpp"

using namespace pityp;

namespace {

Series<OElement> from_ints(const SpecPtr& s, std::vector<i64> cs, int D) {
  auto g = Series<OElement>::zeros(OElement::zero(s), D);
  for (size_t i = 0; i < cs.size(); ++i) g.coeffs[i] = OElement::from_int(s, cs[i]);
  return g;
}

}  // namespace

TEST_CASE("q_1 and q_2 closed forms") {
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, 16);
  CHECK(compute_qn(fs, 1, 16).eq(from_ints(s, {2, 1}, 16)));
  CHECK(compute_qn(fs, 2, 16).eq(from_ints(s, {2, 2, 1}, 16)));

  auto q3 = preset_spec("q3");
  auto fs3 = default_frobenius(q3, 16);
  CHECK(compute_qn(fs3, 1, 16).eq(from_ints(q3, {3, 0, 1}, 16)));
  // q_2 = 3 + (3T + T^3)^2 reduces to T^6 mod 3
  auto red = reductions(compute_qn(fs3, 2, 16));
  CHECK(red.mod_pi.t_valuation == 6);
}

TEST_CASE("defining quotient re-multiplied") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, 24);
    for (int n = 1; n <= 4; ++n)
      CHECK((compute_qn(fs, n, 24) * iterate_pi(fs, n - 1, 24)).eq(iterate_pi(fs, n, 24)));
  }
}

TEST_CASE("phi sends q_n to q_{n+1}") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, 24);
    for (int n = 1; n <= 3; ++n)
      CHECK_NOTHROW((void)phi_ideal_image(fs, n, 24));
  }
  // over Q_2: q_1(f(T)) = 2 + 2T + T^2 = q_2 by direct expansion
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, 16);
  CHECK(phi_ideal_image(fs, 1, 16).eq(from_ints(s, {2, 2, 1}, 16)));
}

TEST_CASE("n = 1 certificate over Q_2, expanded by hand") {
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, 16);
  auto cert = prism_certificate(fs, 1, 16);
  CHECK(cert.pass);
  // ftilde = -1, so c = [pi^0] * (ftilde o [pi]) = -T
  CHECK(cert.cofactor.eq(from_ints(s, {0, -1}, 16)));
  // q_2 - T q_1 = (2 + 2T + T^2) - (2T + T^2) = 2 = pi
  auto t_q1 = Series<OElement>::identity(OElement::zero(s), 16) * cert.qn;
  CHECK((cert.qn1 - t_q1).eq(Series<OElement>::constant(OElement::from_int(s, 2), 15)));
}

TEST_CASE("prism condition holds for every preset, n = 1..3") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    auto s = preset_spec(name);
    auto fs = default_frobenius(s, 32);
    for (int n = 1; n <= 3; ++n) {
      auto rep = verify_prism_condition(fs, n, 32);
      CAPTURE(n);
      CHECK(rep.phi_matches_next);
      CHECK(rep.certificate);
      CHECK(rep.origin_distinguished);
      CHECK(rep.pass());
      // delta(q_n) is reported as a unit mod (pi, T) here
      CHECK_FALSE(kl_is_zero(rep.delta_qn_residue));
    }
  }
}

TEST_CASE("mod-pi leading term T^{(q-1) q^{n-1}}") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    auto s = preset_spec(name);
    const int D = 50;
    auto fs = default_frobenius(s, D);
    for (int n = 1; n <= 3; ++n) {
      u64 lead = s->q - 1;
      for (int i = 0; i < n - 1; ++i) lead *= s->q;
      if (lead > (u64)D) continue;
      CHECK((u64)reductions(compute_qn(fs, n, D)).mod_pi.t_valuation == lead);
    }
  }
}

TEST_CASE("cyclotomic oracle over Q_2: q_n = Phi_{2^n}(1+T)") {
  auto s = preset_spec("q2");
  auto fs = default_frobenius(s, 32);
  for (int n = 1; n <= 4; ++n) {
    int half = 1 << (n - 1);
    // Phi_{2^n}(x) = x^{2^{n-1}} + 1
    auto expect = Series<OElement>::zeros(OElement::zero(s), 32);
    u64 binom = 1;
    for (int i = 0; i <= half; ++i) {
      expect.coeffs[i] = OElement::from_int(s, (i64)binom);
      binom = binom * (u64)(half - i) / (u64)(i + 1);
    }
    expect.coeffs[0] = OElement::from_int(s, 2);
    CHECK(compute_qn(fs, n, 32).eq(expect));
  }
}

TEST_CASE("certificate is stable under raising D") {
  auto s = preset_spec("q3");
  auto fs = default_frobenius(s, 48);
  auto c24 = prism_certificate(fs, 2, 24);
  auto c48 = prism_certificate(fs, 2, 48);
  CHECK(c24.pass);
  CHECK(c48.pass);
  CHECK(c48.qn.truncated(24).eq(c24.qn));
  CHECK(c48.cofactor.truncated(24).eq(c24.cofactor));
}
