#include "pitypical/theta.hpp"

namespace pityp {

namespace {

// (q^k - 1)/(q - 1): the pi-denominator exponent of theta_k.
long theta_denom_bound(u64 q, int k) {
  long d = 0;
  for (int i = 0; i < k; ++i) d = d * (long)q + 1;
  return d;
}

}  // namespace

ThetaPolynomial theta_poly(const SpecPtr& spec, int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "theta index must be >= 0");
  u64 q = spec->q;
  long dbound = theta_denom_bound(q, k);
  int cap = LocalFieldSpec::precision_cap(spec->p);
  long needed = spec->M + (dbound + spec->e - 1) / spec->e;
  if (needed > cap)
    throw Error(ErrorCode::BadPrecision,
                "theta_" + std::to_string(k) + " coefficients need " + std::to_string(needed) +
                    " residue digits (cap " + std::to_string(cap) + "); evaluate by value instead");
  // Headroom: denominator stripping during the recursion costs precision
  // roughly proportional to the denominators created, so reserve twice the
  // final denominator budget (clamped to the residue cap inside elevated()).
  SpecPtr S = spec->elevated(2 * (int)(needed - spec->M) + 4);

  u64 degk = 1;
  for (int i = 0; i < k; ++i) degk *= q;

  std::vector<Series<LaurentScalar>> thetas;
  OElement piS = OElement::pi(S);
  for (int j = 0; j <= k; ++j) {
    u64 degj = 1;
    for (int i = 0; i < j; ++i) degj *= q;
    if (j == 0) {
      thetas.push_back(Series<LaurentScalar>::identity(LaurentScalar::zero(S), (int)degj));
      continue;
    }
    // sum_{i<j} pi^i theta_i^{q^{j-i}} - T, at degree q^j
    auto acc = Series<LaurentScalar>::zeros(LaurentScalar::zero(S), (int)degj);
    for (int i = 0; i < j; ++i) {
      u64 e = 1;
      for (int t = 0; t < j - i; ++t) e *= q;
      auto term = ring_pow(thetas[i].extended((int)degj), e);
      term = term.scale(LaurentScalar(piS.pow((u64)i)));
      acc = acc + term;
    }
    acc.coeffs[1] = acc.coeffs[1] - LaurentScalar::one(S);
    // theta_j = -pi^{-j} * acc
    auto th = (-acc);
    for (auto& c : th.coeffs) c = ring_div_pi(c, j);
    thetas.push_back(std::move(th));
  }

  // lower coefficients to the base spec
  std::vector<LaurentScalar> out;
  out.reserve(degk + 1);
  for (auto& c : thetas[k].coeffs) {
    c.reduce();
    out.emplace_back(c.num.reduced_to(spec), c.denom_exp);
  }
  return ThetaPolynomial{k, Series<LaurentScalar>(std::move(out), "T"), spec};
}

OElement theta_value(const SpecPtr& spec, int k, const OElement& a) {
  std::vector<OElement> vals;  // theta_i(a), all integral by construction
  OElement pi = OElement::pi(spec);
  for (int j = 0; j <= k; ++j) {
    if (j == 0) {
      vals.push_back(a);
      continue;
    }
    OElement acc = OElement::zero(spec);
    for (int i = 0; i < j; ++i) {
      u64 e = 1;
      for (int t = 0; t < j - i; ++t) e *= spec->q;
      acc = acc + pi.pow((u64)i) * vals[i].pow(e);
    }
    acc = acc - a;
    vals.push_back((-acc).div_pi_exact(j));
  }
  return vals[k];
}

ThetaEvalReport theta_eval_check(const SpecPtr& spec, int k, const std::vector<OElement>& samples) {
  ThetaEvalReport rep;
  rep.k = k;
  for (size_t i = 0; i < samples.size(); ++i) {
    ++rep.checked;
    try {
      (void)theta_value(spec, k, samples[i]);
    } catch (const Error&) {
      rep.all_integral = false;
      if (rep.first_failure < 0) rep.first_failure = (long)i;
    }
  }
  return rep;
}

FrobeniusIdentityReport frobenius_identity_check(const SpecPtr& spec,
                                                 const std::vector<OElement>& samples) {
  FrobeniusIdentityReport rep;
  // polynomial identity T^q + pi theta_1(T) = T
  auto th1 = theta_poly(spec, 1).poly;
  auto lhs = Series<LaurentScalar>::zeros(LaurentScalar::zero(spec), (int)spec->q);
  lhs.coeffs[spec->q] = LaurentScalar::one(spec);
  for (int i = 0; i <= lhs.deg(); ++i)
    lhs.coeffs[i] = lhs.coeffs[i] + ring_mul_pi(th1.coeffs[i]);
  auto id = Series<LaurentScalar>::identity(LaurentScalar::zero(spec), (int)spec->q);
  rep.poly_identity = lhs.eq(id);

  OElement pi = OElement::pi(spec);
  for (const auto& a : samples) {
    ++rep.checked;
    OElement t1 = theta_value(spec, 1, a);
    if (!(a.pow_q() + pi * t1).eq(a)) rep.value_identity = false;
    if (!kl_is_zero([&] {
          auto r1 = a.pow_q().residue();
          auto r2 = a.residue();
          for (size_t j = 0; j < r1.size(); ++j) r1[j] = (r1[j] + spec->p - r2[j]) % spec->p;
          return r1;
        }()))
      rep.residue_identity = false;
  }
  return rep;
}

}  // namespace pityp
