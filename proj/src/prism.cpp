#include "pitypical/prism.hpp"

namespace pityp {

namespace {

// f/T as an exact polynomial of degree D (f padded with zeros first, so the
// quotient keeps full degree).
Series<OElement> f_over_t(const FrobeniusSeries& fs, int D) {
  auto fpad = fs.poly(D + 1);
  auto t = Series<OElement>::identity(OElement::zero(fs.spec), D + 1);
  return exact_divide(fpad, t);
}

}  // namespace

Series<OElement> compute_qn(const FrobeniusSeries& fs, int n, int D) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "level n must be >= 1");
  auto g = f_over_t(fs, D);
  if (n == 1) return g;
  return compose(g, iterate_pi(fs, n - 1, D));
}

PrismCertificate prism_certificate(const FrobeniusSeries& fs, int n, int D) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "level n must be >= 1");
  const SpecPtr& S = fs.spec;
  OElement pi = OElement::pi(S);

  // ftilde = (pi - q_1)/T at degree D; q_1(0) = pi makes this exact.
  auto q1e = f_over_t(fs, D + 1);
  auto pi_minus_q1 = Series<OElement>::constant(pi, D + 1) - q1e;
  auto ftilde = exact_divide(pi_minus_q1, Series<OElement>::identity(OElement::zero(S), D + 1));

  auto pin = iterate_pi(fs, n, D);
  auto pinm1 = iterate_pi(fs, n - 1, D);
  auto c = pinm1 * compose(ftilde, pin);

  PrismCertificate cert;
  cert.spec = S;
  cert.f = fs;
  cert.n = n;
  cert.qn = compute_qn(fs, n, D);
  cert.qn1 = compute_qn(fs, n + 1, D);
  cert.cofactor = c;
  cert.checked_mod_degree = D;

  auto rhs = cert.qn1 + c * cert.qn;
  cert.pass = rhs.eq(Series<OElement>::constant(pi, D));
  if (!cert.pass)
    throw Error(ErrorCode::CertificateFailure,
                "pi = q_{n+1} + c q_n fails mod T^" + std::to_string(D + 1) +
                    " at n = " + std::to_string(n));
  return cert;
}

Series<OElement> phi_ideal_image(const FrobeniusSeries& fs, int n, int D) {
  auto qn = compute_qn(fs, n, D);
  auto img = compose(qn, fs.poly(D));
  if (!img.eq(compute_qn(fs, n + 1, D)))
    throw Error(ErrorCode::MismatchAgainstQnPlus1,
                "phi(q_n) differs from q_{n+1} at n = " + std::to_string(n));
  return img;
}

PrismConditionReport verify_prism_condition(const FrobeniusSeries& fs, int n, int D) {
  PrismConditionReport rep;
  rep.n = n;
  rep.D = D;

  auto qn = compute_qn(fs, n, D);
  auto qn1 = compute_qn(fs, n + 1, D);
  rep.phi_matches_next = compose(qn, fs.poly(D)).eq(qn1);

  try {
    rep.certificate = prism_certificate(fs, n, D).pass;
  } catch (const Error&) {
    rep.certificate = false;
  }

  OElement at0 = qn.coeffs[0];
  auto v = at0.val_pi();
  rep.origin_distinguished = v && *v == 1;
  if (n == 1 && !at0.eq(OElement::pi(fs.spec))) rep.origin_distinguished = false;

  // delta(q_n) mod (pi, T), reported without a pass/fail verdict.
  int d = std::min(D, 12);
  auto delta = canonical_delta(fs.poly(d));
  rep.delta_qn_residue = delta.apply(qn.truncated(d)).coeffs[0].residue();
  return rep;
}

}  // namespace pityp
