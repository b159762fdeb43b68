#pragma once

#include <array>
#include <functional>
#include <utility>

#include "pitypical/series.hpp"

namespace pityp {

/// Length-2 ramified Witt vector over a carrier ring A.
template <typename R>
struct WittPair {
  R a0, a1;
};

/// <x,y>_q = x^q + y^q - (x+y)^q; exactly pi-divisible over o_L-algebras.
template <typename R>
R q_bracket(const R& x, const R& y) {
  u64 q = ring_q(x);
  return ring_pow(x, q) + ring_pow(y, q) - ring_pow(x + y, q);
}

template <typename R>
WittPair<R> witt_add(const WittPair<R>& a, const WittPair<R>& b) {
  R br;
  try {
    br = ring_div_pi(q_bracket(a.a0, b.a0), 1);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotDivisible,
                std::string("carrier lacks exact pi-division of <a0,b0>_q: ") + e.what());
  }
  return {a.a0 + b.a0, a.a1 + b.a1 + br};
}

template <typename R>
WittPair<R> witt_neg(const WittPair<R>& a) {
  // from ghost additivity: (-a)_1 = -a1 - pi^{-1}(a0^q + (-a0)^q)
  u64 q = ring_q(a.a0);
  R corr = ring_div_pi(ring_pow(a.a0, q) + ring_pow(-a.a0, q), 1);
  return {-a.a0, -a.a1 - corr};
}

/// Ghost-compatible multiplication (a0 b0, pi a1 b1 + a1 b0^q + b1 a0^q).
template <typename R>
WittPair<R> witt_mul(const WittPair<R>& a, const WittPair<R>& b) {
  u64 q = ring_q(a.a0);
  R cross = a.a1 * ring_pow(b.a0, q) + b.a1 * ring_pow(a.a0, q);
  return {a.a0 * b.a0, ring_mul_pi(a.a1 * b.a1) + cross};
}

/// The multiplication law with second component read literally as the dot
/// product a1 a0^q + b1 b0^q.  It fails ghost multiplicativity; kept only
/// as a regression fixture for that check.
template <typename R>
WittPair<R> witt_mul_literal(const WittPair<R>& a, const WittPair<R>& b) {
  u64 q = ring_q(a.a0);
  R dot = a.a1 * ring_pow(a.a0, q) + b.a1 * ring_pow(b.a0, q);
  return {a.a0 * b.a0, ring_mul_pi(a.a1 * b.a1) + dot};
}

/// Ghost coordinates (w0, w1) = (a0, a0^q + pi a1); a ring homomorphism to
/// the product ring A x A, used as the verification oracle.
template <typename R>
std::pair<R, R> ghost_map(const WittPair<R>& a) {
  u64 q = ring_q(a.a0);
  return {a.a0, ring_pow(a.a0, q) + ring_mul_pi(a.a1)};
}

template <typename R>
WittPair<R> witt_zero(const R& like) {
  return {ring_zero(like), ring_zero(like)};
}
template <typename R>
WittPair<R> witt_one(const R& like) {
  return {ring_one(like), ring_zero(like)};
}

template <typename R>
bool witt_eq(const WittPair<R>& a, const WittPair<R>& b) {
  return ring_eq(a.a0, b.a0) && ring_eq(a.a1, b.a1);
}

/// delta-structure derived from a Frobenius lift phi: delta(a) =
/// pi^{-1}(phi(a) - a^q).
template <typename R>
class DeltaOperator {
 public:
  explicit DeltaOperator(std::function<R(const R&)> phi) : phi_(std::move(phi)) {}

  R phi(const R& a) const { return phi_(a); }

  R apply(const R& a) const {
    R diff = phi_(a) - ring_pow(a, ring_q(a));
    try {
      return ring_div_pi(diff, 1);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotDivisible,
                  std::string("phi fails the Frobenius congruence at this element: ") + e.what());
    }
  }

  /// Witt section a -> (a, delta(a)).
  WittPair<R> section(const R& a) const { return {a, apply(a)}; }

 private:
  std::function<R(const R&)> phi_;
};

/// The canonical delta_L on o_L[[T]]: phi fixes o_L and sends T to [pi](T).
inline DeltaOperator<Series<OElement>> canonical_delta(Series<OElement> pi_endo) {
  return DeltaOperator<Series<OElement>>(
      [f = std::move(pi_endo)](const Series<OElement>& g) { return compose(g, f.truncated(g.deg())); });
}

/// The identity Frobenius lift on constants a in o_L (a^q == a mod pi).
inline DeltaOperator<OElement> constants_delta() {
  return DeltaOperator<OElement>([](const OElement& a) { return a; });
}

struct SectionCheckResult {
  bool pass = true;
  std::string failed_law;  // "add" or "mul" when pass is false
  long counterexample_index = -1;
};

/// Verifies that a -> (a, delta(a)) preserves +_W and x_W on each sample
/// pair; stops at the first counterexample.
template <typename R>
SectionCheckResult section_check(const DeltaOperator<R>& d,
                                 const std::vector<std::pair<R, R>>& samples) {
  SectionCheckResult res;
  for (size_t i = 0; i < samples.size(); ++i) {
    const auto& [a, b] = samples[i];
    auto wa = d.section(a), wb = d.section(b);
    if (!witt_eq(witt_add(wa, wb), d.section(a + b))) {
      res.pass = false;
      res.failed_law = "add";
      res.counterexample_index = (long)i;
      return res;
    }
    if (!witt_eq(witt_mul(wa, wb), d.section(a * b))) {
      res.pass = false;
      res.failed_law = "mul";
      res.counterexample_index = (long)i;
      return res;
    }
  }
  return res;
}

struct WittAxiomReport {
  long triples = 0;
  // axiom name -> pass; insertion order fixed for deterministic output
  std::vector<std::pair<std::string, bool>> axioms;
  long first_failure = -1;  // triple index of the first failed axiom instance
  bool pass() const {
    for (const auto& [n, ok] : axioms)
      if (!ok) return false;
    return true;
  }
};

/// Ring axioms for (W(A), +_W, x_W) plus ghost-map homomorphy on sampled
/// triples; `mul` is pluggable so the literal-reading multiplication can be
/// run as an expected-failure regression.
template <typename R>
WittAxiomReport witt_ring_check(
    const std::vector<std::array<WittPair<R>, 3>>& triples,
    WittPair<R> (*mul)(const WittPair<R>&, const WittPair<R>&) = &witt_mul<R>) {
  WittAxiomReport rep;
  rep.triples = (long)triples.size();
  std::vector<std::pair<std::string, bool>>& ax = rep.axioms;
  ax = {{"add_comm", true},    {"add_assoc", true},   {"add_zero", true},
        {"add_neg", true},     {"mul_comm", true},    {"mul_assoc", true},
        {"mul_one", true},     {"distrib", true},     {"ghost_add", true},
        {"ghost_mul", true}};
  auto fail = [&](const char* name, long idx) {
    for (auto& [n, ok] : ax)
      if (n == name) ok = false;
    if (rep.first_failure < 0) rep.first_failure = idx;
  };
  for (size_t t = 0; t < triples.size(); ++t) {
    const auto& [a, b, c] = triples[t];
    auto zero = witt_zero(a.a0), one = witt_one(a.a0);
    if (!witt_eq(witt_add(a, b), witt_add(b, a))) fail("add_comm", (long)t);
    if (!witt_eq(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)))) fail("add_assoc", (long)t);
    if (!witt_eq(witt_add(a, zero), a)) fail("add_zero", (long)t);
    if (!witt_eq(witt_add(a, witt_neg(a)), zero)) fail("add_neg", (long)t);
    if (!witt_eq(mul(a, b), mul(b, a))) fail("mul_comm", (long)t);
    if (!witt_eq(mul(mul(a, b), c), mul(a, mul(b, c)))) fail("mul_assoc", (long)t);
    if (!witt_eq(mul(a, one), a)) fail("mul_one", (long)t);
    if (!witt_eq(mul(a, witt_add(b, c)), witt_add(mul(a, b), mul(a, c)))) fail("distrib", (long)t);
    auto ga = ghost_map(a), gb = ghost_map(b);
    auto gs = ghost_map(witt_add(a, b));
    if (!(ring_eq(gs.first, ga.first + gb.first) && ring_eq(gs.second, ga.second + gb.second)))
      fail("ghost_add", (long)t);
    auto gp = ghost_map(mul(a, b));
    if (!(ring_eq(gp.first, ga.first * gb.first) && ring_eq(gp.second, ga.second * gb.second)))
      fail("ghost_mul", (long)t);
  }
  return rep;
}

}  // namespace pityp
