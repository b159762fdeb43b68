// pitypical: exact arithmetic for Lubin-Tate formal groups, ramified Witt
// vectors, numerical polynomials and q-series prism certificates.
//
// Exit codes: 0 success/pass, 1 mathematical check failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "pitypical/presets.hpp"
#include "pitypical/selftest.hpp"

using namespace pityp;

namespace {

// ---- tiny integer-polynomial parser ("x^2-4", "y^2+y+1", "3x", "x") ----

std::vector<i64> parse_poly(const std::string& text) {
  std::vector<i64> coeffs;
  auto bump = [&](size_t deg, i64 v) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += v;
  };
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  char var = 0;
  skip_ws();
  if (i >= text.size()) throw Error(ErrorCode::ParseError, "empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    i64 sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in polynomial at position " +
                                             std::to_string(i));
    }
    first = false;
    i64 coef = 1;
    bool saw_digits = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coef = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        coef = coef * 10 + (text[i] - '0');
        ++i;
      }
      saw_digits = true;
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    size_t deg = 0;
    if (i < text.size() && std::isalpha((unsigned char)text[i])) {
      if (var == 0) var = text[i];
      if (text[i] != var)
        throw Error(ErrorCode::ParseError, "polynomial mixes variables");
      ++i;
      deg = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw Error(ErrorCode::ParseError, "missing exponent after '^'");
        deg = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          deg = deg * 10 + (size_t)(text[i] - '0');
          ++i;
        }
      }
    } else if (!saw_digits) {
      throw Error(ErrorCode::ParseError, "expected a term at position " + std::to_string(i));
    }
    bump(deg, sign * coef);
  }
  if (coeffs.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  return coeffs;
}

struct Ctx {
  std::string preset = "q2";
  std::string spec_path;
  std::string f_path;  // empty or "default" -> pi T + T^q
  std::string out_path;
  int deg = 64;
  u64 seed = 0;

  SpecPtr spec() const {
    if (!spec_path.empty()) return spec_from_json(load_json_file(spec_path));
    return preset_spec(preset);
  }
  FrobeniusSeries frob(const SpecPtr& s, int D) const {
    if (f_path.empty() || f_path == "default") return default_frobenius(s, D);
    return validate_frobenius_series(series_from_json(s, load_json_file(f_path)), s);
  }
};

void add_common(CLI::App* cmd, Ctx& ctx, bool with_deg = true) {
  cmd->add_option("--preset", ctx.preset, "built-in field preset (q2, q3, q2-ramified, q4-unramified)");
  cmd->add_option("--spec", ctx.spec_path, "field presentation JSON file (overrides --preset)");
  if (with_deg) cmd->add_option("--deg", ctx.deg, "truncation degree D");
  cmd->add_option("--out", ctx.out_path, "write the JSON document here instead of stdout");
}

int emit(const Ctx& ctx, const ojson& doc, bool pass = true) {
  std::string text = doc.dump(2) + "\n";
  if (!ctx.out_path.empty()) {
    std::ofstream out(ctx.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lubin-Tate / Witt / prism arithmetic over p-adic integer rings"};
  app.require_subcommand(1);
  Ctx ctx;

  // field make
  auto* field = app.add_subcommand("field", "field presentations");
  auto* field_make = field->add_subcommand("make", "validate and emit a field presentation");
  u64 opt_p = 2;
  std::string opt_g = "y", opt_E;
  int opt_M = 12;
  field_make->add_option("--p", opt_p, "prime")->required();
  field_make->add_option("--g", opt_g, "unramified polynomial, e.g. \"y^2+y+1\"");
  field_make->add_option("--E", opt_E, "Eisenstein polynomial, e.g. \"x^2-2\"")->required();
  field_make->add_option("--prec", opt_M, "precision exponent M");
  field_make->add_option("--out", ctx.out_path, "output path");

  // lt
  auto* lt = app.add_subcommand("lt", "Lubin-Tate formal group operations");
  auto* lt_group = lt->add_subcommand("group-law", "solve for the group law F(X,Y)");
  add_common(lt_group, ctx);
  lt_group->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");
  auto* lt_endo = lt->add_subcommand("endo", "solve for the endomorphism [a](T)");
  i64 opt_a = 1;
  add_common(lt_endo, ctx);
  lt_endo->add_option("--a", opt_a, "integer scalar a")->required();
  lt_endo->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");
  auto* lt_log = lt->add_subcommand("log", "logarithm of the formal group");
  add_common(lt_log, ctx);
  lt_log->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");
  auto* lt_genus = lt->add_subcommand("genus", "genus value at CP^m");
  int opt_m = 0;
  std::string opt_model = "honda";
  add_common(lt_genus, ctx);
  lt_genus->add_option("--m", opt_m, "complex dimension m")->required();
  lt_genus->add_option("--model", opt_model, "honda | f")->check(CLI::IsMember({"honda", "f"}));
  lt_genus->add_option("--f", ctx.f_path, "Frobenius series for --model f");

  // witt check
  auto* witt = app.add_subcommand("witt", "length-2 ramified Witt vectors");
  auto* witt_check = witt->add_subcommand("check", "ring axioms + ghost homomorphism on samples");
  std::string opt_carrier = "ofield";
  long opt_trials = 50;
  add_common(witt_check, ctx, false);
  witt_check->add_option("--carrier", opt_carrier, "zmod | ofield | series")
      ->check(CLI::IsMember({"zmod", "ofield", "series"}));
  witt_check->add_option("--trials", opt_trials, "number of sampled triples");
  witt_check->add_option("--seed", ctx.seed, "RNG seed");
  witt_check->add_option("--deg", ctx.deg, "series carrier degree");

  // delta check
  auto* delta = app.add_subcommand("delta", "delta-structures (Frobenius lifts)");
  auto* delta_check = delta->add_subcommand("check", "section homomorphism into Witt pairs");
  add_common(delta_check, ctx);
  delta_check->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");
  delta_check->add_option("--trials", opt_trials, "number of sampled pairs");
  delta_check->add_option("--seed", ctx.seed, "RNG seed");

  // theta
  auto* theta = app.add_subcommand("theta", "numerical polynomials theta_k");
  auto* theta_poly_cmd = theta->add_subcommand("poly", "theta_k as an exact polynomial");
  int opt_k = 1;
  add_common(theta_poly_cmd, ctx, false);
  theta_poly_cmd->add_option("--k", opt_k, "index k")->required();
  auto* theta_eval = theta->add_subcommand("eval", "integrality of theta_k at points");
  std::string opt_points;
  long opt_random = 0;
  add_common(theta_eval, ctx, false);
  theta_eval->add_option("--k", opt_k, "index k")->required();
  theta_eval->add_option("--points", opt_points, "JSON array of elements");
  theta_eval->add_option("--random", opt_random, "sample N random points instead");
  theta_eval->add_option("--seed", ctx.seed, "RNG seed");

  // prism
  auto* prism = app.add_subcommand("prism", "q-series and prism certificates");
  auto* prism_qn = prism->add_subcommand("qn", "compute q_n(T)");
  int opt_n = 1;
  add_common(prism_qn, ctx);
  prism_qn->add_option("--n", opt_n, "level n >= 1")->required();
  prism_qn->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");
  auto* prism_verify = prism->add_subcommand("verify", "verify the prism condition with certificate");
  add_common(prism_verify, ctx);
  prism_verify->add_option("--n", opt_n, "level n >= 1")->required();
  prism_verify->add_option("--f", ctx.f_path, "Frobenius series: default or a series JSON file");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run every property suite deterministically");
  selftest->add_option("--seed", ctx.seed, "RNG seed");
  selftest->add_option("--out", ctx.out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (field_make->parsed()) {
      auto s = make_field_spec_int(opt_p, parse_poly(opt_g), parse_poly(opt_E), opt_M);
      ojson j = to_json(*s);
      j["q"] = s->q;
      j["e"] = s->e;
      j["f"] = s->f;
      j["n"] = s->n;
      return emit(ctx, j);
    }
    if (lt_group->parsed()) {
      auto s = ctx.spec();
      return emit(ctx, to_json(build_group_law(ctx.frob(s, ctx.deg), ctx.deg)));
    }
    if (lt_endo->parsed()) {
      auto s = ctx.spec();
      return emit(ctx, to_json(build_endomorphism(ctx.frob(s, ctx.deg), opt_a, ctx.deg)));
    }
    if (lt_log->parsed()) {
      auto s = ctx.spec();
      return emit(ctx, to_json(logarithm(ctx.frob(s, ctx.deg), ctx.deg)));
    }
    if (lt_genus->parsed()) {
      auto s = ctx.spec();
      auto model = opt_model == "honda" ? honda_model(s, ctx.deg)
                                        : model_from_f(ctx.frob(s, ctx.deg), ctx.deg);
      auto v = genus_cp(model, opt_m);
      ojson j;
      j["m"] = opt_m;
      j["model"] = model.source;
      j["value"] = to_json(v);
      return emit(ctx, j);
    }
    if (witt_check->parsed()) {
      SpecPtr s = ctx.spec();
      ojson j;
      j["carrier"] = opt_carrier;
      std::mt19937_64 rng(ctx.seed);
      WittAxiomReport rep;
      ojson counterexample;
      if (opt_carrier == "series") {
        std::vector<std::array<WittPair<Series<OElement>>, 3>> triples;
        int D = std::min(ctx.deg, 16);
        auto rand_series = [&] {
          auto g = Series<OElement>::zeros(OElement::zero(s), D);
          for (int i = 1; i <= D; ++i) g.coeffs[i] = OElement::random(s, rng);
          return g;
        };
        for (long t = 0; t < opt_trials; ++t)
          triples.push_back({WittPair<Series<OElement>>{rand_series(), rand_series()},
                             WittPair<Series<OElement>>{rand_series(), rand_series()},
                             WittPair<Series<OElement>>{rand_series(), rand_series()}});
        rep = witt_ring_check(triples);
        if (rep.first_failure >= 0) {
          const auto& [a, bb, cc] = triples[(size_t)rep.first_failure];
          counterexample = {{"a", {{"a0", to_json(a.a0)}, {"a1", to_json(a.a1)}}},
                            {"b", {{"a0", to_json(bb.a0)}, {"a1", to_json(bb.a1)}}},
                            {"c", {{"a0", to_json(cc.a0)}, {"a1", to_json(cc.a1)}}}};
        }
      } else {
        SpecPtr cs = opt_carrier == "zmod"
                         ? make_field_spec_int(s->p, {0, 1}, {-(i64)s->p, 1}, s->M)
                         : s;
        std::vector<std::array<WittPair<OElement>, 3>> triples;
        for (long t = 0; t < opt_trials; ++t)
          triples.push_back({WittPair<OElement>{OElement::random(cs, rng), OElement::random(cs, rng)},
                             WittPair<OElement>{OElement::random(cs, rng), OElement::random(cs, rng)},
                             WittPair<OElement>{OElement::random(cs, rng), OElement::random(cs, rng)}});
        rep = witt_ring_check(triples);
        if (rep.first_failure >= 0) {
          const auto& [a, bb, cc] = triples[(size_t)rep.first_failure];
          counterexample = {{"a", to_json(a)}, {"b", to_json(bb)}, {"c", to_json(cc)}};
        }
      }
      j["trials"] = rep.triples;
      ojson ax;
      for (const auto& [n, ok] : rep.axioms) ax[n] = ok;
      j["axioms"] = std::move(ax);
      if (!counterexample.is_null()) j["counterexample"] = std::move(counterexample);
      j["pass"] = rep.pass();
      return emit(ctx, j, rep.pass());
    }
    if (delta_check->parsed()) {
      SpecPtr s = ctx.spec();
      auto fs = ctx.frob(s, ctx.deg);
      auto d = canonical_delta(fs.poly(ctx.deg));
      std::mt19937_64 rng(ctx.seed);
      std::vector<std::pair<Series<OElement>, Series<OElement>>> pairs;
      for (long t = 0; t < opt_trials; ++t) {
        auto mk = [&] {
          auto g = Series<OElement>::zeros(OElement::zero(s), ctx.deg);
          for (int i = 1; i <= ctx.deg; ++i) g.coeffs[i] = OElement::random(s, rng);
          return g;
        };
        pairs.emplace_back(mk(), mk());
      }
      auto res = section_check(d, pairs);
      ojson j;
      j["trials"] = (long)pairs.size();
      j["pass"] = res.pass;
      if (!res.pass) {
        j["failed_law"] = res.failed_law;
        j["counterexample_index"] = res.counterexample_index;
      }
      return emit(ctx, j, res.pass);
    }
    if (theta_poly_cmd->parsed()) {
      return emit(ctx, to_json(theta_poly(ctx.spec(), opt_k)));
    }
    if (theta_eval->parsed()) {
      SpecPtr s = ctx.spec();
      std::vector<OElement> pts;
      if (!opt_points.empty()) {
        for (const auto& pj : load_json_file(opt_points)) pts.push_back(oelement_from_json(s, pj));
      } else {
        std::mt19937_64 rng(ctx.seed);
        for (long t = 0; t < std::max<long>(opt_random, 1); ++t)
          pts.push_back(OElement::random(s, rng));
      }
      auto rep = theta_eval_check(s, opt_k, pts);
      ojson j;
      j["k"] = rep.k;
      j["checked"] = rep.checked;
      j["all_integral"] = rep.all_integral;
      if (rep.first_failure >= 0) {
        j["first_failure"] = rep.first_failure;
        j["counterexample"] = to_json(pts[(size_t)rep.first_failure]);
      }
      ojson vals = ojson::array();
      for (const auto& a : pts) {
        try {
          vals.push_back(to_json(theta_value(s, opt_k, a)));
        } catch (const Error&) {
          vals.push_back(nullptr);
        }
      }
      j["values"] = std::move(vals);
      return emit(ctx, j, rep.all_integral);
    }
    if (prism_qn->parsed()) {
      auto s = ctx.spec();
      return emit(ctx, to_json(compute_qn(ctx.frob(s, ctx.deg), opt_n, ctx.deg)));
    }
    if (prism_verify->parsed()) {
      auto s = ctx.spec();
      auto fs = ctx.frob(s, ctx.deg);
      auto rep = verify_prism_condition(fs, opt_n, ctx.deg);
      ojson j = to_json(rep);
      if (rep.certificate) j["certificate_detail"] = to_json(prism_certificate(fs, opt_n, ctx.deg));
      return emit(ctx, j, rep.pass());
    }
    if (selftest->parsed()) {
      auto rep = run_selftest(ctx.seed);
      return emit(ctx, rep, rep["pass"].get<bool>());
    }
  } catch (const Error& e) {
    ojson j;
    j["error"] = e.code_name();
    j["message"] = e.what();
    std::cout << j.dump(2) << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    ojson j;
    j["error"] = "internal";
    j["message"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 1;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
