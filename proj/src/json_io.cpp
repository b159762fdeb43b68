#include "pitypical/json_io.hpp"

#include <fstream>

namespace pityp {

ojson to_json(const LocalFieldSpec& s) {
  ojson j;
  j["p"] = s.p;
  j["g"] = s.g_int;
  j["E"] = s.E_int;
  j["M"] = s.M;
  return j;
}

ojson to_json(const OElement& a) {
  const auto& s = *a.spec;
  ojson rows = ojson::array();
  for (int i = 0; i < s.e; ++i) {
    ojson row = ojson::array();
    for (int jx = 0; jx < s.f; ++jx) row.push_back(a.c[(size_t)i * s.f + jx]);
    rows.push_back(std::move(row));
  }
  ojson j;
  j["coeffs"] = std::move(rows);
  j["valid_prec"] = a.vp;
  return j;
}

ojson to_json(const LaurentScalar& a) {
  ojson j;
  j["num"] = to_json(a.num);
  j["denom_exp"] = a.denom_exp;
  return j;
}

namespace {
template <typename R>
ojson series_json(const Series<R>& g) {
  ojson j;
  j["var"] = g.var;
  j["D"] = g.deg();
  ojson cs = ojson::array();
  for (const auto& c : g.coeffs) cs.push_back(to_json(c));
  j["coeffs"] = std::move(cs);
  return j;
}
}  // namespace

ojson to_json(const Series<OElement>& g) { return series_json(g); }
ojson to_json(const Series<LaurentScalar>& g) { return series_json(g); }

ojson to_json(const Bivariate<OElement>& F) {
  ojson j;
  j["varx"] = F.varx;
  j["vary"] = F.vary;
  j["D"] = F.deg();
  ojson rows = ojson::array();
  for (const auto& row : F.c) {
    ojson r = ojson::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  j["coeffs"] = std::move(rows);
  return j;
}

ojson to_json(const WittPair<OElement>& w) {
  ojson j;
  j["a0"] = to_json(w.a0);
  j["a1"] = to_json(w.a1);
  return j;
}

ojson to_json(const PrismCertificate& c) {
  ojson j;
  j["n"] = c.n;
  j["q_n"] = to_json(c.qn);
  j["q_n1"] = to_json(c.qn1);
  j["cofactor"] = to_json(c.cofactor);
  j["checked_mod_degree"] = c.checked_mod_degree;
  j["pass"] = c.pass;
  return j;
}

ojson to_json(const PrismConditionReport& r) {
  ojson j;
  j["n"] = r.n;
  j["D"] = r.D;
  j["phi_matches_next"] = r.phi_matches_next;
  j["certificate"] = r.certificate;
  j["origin_distinguished"] = r.origin_distinguished;
  j["delta_qn_mod_pi_T"] = r.delta_qn_residue;
  j["pass"] = r.pass();
  return j;
}

ojson to_json(const ThetaPolynomial& t) {
  ojson j;
  j["k"] = t.k;
  j["poly"] = to_json(t.poly);
  return j;
}

namespace {
[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::ParseError, "malformed JSON: " + what);
}
const ojson& need(const ojson& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}
}  // namespace

SpecPtr spec_from_json(const ojson& j) {
  u64 p = need(j, "p").get<u64>();
  auto g = need(j, "g").get<std::vector<i64>>();
  auto E = need(j, "E").get<std::vector<std::vector<i64>>>();
  int M = need(j, "M").get<int>();
  return make_field_spec(p, std::move(g), std::move(E), M);
}

OElement oelement_from_json(const SpecPtr& s, const ojson& j) {
  auto rows = need(j, "coeffs").get<std::vector<std::vector<u64>>>();
  if ((int)rows.size() != s->e) bad("coeffs has wrong row count");
  std::vector<u64> c;
  c.reserve((size_t)s->e * s->f);
  for (const auto& row : rows) {
    if ((int)row.size() != s->f) bad("coeffs row has wrong length");
    c.insert(c.end(), row.begin(), row.end());
  }
  int vp = j.contains("valid_prec") ? j["valid_prec"].get<int>() : s->M;
  return OElement(s, std::move(c), vp);
}

LaurentScalar laurent_from_json(const SpecPtr& s, const ojson& j) {
  return LaurentScalar(oelement_from_json(s, need(j, "num")), need(j, "denom_exp").get<long>());
}

Series<OElement> series_from_json(const SpecPtr& s, const ojson& j) {
  const auto& cs = need(j, "coeffs");
  if (!cs.is_array() || cs.empty()) bad("series coeffs must be a nonempty array");
  std::vector<OElement> coeffs;
  coeffs.reserve(cs.size());
  for (const auto& c : cs) coeffs.push_back(oelement_from_json(s, c));
  std::string var = j.contains("var") ? j["var"].get<std::string>() : "T";
  return Series<OElement>(std::move(coeffs), var);
}

Series<LaurentScalar> laurent_series_from_json(const SpecPtr& s, const ojson& j) {
  const auto& cs = need(j, "coeffs");
  if (!cs.is_array() || cs.empty()) bad("series coeffs must be a nonempty array");
  std::vector<LaurentScalar> coeffs;
  coeffs.reserve(cs.size());
  for (const auto& c : cs) coeffs.push_back(laurent_from_json(s, c));
  std::string var = j.contains("var") ? j["var"].get<std::string>() : "T";
  return Series<LaurentScalar>(std::move(coeffs), var);
}

Bivariate<OElement> bivariate_from_json(const SpecPtr& s, const ojson& j) {
  const auto& rows = need(j, "coeffs");
  if (!rows.is_array() || rows.empty()) bad("bivariate coeffs must be a nonempty array");
  int D = (int)rows.size() - 1;
  auto F = Bivariate<OElement>::zeros(OElement::zero(s), D);
  for (int i = 0; i <= D; ++i) {
    const auto& row = rows[(size_t)i];
    if ((int)row.size() != D - i + 1) bad("bivariate row has wrong triangular length");
    for (int jx = 0; i + jx <= D; ++jx) F.c[i][jx] = oelement_from_json(s, row[(size_t)jx]);
  }
  if (j.contains("varx")) F.varx = j["varx"].get<std::string>();
  if (j.contains("vary")) F.vary = j["vary"].get<std::string>();
  return F;
}

WittPair<OElement> witt_from_json(const SpecPtr& s, const ojson& j) {
  return {oelement_from_json(s, need(j, "a0")), oelement_from_json(s, need(j, "a1"))};
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace pityp
