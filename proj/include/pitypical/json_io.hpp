#pragma once

#include <json.hpp>

#include "pitypical/prism.hpp"
#include "pitypical/theta.hpp"

namespace pityp {

using ojson = nlohmann::ordered_json;

ojson to_json(const LocalFieldSpec& s);
ojson to_json(const OElement& a);
ojson to_json(const LaurentScalar& a);
ojson to_json(const Series<OElement>& g);
ojson to_json(const Series<LaurentScalar>& g);
ojson to_json(const Bivariate<OElement>& F);
ojson to_json(const WittPair<OElement>& w);
ojson to_json(const PrismCertificate& c);
ojson to_json(const PrismConditionReport& r);
ojson to_json(const ThetaPolynomial& t);

SpecPtr spec_from_json(const ojson& j);
OElement oelement_from_json(const SpecPtr& s, const ojson& j);
LaurentScalar laurent_from_json(const SpecPtr& s, const ojson& j);
Series<OElement> series_from_json(const SpecPtr& s, const ojson& j);
Series<LaurentScalar> laurent_series_from_json(const SpecPtr& s, const ojson& j);
Bivariate<OElement> bivariate_from_json(const SpecPtr& s, const ojson& j);
WittPair<OElement> witt_from_json(const SpecPtr& s, const ojson& j);

ojson load_json_file(const std::string& path);

}  // namespace pityp
