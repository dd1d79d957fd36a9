#include "cmtheta/serialize.hpp"

namespace cmtheta {

Json to_json(const ThetaClass& c) {
  Json coeffs = Json::array();
  for (const Rat& v : c.coeffs()) coeffs.push_back(to_string(v));
  return Json{{"g", c.g()}, {"coeffs", coeffs}};
}

Json to_json(const BiThetaClass& c) {
  Json entries = Json::array();
  for (const auto& [key, value] : c.entries())
    entries.push_back(Json{{"a", key.first}, {"b", key.second}, {"coeff", to_string(value)}});
  return Json{{"g", c.g()}, {"entries", entries}};
}

Json to_json(const ThetaSeries& s) {
  Json coeffs = Json::array();
  for (const ThetaClass& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"g", s.g()}, {"K", s.order()}, {"coeffs", coeffs}};
}

Json to_json(const PrymLocus& locus) {
  if (locus.is_eprime()) {
    const auto& e = locus.eprime_data();
    return Json{{"kind", "eprime"}, {"g", e.g}, {"t", e.t}, {"k", e.k}};
  }
  const auto& s = locus.scycle_data();
  return Json{{"kind", "scycle"}, {"g", locus.g()}, {"partition", s.partition}, {"k", s.k}};
}

Json to_json(const ChiVerdict& chi) {
  Json j{{"tag", to_string(chi.tag)}};
  switch (chi.tag) {
    case ChiTag::Exact: j["value"] = to_string(chi.value); break;
    case ChiTag::GreaterThan: j["bound"] = to_string(chi.value); break;
    case ChiTag::ExternalReference: break;
  }
  if (!chi.note.empty()) j["note"] = chi.note;
  return j;
}

Json to_json(const CriterionVerdict& verdict) {
  Json j{{"verdict", to_string(verdict.tag)}, {"reason", verdict.reason}, {"equations", verdict.equations}};
  if (verdict.reconstruction) {
    const Reconstruction& r = *verdict.reconstruction;
    j["reconstruction"] =
        Json{{"c0", to_string(r.c0)}, {"c1", to_string(r.c1)}, {"c2", to_string(r.c2)}};
  } else {
    j["reconstruction"] = nullptr;
  }
  return j;
}

Json to_json(const ExclusionReport& report) {
  Json loci = Json::array();
  for (const PrymLocus& locus : report.candidate_loci) loci.push_back(to_json(locus));
  Json pairings = Json::array();
  for (const auto& [partition, value] : report.pairing_values)
    pairings.push_back(Json{{"partition", partition}, {"value", to_string(value)}});
  Json verdicts = Json::array();
  for (const PartitionVerdict& v : report.verdicts)
    verdicts.push_back(Json{{"partition", v.partition}, {"divisible", v.divisible}, {"residue", v.residue}});
  return Json{{"dim_omega", to_string(report.dim_omega)},
              {"candidate_loci", loci},
              {"loci_source", report.loci_source},
              {"lhs_multiplier", to_string(report.lhs_multiplier)},
              {"rhs_multiplier", to_string(report.rhs_multiplier)},
              {"pairing_values", pairings},
              {"pairing_source", report.pairing_source},
              {"verdicts", verdicts},
              {"excluded", report.excluded()}};
}

ThetaClass theta_class_from_json(const Json& j) {
  const int g = j.at("g").get<int>();
  std::vector<Rat> coeffs;
  for (const Json& v : j.at("coeffs")) coeffs.push_back(parse_rational(v.get<std::string>()));
  return ThetaClass(g, std::move(coeffs));
}

BiThetaClass bitheta_class_from_json(const Json& j) {
  BiThetaClass c(j.at("g").get<int>());
  for (const Json& entry : j.at("entries"))
    c.set_coefficient(entry.at("a").get<int>(), entry.at("b").get<int>(),
                      parse_rational(entry.at("coeff").get<std::string>()));
  return c;
}

ThetaSeries theta_series_from_json(const Json& j) {
  const int g = j.at("g").get<int>();
  const int K = j.at("K").get<int>();
  std::vector<ThetaClass> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(theta_class_from_json(c));
  return ThetaSeries(g, K, std::move(coeffs));
}

} // namespace cmtheta
