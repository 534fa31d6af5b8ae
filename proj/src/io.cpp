#include "circspec/io.hpp"

namespace circspec::io {

Json graph_json(const ConnectionSet& cs) {
  Json j;
  j["n"] = cs.order();
  j["set"] = cs.elements();
  return j;
}

ConnectionSet graph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto elements = j.at("set").get<std::vector<int>>();
  auto cs = ConnectionSet::make(n, elements);
  if (cs.elements() != elements) {
    throw DomainError("\"set\" must be symmetric and sorted ascending without duplicates");
  }
  return cs;
}

Json spectrum_json(const CirculantGraph& g, const spectra::Spectrum& s, const spectra::PowerSums& sums,
                   const Inertia& in) {
  Json j = graph_json(g.connection_set());
  j["eigenvalues"] = s.values;
  Json ps = Json::array();
  for (const auto& p : sums.sums()) ps.push_back(p.get_str());
  j["power_sums"] = std::move(ps);
  j["inertia"] = {in.positive, in.negative, in.zero};
  return j;
}

Json verdict_json(const PairVerdict& v) {
  Json j;
  j["class"] = verdict_class(v);
  j["isomorphic"] = to_string(v.isomorphic);
  j["multiplier"] = v.multiplier ? Json(*v.multiplier) : Json(nullptr);
  j["cospectral"] = v.cospectral;
  j["sc"] = v.singularly_cospectral;
  j["equal_nonzero_abs_spectrum"] = v.equal_nonzero_abs_spectrum;
  j["ncsc"] = v.ncsc();
  j["same_inertia"] = v.same_inertia;
  j["inertia1"] = {v.inertia1.positive, v.inertia1.negative, v.inertia1.zero};
  j["inertia2"] = {v.inertia2.positive, v.inertia2.negative, v.inertia2.zero};
  return j;
}

Json search_record_json(const cospectral::SearchRecord& r) {
  Json j;
  j["n"] = r.set1.order();
  j["set1"] = r.set1.elements();
  j["set2"] = r.set2.elements();
  j["cospectral"] = r.verdict.cospectral;
  j["sc"] = r.verdict.singularly_cospectral;
  j["same_inertia"] = r.verdict.same_inertia;
  j["isomorphic"] = to_string(r.verdict.isomorphic);
  return j;
}

Json search_summary_json(const cospectral::SearchSummary& s) {
  Json j;
  j["summary"] = true;
  j["n"] = s.n;
  j["max_s"] = s.max_s;
  j["sets"] = s.sets;
  j["pairs_total"] = s.pairs_total;
  j["pairs_examined"] = s.pairs_examined;
  j["ncsc_found"] = s.ncsc_found;
  j["truncated"] = s.truncated;
  return j;
}

std::string set_string(const ConnectionSet& cs) { return Json(cs.elements()).dump(); }

std::string csv_header_search() { return "n,set1,set2,cospectral,sc,same_inertia,isomorphic"; }

std::string search_record_csv(const cospectral::SearchRecord& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  return std::to_string(r.set1.order()) + ",\"" + set_string(r.set1) + "\",\"" + set_string(r.set2) + "\"," +
         flag(r.verdict.cospectral) + "," + flag(r.verdict.singularly_cospectral) + "," +
         flag(r.verdict.same_inertia) + "," + to_string(r.verdict.isomorphic);
}

Json verify_report_json(const prime::VerifyReport& r) {
  Json j;
  j["p"] = r.p;
  j["num_sets"] = r.num_sets;
  j["num_signature_groups"] = r.num_signature_groups;
  j["pairs_checked"] = r.pairs_checked;
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({v.set1.elements(), v.set2.elements()});
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace circspec::io
