#include "cudiv/records.hpp"

#include <fstream>
#include <sstream>

namespace cudiv {

using Json = nlohmann::json;

Json family_record(const SetFamily& f) {
  Json j;
  j["ground"] = f.ground;
  Json members = Json::array();
  for (const auto& m : f.members) members.push_back(Json{{"set", m.set}, {"mult", m.mult}});
  j["members"] = std::move(members);
  return j;
}

SetFamily parse_family(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("members"))
    throw std::invalid_argument("family record must carry 'ground' and 'members'");
  std::vector<SetFamily::Member> members;
  for (const auto& m : j.at("members"))
    members.push_back({m.at("set").get<std::vector<int>>(), m.at("mult").get<long long>()});
  return SetFamily::make(j.at("ground").get<int>(), std::move(members));
}

SetFamily load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  Json j;
  in >> j;
  return parse_family(j);
}

Json hall_certificate_record(const HallCertificate& c) {
  Json j;
  j["feasible"] = c.feasible;
  if (c.feasible) {
    Json t = Json::array();
    for (auto [member, element] : c.transversal) t.push_back(Json::array({member, element}));
    j["transversal"] = std::move(t);
  } else {
    j["violator"] = c.violator;
  }
  return j;
}

Json poly_record(const MultilinearPoly& p) {
  Json j;
  j["dim"] = p.dim();
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(Json{{"set", k}, {"coeff", c.str()}});
  j["terms"] = std::move(terms);
  return j;
}

Json expr_record(const ProjectionExpr& e) {
  Json j;
  j["dim"] = e.dim;
  Json coeffs = Json::array();
  for (const auto& [set, mult] : e.coeffs) coeffs.push_back(Json{{"set", set}, {"mult", mult}});
  j["coeffs"] = std::move(coeffs);
  return j;
}

ProjectionExpr parse_expr(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
    throw std::invalid_argument("expression record must carry 'dim' and 'coeffs'");
  std::vector<std::pair<std::vector<int>, long long>> entries;
  for (const auto& c : j.at("coeffs"))
    entries.push_back({c.at("set").get<std::vector<int>>(), c.at("mult").get<long long>()});
  return ProjectionExpr::make(j.at("dim").get<int>(), std::move(entries));
}

Json verdict_record(const CompareVerdict& v) {
  Json j;
  switch (v.result) {
    case CompareVerdict::Result::Yes: j["verdict"] = "yes"; break;
    case CompareVerdict::Result::No: j["verdict"] = "no"; break;
    case CompareVerdict::Result::Unknown: j["verdict"] = "unknown"; break;
  }
  if (!v.rule.empty()) j["rule"] = v.rule;
  j["rank_left"] = v.rank_left;
  j["rank_right"] = v.rank_right;
  j["margin_dim"] = v.margin_dim;
  if (v.rule == "R4") j["certificate"] = hall_certificate_record(v.obstruction);
  return j;
}

Json witness_record(const DivWitness& w) {
  Json j;
  j["elems"] = w.elems;
  if (!w.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : w.parts) {
      Json terms = Json::array();
      for (auto [c, y] : p.terms) terms.push_back(Json::array({c, y}));
      parts.push_back(Json{{"total", p.total}, {"terms", std::move(terms)}});
    }
    j["parts"] = std::move(parts);
  }
  return j;
}

DivWitness parse_witness(const Json& j) {
  DivWitness w;
  w.elems = j.at("elems").get<std::vector<int>>();
  if (j.contains("parts"))
    for (const auto& p : j.at("parts")) {
      CovPart part;
      part.total = p.at("total").get<int>();
      for (const auto& t : p.at("terms")) part.terms.push_back({t[0].get<long long>(), t[1].get<int>()});
      w.parts.push_back(std::move(part));
    }
  return w;
}

Json report_record(const DivisibilityReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["m"] = r.m;
  switch (r.value.tag) {
    case DivValue::Finite: j["value"] = r.value.n; break;
    case DivValue::Infinite: j["value"] = "inf"; break;
    case DivValue::AtLeastCutoff: j["value"] = ">=" + std::to_string(r.value.n); break;
  }
  j["witness"] = witness_record(r.witness);
  j["cutoff"] = r.cutoff;
  j["proof_tag"] = r.proof_tag;
  return j;
}

DivisibilityReport parse_report(const Json& j) {
  DivisibilityReport r;
  r.kind = div_kind_from_string(j.at("kind").get<std::string>());
  r.m = j.at("m").get<long long>();
  const auto& v = j.at("value");
  if (v.is_number()) {
    r.value = DivValue::finite(v.get<long long>());
  } else {
    std::string s = v.get<std::string>();
    if (s == "inf")
      r.value = DivValue::infinite();
    else if (s.rfind(">=", 0) == 0)
      r.value = DivValue::at_least(std::stoll(s.substr(2)));
    else
      throw std::invalid_argument("report record: bad value " + s);
  }
  r.witness = parse_witness(j.at("witness"));
  r.cutoff = j.at("cutoff").get<long long>();
  r.proof_tag = j.at("proof_tag").get<std::string>();
  return r;
}

Json upper_bound_record(const DivUpperBound& u) {
  Json j;
  j["n"] = u.n;
  j["witness_set"] = u.witness_set;
  j["witness_mult"] = u.witness_mult;
  j["rank"] = u.rank_u;
  j["margin_dim"] = u.margin_dim;
  return j;
}

Json lower_bound_record(const WeakDivLowerBound& l) {
  Json j;
  j["proved"] = l.proved;
  j["bound"] = l.bound;
  j["family"] = family_record(l.family);
  j["certificate"] = hall_certificate_record(l.certificate);
  return j;
}

Json interval_record(const CertifiedInterval& i) {
  Json j;
  j["quantity"] = Json{{"kind", i.quantity_kind}, {"m", i.m}};
  j["lower"] = i.lower;
  j["upper"] = i.upper.is_infinite() ? Json("inf") : Json(i.upper.value());
  j["lower_cert"] = lower_bound_record(i.lower_cert);
  j["upper_cert"] = upper_bound_record(i.upper_cert);
  j["provenance"] = i.provenance;
  return j;
}

Json construction_record(const ConstructionSpec& c) {
  Json j;
  j["variant"] = to_string(c.variant);
  j["N"] = c.N;
  j["n"] = c.n;
  if (c.variant == ConstructionSpec::Variant::InfTensor) j["k"] = c.k_index;
  j["J"] = c.J;
  j["d_n"] = c.d_n;
  j["q_n"] = expr_record(c.q);
  return j;
}

Json divm_lower_record(const DivmLowerBound& d) {
  Json j;
  switch (d.status) {
    case DivmLowerBound::Status::Proved: j["status"] = "proved"; break;
    case DivmLowerBound::Status::NotProved: j["status"] = "not-proved"; break;
    case DivmLowerBound::Status::InfiniteByRank: j["status"] = "infinite-by-rank"; break;
  }
  j["m"] = d.m;
  j["bound"] = d.bound;
  if (d.status != DivmLowerBound::Status::InfiniteByRank) {
    j["family"] = family_record(d.family);
    j["certificate"] = hall_certificate_record(d.certificate);
  }
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

Json inf_tensor_record(const InfTensorResult& r) {
  Json j;
  j["proved"] = r.proved;
  j["bound"] = r.bound;
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(construction_record(f));
  j["factors"] = std::move(factors);
  j["family"] = family_record(r.family);
  j["certificate"] = hall_certificate_record(r.certificate);
  return j;
}

Json omega_example_record(const OmegaExampleReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["halving_pass"] = r.halving_pass;
  j["obstruction_pass"] = r.obstruction_pass;
  j["halving_checked"] = r.halving_checked;
  j["obstruction_checked"] = r.obstruction_checked;
  return j;
}

Json axiom_report_record(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  Json j;
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass();
  return j;
}

Json div_star_record(const DivStarEstimate& e) {
  Json j;
  Json samples = Json::array();
  for (const auto& s : e.samples) {
    Json js;
    js["m"] = s.m;
    js["div_m"] = s.div_m.is_infinite() ? Json("inf") : Json(s.div_m.value());
    samples.push_back(std::move(js));
  }
  j["samples"] = std::move(samples);
  j["lower"] = e.lower.to_string();
  j["upper"] = e.upper.to_string();
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace cudiv
