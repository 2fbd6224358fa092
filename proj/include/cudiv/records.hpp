#pragma once

#include <string>

#include "json.hpp"

#include "cudiv/bundle.hpp"
#include "cudiv/divisibility.hpp"
#include "cudiv/poly.hpp"
#include "cudiv/setfamily.hpp"
#include "cudiv/villadsen.hpp"

namespace cudiv {

// Interchange records (deterministic: nlohmann objects serialize with
// sorted keys, and every list below is emitted in canonical order).

nlohmann::json family_record(const SetFamily& f);
SetFamily parse_family(const nlohmann::json& j);
SetFamily load_family_file(const std::string& path);

nlohmann::json hall_certificate_record(const HallCertificate& c);

nlohmann::json poly_record(const MultilinearPoly& p);

nlohmann::json expr_record(const ProjectionExpr& e);
ProjectionExpr parse_expr(const nlohmann::json& j);

nlohmann::json verdict_record(const CompareVerdict& v);

nlohmann::json witness_record(const DivWitness& w);
DivWitness parse_witness(const nlohmann::json& j);
nlohmann::json report_record(const DivisibilityReport& r);
DivisibilityReport parse_report(const nlohmann::json& j);

nlohmann::json upper_bound_record(const DivUpperBound& u);
nlohmann::json lower_bound_record(const WeakDivLowerBound& l);
nlohmann::json interval_record(const CertifiedInterval& i);
nlohmann::json construction_record(const ConstructionSpec& c);
nlohmann::json divm_lower_record(const DivmLowerBound& d);
nlohmann::json inf_tensor_record(const InfTensorResult& r);
nlohmann::json omega_example_record(const OmegaExampleReport& r);
nlohmann::json axiom_report_record(const AxiomReport& r);
nlohmann::json div_star_record(const DivStarEstimate& e);

}  // namespace cudiv
