#include "doctest.h"

#include "cudiv/records.hpp"

using namespace cudiv;

TEST_CASE("family records round-trip and re-verify") {
  SetFamily f = SetFamily::make(4, {{{1, 2}, 2}, {{3}, 1}});
  SetFamily back = parse_family(family_record(f));
  CHECK(back.ground == f.ground);
  REQUIRE(back.members.size() == f.members.size());
  HallCertificate cert = hall_check(back);
  CHECK(cert.feasible == hall_check(f).feasible);
  CHECK(family_record(back) == family_record(f));
}

TEST_CASE("expression records round-trip") {
  ProjectionExpr e = ProjectionExpr::make(3, {{{}, 1}, {{1, 3}, 2}});
  ProjectionExpr back = parse_expr(expr_record(e));
  CHECK(back.dim == e.dim);
  CHECK(back.coeffs == e.coeffs);
}

TEST_CASE("divisibility reports round-trip and the witness re-verifies") {
  FiniteCuModel e7 = ext_nat_table(7, 16);
  for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv, DivKind::Cov}) {
    DivisibilityReport r = least(e7, e7.unit, kind, 3);
    DivisibilityReport back = parse_report(report_record(r));
    CHECK(back.kind == r.kind);
    CHECK(back.m == r.m);
    CHECK(back.value == r.value);
    CHECK(back.cutoff == r.cutoff);
    REQUIRE(back.value.is_finite());
    CHECK(recheck_witness(e7, e7.unit, kind, back.m, back.value.n, back.witness));
  }
  // infinite verdicts keep their proof tag through the record
  FiniteCuModel e2 = ext_nat_table(2, 6);
  DivisibilityReport inf_rep = least(e2, e2.unit, DivKind::Div, 3);
  DivisibilityReport back = parse_report(report_record(inf_rep));
  CHECK(back.value == DivValue::infinite());
  CHECK(back.proof_tag == inf_rep.proof_tag);
}

TEST_CASE("interval and certificate records are deterministic") {
  CertifiedInterval iv = verify_thm_simple(2, 2);
  std::string once = interval_record(iv).dump();
  std::string twice = interval_record(verify_thm_simple(2, 2)).dump();
  CHECK(once == twice);

  InfTensorResult r = verify_thm_inf_tensor(1, 2, 1);
  CHECK(inf_tensor_record(r).dump() == inf_tensor_record(verify_thm_inf_tensor(1, 2, 1)).dump());
}

TEST_CASE("polynomial records carry exact big coefficients") {
  // (z1+...+z6)^6 has 6! = 720 on the full monomial
  SetFamily f = SetFamily::make(6, {{{1, 2, 3, 4, 5, 6}, 6}});
  MultilinearPoly p = euler_of_family(f);
  nlohmann::json j = poly_record(p);
  bool found = false;
  for (const auto& term : j.at("terms"))
    if (term.at("set").get<std::vector<int>>() == std::vector<int>{1, 2, 3, 4, 5, 6}) {
      CHECK(term.at("coeff").get<std::string>() == "720");
      found = true;
    }
  CHECK(found);
}
