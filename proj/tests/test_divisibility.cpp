#include "doctest.h"

#include "cudiv/divisibility.hpp"
#include "cudiv/propsuite.hpp"

using namespace cudiv;

namespace {

// independent integer-arithmetic oracle for the matrix models: least n such
// that an (m,n) witness exists in {0,..,k,inf}, by direct search
long long oracle_extnat_least_div(long long k, long long m) {
  for (long long n = 1;; ++n)
    for (long long x = 0; x <= k; ++x)
      if (m * x <= k && k <= n * x) return n;
}

}  // namespace

TEST_CASE("check: the three defining conditions on matrix models") {
  FiniteCuModel e4 = ext_nat_table(4, 10);
  CheckResult r = check(e4, e4.unit, DivKind::Div, 2, 2);
  CHECK(r.ok);
  CHECK(r.witness.elems == std::vector<int>{2});
  CHECK(recheck_witness(e4, e4.unit, DivKind::Div, 2, 2, r.witness));

  FiniteCuModel e3 = ext_nat_table(3, 8);
  CHECK_FALSE(check(e3, e3.unit, DivKind::Div, 2, 2).ok);  // 2x <= 3 forces x <= 1, 3 <= 2 fails

  // identity witness for weak divisibility at m = n = 1
  for (const auto& entry : builtin_zoo()) {
    CheckResult w = check(entry.model, entry.model.unit, DivKind::WeakDiv, 1, 1);
    CHECK(w.ok);
    CHECK(recheck_witness(entry.model, entry.model.unit, DivKind::WeakDiv, 1, 1, w.witness));
  }
}

TEST_CASE("least: matrix models against the closed form and the oracle") {
  FiniteCuModel e7 = ext_nat_table(7, 16);
  DivisibilityReport r = least(e7, e7.unit, DivKind::Div, 3);
  CHECK(r.value == DivValue::finite(4));
  CHECK(oracle_extnat_least_div(7, 3) == 4);
  CHECK(recheck_witness(e7, e7.unit, DivKind::Div, 3, 4, r.witness));

  FiniteCuModel e2 = ext_nat_table(2, 6);
  DivisibilityReport inf_rep = least(e2, e2.unit, DivKind::Div, 3);
  CHECK(inf_rep.value == DivValue::infinite());
  CHECK(inf_rep.proof_tag == "rank obstruction: m > rank");

  // the formula agrees with honest search for every kind
  for (long long k = 2; k <= 12; ++k) {
    FiniteCuModel table = ext_nat_table(k, 2 * k + 2);
    for (long long m = 2; m <= k; ++m) {
      CHECK(least(table, table.unit, DivKind::Div, m).value.as_extnat() == matrix_div(m, k));
      CHECK(ExtNat(oracle_extnat_least_div(k, m)) == matrix_div(m, k));
    }
  }
}

TEST_CASE("least: covering number") {
  FiniteCuModel e5 = ext_nat_table(5, 12);
  DivisibilityReport r = least(e5, e5.unit, DivKind::Cov, 2);
  CHECK(r.value == DivValue::finite(1));
  REQUIRE(r.witness.elems.size() == 1);
  CHECK(r.witness.elems[0] == 5);  // 5 = 2*1 + 3*1
  REQUIRE(r.witness.parts.size() == 1);
  CHECK(recheck_witness(e5, e5.unit, DivKind::Cov, 2, 1, r.witness));
  for (auto [c, y] : r.witness.parts[0].terms) {
    CHECK(c >= 2);
    CHECK(c < 4);
  }
}

TEST_CASE("least: degenerate one-element model") {
  FiniteCuModel one = one_element_model();
  for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv, DivKind::Cov}) {
    DivisibilityReport r = least(one, 0, kind, 3);
    CHECK(r.value == DivValue::finite(1));
  }
}

TEST_CASE("infinite verdicts carry proof tags, never guesses") {
  FiniteCuModel s = small_top_model(1);  // unit a: no witness for m >= 2
  for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv, DivKind::Cov}) {
    DivisibilityReport r = least(s, s.unit, kind, 2);
    CHECK(r.value == DivValue::infinite());
    CHECK(r.proof_tag == "exhausted finite carrier");
  }
}

TEST_CASE("cutoff binds without fabricating infinity") {
  FiniteCuModel e12 = ext_nat_table(12, 26);
  DivisibilityReport r = least(e12, e12.unit, DivKind::Div, 11, 2);
  CHECK(r.value == DivValue::at_least(2));
  CHECK(r.proof_tag.empty());
}

TEST_CASE("combinators") {
  auto rep = [](long long m, DivValue v) {
    DivisibilityReport r;
    r.kind = DivKind::Div;
    r.m = m;
    r.value = v;
    r.cutoff = kDefaultCutoff;
    return r;
  };
  CHECK(combine_product({rep(2, DivValue::finite(3)), rep(2, DivValue::finite(4)), rep(2, DivValue::finite(4))})
            .value == DivValue::finite(4));
  CHECK(combine_product({rep(2, DivValue::finite(2)), rep(2, DivValue::infinite())}).value ==
        DivValue::infinite());
  CHECK(combine_chain({rep(2, DivValue::finite(5)), rep(2, DivValue::finite(4)), rep(2, DivValue::finite(4)),
                       rep(2, DivValue::finite(3))})
            .value == DivValue::finite(3));
  CHECK(combine_chain({rep(2, DivValue::infinite()), rep(2, DivValue::infinite())}).value == DivValue::infinite());
  CHECK(combine_chain({rep(2, DivValue::finite(4)), rep(2, DivValue::finite(4))}).value == DivValue::finite(4));
  CHECK_THROWS_AS(combine_product({rep(2, DivValue::finite(1)), rep(3, DivValue::finite(1))}),
                  std::invalid_argument);

  // cross-check against brute force on an explicit product table
  FiniteCuModel a = ext_nat_table(4, 5), b = ext_nat_table(6, 7);
  FiniteCuModel p = product_model(a, b);
  DivisibilityReport ra = least(a, a.unit, DivKind::Div, 2);
  DivisibilityReport rb = least(b, b.unit, DivKind::Div, 2);
  DivisibilityReport rp = least(p, p.unit, DivKind::Div, 2);
  CHECK(combine_product({ra, rb}).value == rp.value);
  CHECK(rp.value == DivValue::finite(2));
}

TEST_CASE("omega variants in the finite reduction") {
  FiniteCuModel e5 = ext_nat_table(5, 12);
  CHECK(omega_check(e5, *e5.top, DivKind::Decomp, 1));       // x = top
  CHECK_FALSE(omega_check(e5, e5.unit, DivKind::Decomp, 5)); // inf*x <= 5 forces x = 0
  FiniteCuModel s = small_top_model(2);
  CHECK(omega_check(s, 2, DivKind::Decomp, 2));  // x = a: inf*a = b <= b <= 2a
  CHECK(omega_check(e5, *e5.top, DivKind::WeakDiv, 1));
  CHECK(omega_check(s, 2, DivKind::WeakDiv, 1));            // x = b: properly infinite
  CHECK_FALSE(omega_check(e5, e5.unit, DivKind::WeakDiv, 5)); // only 0 has a bounded infinite multiple
  CHECK_THROWS_AS(omega_check(e5, e5.unit, DivKind::Div, 2), std::invalid_argument);
}

TEST_CASE("corona-factorization reductions hold on the zoo") {
  CHECK_THROWS_AS(cfp4s_check(FiniteCuModel{.name = "topless", .size = 1, .add_tab = {0}, .leq_tab = {1}, .unit = 0}),
                  ModelError);
  for (const auto& entry : builtin_zoo()) {
    if (!entry.model.top) continue;
    CAPTURE(entry.name);
    Cfp4sReport rep = cfp4s_check(entry.model);
    CHECK(rep.sum_condition_pass);
    CHECK(rep.pi_condition_pass);
  }
}

TEST_CASE("rational cone: least divisibility is m, estimate 1") {
  for (long long m = 2; m <= 8; ++m) CHECK(rational_cone_least_div(Rat(1), m, 8) == m);
  CHECK(rational_cone_least_div(Rat(3, 2), 4, 8) == 4);

  DivStarEstimate cone = div_star_estimate(ModelFamily::rational_cone(Rat(1)), 8);
  REQUIRE(cone.samples.size() == 7);
  for (const auto& s : cone.samples) CHECK(s.div_m == ExtNat(s.m));
  CHECK(cone.upper == ExtRat(Rat(1)));
  CHECK(cone.lower == ExtRat(Rat(7, 8)));

  DivStarEstimate fin = div_star_estimate(ModelFamily::ext_nat(6), 8);
  CHECK(fin.upper.infinite);
  CHECK(fin.lower.infinite);
  CHECK(fin.samples[5].div_m.is_infinite());  // m = 7 > 6

  DivStarEstimate pi = div_star_estimate(ModelFamily::rational_cone_infinite_unit(), 8);
  CHECK(pi.upper == ExtRat(Rat(0)));
  for (const auto& s : pi.samples) CHECK(s.div_m == ExtNat(1));
}

TEST_CASE("tensor pairing on matrix scales") {
  CHECK(ext_tensor_pair(ExtNat(2), 3, ExtNat(4), 5) == ExtNat(8));
  CHECK(ext_tensor_pair(ExtNat::infinity(), 3, ExtNat(1), 5) == ExtNat::infinity());
  // duality instance: with a (2,3)-divisible right factor, 3x <= 2y forces
  // the paired classes to compare
  for (long long x = 0; x <= 20; ++x)
    for (long long y = 0; y <= 20; ++y)
      if (3 * x <= 2 * y) CHECK(ext_tensor_pair(ExtNat(x), 20, ExtNat(6), 6) <= ext_tensor_pair(ExtNat(y), 20, ExtNat(6), 6));
}

TEST_CASE("witness tuple for the two-summand divisibility bound") {
  FiniteCuModel e6 = ext_nat_table(6, 14);
  // u = 2, v = 4: Div_2(6) = 2
  DivisibilityReport r = least(e6, e6.add(2, 4), DivKind::Div, 2);
  REQUIRE(r.value == DivValue::finite(2));
  auto witness = two_div_witness(e6, 2, 4, r.value.n);
  REQUIRE(witness.has_value());
  // re-check the defining inequalities
  int sum2x = 0;
  for (int x : *witness) {
    CHECK(e6.leq(e6.mul(2, x), 4));
    sum2x = e6.add(sum2x, e6.mul(2, x));
  }
  int rhs = e6.add(4, e6.add(e6.mul(2 * r.value.n + 1, 2), sum2x));
  CHECK(e6.leq(e6.mul(2, 4), rhs));
}

TEST_CASE("report witnesses re-check across the zoo") {
  for (const auto& entry : builtin_zoo()) {
    const FiniteCuModel& m = entry.model;
    if (m.size > 60) continue;
    for (long long mm : {2, 3})
      for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv, DivKind::Cov}) {
        DivisibilityReport r = least(m, m.unit, kind, mm);
        if (r.value.is_finite()) {
          CAPTURE(entry.name);
          CAPTURE(to_string(kind));
          CHECK(recheck_witness(m, m.unit, kind, mm, r.value.n, r.witness));
        }
      }
  }
}
