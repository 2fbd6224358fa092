#include "doctest.h"

#include "cudiv/extnat.hpp"
#include "cudiv/model.hpp"

using namespace cudiv;

TEST_CASE("extended naturals: arithmetic and order") {
  ExtNat inf = ExtNat::infinity();
  CHECK(ExtNat(2) + ExtNat(3) == ExtNat(5));
  CHECK(ExtNat(2) + inf == inf);
  CHECK(3 * ExtNat(4) == ExtNat(12));
  CHECK(0 * inf == ExtNat(0));
  CHECK(ExtNat(0) <= ExtNat(7));
  CHECK(ExtNat(7) < inf);
  CHECK(inf <= inf);
}

TEST_CASE("matrix divisibility formula") {
  CHECK(matrix_div(2, 4) == ExtNat(2));   // m divides k: the value is m
  CHECK(matrix_div(3, 2) == ExtNat::infinity());
  CHECK(matrix_div(3, 7) == ExtNat(4));
  CHECK(matrix_div(1, 9) == ExtNat(1));
  CHECK(matrix_div(5, 12) == ExtNat(6));
  CHECK(matrix_div(7, 12) == ExtNat(12));
  // m+1 whenever m does not divide k and m(m-1) <= k
  for (long long m = 2; m <= 5; ++m)
    for (long long k = m * (m - 1); k <= 30; ++k)
      if (k % m != 0 && k >= m * (m - 1)) CHECK(matrix_div(m, k) == ExtNat(m + 1));
}

TEST_CASE("extended-naturals table: truncated encoding is a valid model") {
  FiniteCuModel t = ext_nat_table(3, 4);  // {0,1,2,3,4,inf}
  CHECK(t.size == 6);
  CHECK_NOTHROW(validate_model(t));
  CHECK(t.add(2, 2) == 4);
  CHECK(t.add(2, 3) == *t.top);  // saturation
  CHECK(t.leq(0, 4));
  CHECK(t.unit == 3);
}

TEST_CASE("hand-built three-element table is a valid model") {
  FiniteCuModel m = small_top_model(2);
  CHECK_NOTHROW(validate_model(m));
  CHECK(check_axioms(m).all_pass());
}

TEST_CASE("non-commutative table is rejected with a witness") {
  FiniteCuModel m = small_top_model(1);
  m.add_tab[1 * 3 + 2] = 1;  // a+b != b+a now
  CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("not commutative"), ModelError);
}

TEST_CASE("order-incompatible table: load rejects, axiom report witnesses") {
  FiniteCuModel bad = non_monotone_model();
  CHECK_THROWS_WITH_AS(validate_model(bad), doctest::Contains("order incompatible"), ModelError);
  AxiomReport rep = check_axioms(bad);
  CHECK_FALSE(rep.all_pass());
  const AxiomCheck* oc = rep.find("order-compatible");
  REQUIRE(oc != nullptr);
  CHECK_FALSE(oc->pass);
  CHECK(axiom_witness_violates(bad, *oc));
}

TEST_CASE("axiom report on built-in models") {
  CHECK(check_axioms(ext_nat_table(5, 12)).all_pass());
  CHECK(check_axioms(rational_grid_model(Rat(1), 4, 8)).all_pass());
  AxiomReport rep = check_axioms(ext_nat_table(2, 6));
  const AxiomCheck* a1 = rep.find("A1");
  REQUIRE(a1 != nullptr);
  CHECK(a1->note.find("automatic in finite models") != std::string::npos);
}

TEST_CASE("infinite multiples") {
  FiniteCuModel e5 = ext_nat_table(5, 12);
  CHECK(infinite_multiple(e5, 1) == *e5.top);
  CHECK(infinite_multiple(e5, 0) == 0);
  FiniteCuModel s = small_top_model(2);
  CHECK(infinite_multiple(s, 1) == 2);  // a, 2a = top, then constant

  for (const auto& entry : builtin_zoo()) {
    const FiniteCuModel& m = entry.model;
    for (int x = 0; x < m.size; ++x) {
      int ix = infinite_multiple(m, x);
      CHECK(m.leq(x, ix));
      CHECK(infinite_multiple(m, ix) == ix);
    }
  }
}

TEST_CASE("element flags") {
  FiniteCuModel e5 = ext_nat_table(5, 12);
  ElementFlags top_flags = element_flags(e5, *e5.top);
  CHECK(top_flags.properly_infinite);
  CHECK(top_flags.full);
  ElementFlags two = element_flags(e5, 2);
  CHECK_FALSE(two.properly_infinite);  // 4 is not <= 2
  CHECK(two.full);                     // inf*2 = inf
  ElementFlags zero = element_flags(e5, 0);
  CHECK(zero.properly_infinite);
  CHECK_FALSE(zero.full);
  CHECK(zero.compact);
  // in the one-element model, 0 is the top and hence full
  CHECK(element_flags(one_element_model(), 0).full);
}

TEST_CASE("product model realizes the direct sum") {
  FiniteCuModel p = product_model(ext_nat_table(2, 3), ext_nat_table(3, 4));
  CHECK_NOTHROW(validate_model(p));
  REQUIRE(p.top.has_value());
  CHECK(p.unit == 2 * 6 + 3);  // (2,3)
  CHECK(check_axioms(p).all_pass());
}

TEST_CASE("model record round-trip, leq order independence") {
  FiniteCuModel m = small_top_model(1);
  std::string text = model_record(m);
  FiniteCuModel back = load_model(text);
  CHECK(back.size == m.size);
  CHECK(back.unit == m.unit);
  CHECK(back.add_tab == m.add_tab);
  CHECK(back.leq_tab == m.leq_tab);
  CHECK(model_record(back) == text);  // canonical serialization is stable

  // the same document with leq pairs reversed parses to the same model
  std::string swapped = text;
  auto pos = swapped.find("\"leq\":[[0,0]");
  REQUIRE(pos != std::string::npos);
  FiniteCuModel shuffled = load_model(
      R"({"name":"small-top-unit-a","size":3,"add":[[0,1,2],[1,2,2],[2,2,2]],)"
      R"("leq":[[2,2],[1,2],[1,1],[0,2],[0,1],[0,0]],"unit":1,"top":2,"labels":["0","a","b"]})");
  CHECK(shuffled.leq_tab == m.leq_tab);
}

TEST_CASE("truncated extended-naturals table loads from its record") {
  FiniteCuModel t = ext_nat_table(3, 4);  // {0,1,2,3,4,inf}
  FiniteCuModel back = load_model(model_record(t));
  CHECK(back.size == 6);
  CHECK(back.unit == 3);
  REQUIRE(back.top.has_value());
  CHECK(back.add(2, 3) == *back.top);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(load_model("not json"), ModelError);
  CHECK_THROWS_AS(load_model(R"({"name":"x"})"), ModelError);
  CHECK_THROWS_AS(load_model(R"({"name":"x","size":2,"add":[[0,1]],"leq":[],"unit":0,"top":null})"), ModelError);
}

TEST_CASE("zoo passes validation and axioms") {
  for (const auto& entry : builtin_zoo()) {
    CAPTURE(entry.name);
    CHECK_NOTHROW(validate_model(entry.model));
    CHECK(check_axioms(entry.model).all_pass());
  }
}
