#include "doctest.h"

#include <random>

#include "cudiv/config.hpp"
#include "cudiv/poly.hpp"
#include "cudiv/propsuite.hpp"
#include "cudiv/setfamily.hpp"

using namespace cudiv;

namespace {

SetFamily fam(int ground, std::vector<SetFamily::Member> ms) { return SetFamily::make(ground, std::move(ms)); }

}  // namespace

TEST_CASE("linear forms") {
  MultilinearPoly z1 = MultilinearPoly::linear_form({1}, 2);
  CHECK(z1.coeff({1}) == 1);
  CHECK(z1.term_count() == 1);
  MultilinearPoly unit = MultilinearPoly::linear_form({}, 3);
  CHECK(unit.coeff({}) == 1);
  MultilinearPoly z12 = MultilinearPoly::linear_form({1, 2}, 3);
  CHECK(z12.coeff({1}) == 1);
  CHECK(z12.coeff({2}) == 1);
  CHECK_THROWS_AS(MultilinearPoly::linear_form({4}, 3), std::invalid_argument);
}

TEST_CASE("square-zero products") {
  MultilinearPoly z1 = MultilinearPoly::linear_form({1}, 2);
  CHECK((z1 * z1).is_zero());
  MultilinearPoly s = MultilinearPoly::linear_form({1, 2}, 2);
  MultilinearPoly sq = s * s;
  CHECK(sq.coeff({1, 2}) == 2);
  CHECK(sq.term_count() == 1);
  MultilinearPoly z3 = MultilinearPoly::linear_form({3}, 3);
  MultilinearPoly s3 = MultilinearPoly::linear_form({1, 2}, 3);
  MultilinearPoly prod = s3 * z3;
  CHECK(prod.coeff({1, 3}) == 1);
  CHECK(prod.coeff({2, 3}) == 1);
  CHECK(prod.term_count() == 2);
}

TEST_CASE("product class of a family") {
  CHECK(euler_of_family(fam(2, {{{1}, 1}, {{2}, 1}})).coeff({1, 2}) == 1);
  CHECK(euler_of_family(fam(1, {{{1}, 2}})).is_zero());
  MultilinearPoly p = euler_of_family(fam(2, {{{1, 2}, 2}}));
  CHECK(p.coeff({1, 2}) == 2);
  // trivial members are unit factors
  MultilinearPoly q = euler_of_family(fam(2, {{{}, 7}, {{1}, 1}, {{2}, 1}}));
  CHECK(q.coeff({1, 2}) == 1);
  // degree beyond the dimension collapses to zero without expansion
  CHECK(euler_of_family(fam(3, {{{1, 2}, 9}})).is_zero());
}

TEST_CASE("transversal feasibility with certificates") {
  HallCertificate pigeon = hall_check(fam(1, {{{1}, 2}}));
  CHECK_FALSE(pigeon.feasible);
  CHECK(recheck_violator(fam(1, {{{1}, 2}}), pigeon));

  SetFamily exact = fam(2, {{{1, 2}, 2}});
  HallCertificate fit = hall_check(exact);
  CHECK(fit.feasible);
  CHECK(fit.transversal.size() == 2);
  CHECK(recheck_transversal(exact, fit));

  // disjoint blocks with sizes equal to demands
  SetFamily blocks = fam(6, {{{1, 2}, 2}, {{3, 4, 5, 6}, 4}});
  HallCertificate b = hall_check(blocks);
  CHECK(b.feasible);
  CHECK(b.transversal.size() == 6);
  CHECK(recheck_transversal(blocks, b));
  CHECK(sdr_bruteforce(blocks));  // independent oracle on the same instance

  // a member with an empty set can never be represented
  HallCertificate empty_set = hall_check(fam(3, {{{}, 1}, {{1}, 1}}));
  CHECK_FALSE(empty_set.feasible);
  CHECK(recheck_violator(fam(3, {{{}, 1}, {{1}, 1}}), empty_set));

  // the empty family is trivially feasible
  CHECK(hall_check(fam(0, {})).feasible);
}

TEST_CASE("huge multiplicities run without unary expansion") {
  SetFamily huge = fam(5, {{{1, 2, 3, 4, 5}, 1LL << 50}, {{1}, 1}});
  HallCertificate c = hall_check(huge);
  CHECK_FALSE(c.feasible);
  CHECK(recheck_violator(huge, c));
  CHECK_THROWS_AS(SetFamily::make(2, {{{1}, (1LL << 62) + 1}}), std::invalid_argument);
}

TEST_CASE("brute-force transversal oracle") {
  CHECK_FALSE(sdr_bruteforce(fam(1, {{{1}, 1}, {{1}, 1}})));
  CHECK(sdr_bruteforce(fam(2, {{{1}, 1}, {{1, 2}, 1}})));
  CHECK_THROWS_AS(sdr_bruteforce(fam(9, {{{1, 2, 3, 4, 5, 6, 7, 8, 9}, 9}})), GuardError);
}

TEST_CASE("nonvanishing product class equals transversal feasibility") {
  for (int d = 0; d <= 4; ++d)
    for_each_family(d, 4, [&](const SetFamily& f) {
      bool hall = hall_check(f).feasible;
      bool nonzero = !euler_of_family(f).is_zero();
      CAPTURE(f.ground);
      CHECK(hall == nonzero);
    });
}

TEST_CASE("hall agrees with the brute-force oracle on random families") {
  std::mt19937_64 rng(20260809);
  for (int iter = 0; iter < 1500; ++iter) {
    int d = 1 + static_cast<int>(rng() % 7);
    std::vector<SetFamily::Member> ms;
    long long total = 0;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count && total < 8; ++i) {
      std::vector<int> set;
      for (int e = 1; e <= d; ++e)
        if (rng() % 2 == 0) set.push_back(e);
      if (set.empty()) set.push_back(1 + static_cast<int>(rng() % d));
      long long mult = 1 + static_cast<long long>(rng() % 2);
      if (total + mult > 8) mult = 1;
      total += mult;
      ms.push_back({std::move(set), mult});
    }
    SetFamily f = SetFamily::make(d, std::move(ms));
    CHECK(hall_check(f).feasible == sdr_bruteforce(f));
  }
}

TEST_CASE("canonical member order and merging") {
  SetFamily f = fam(3, {{{2, 1}, 1}, {{3}, 2}, {{1, 2}, 4}, {{2}, 0}});
  REQUIRE(f.members.size() == 2);
  CHECK(f.members[0].set == std::vector<int>{3});
  CHECK(f.members[1].set == std::vector<int>{1, 2});
  CHECK(f.members[1].mult == 5);
  CHECK_THROWS_AS(fam(2, {{{1, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(fam(2, {{{5}, 1}}), std::invalid_argument);
}
