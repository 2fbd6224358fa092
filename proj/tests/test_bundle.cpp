#include "doctest.h"

#include "cudiv/bundle.hpp"
#include "cudiv/poly.hpp"
#include "cudiv/villadsen.hpp"

using namespace cudiv;

namespace {

ProjectionExpr expr(int dim, std::vector<std::pair<std::vector<int>, long long>> entries) {
  return ProjectionExpr::make(dim, std::move(entries));
}

}  // namespace

TEST_CASE("comparison rules on the documented instances") {
  // summand dominance
  CompareVerdict r1 = compare(expr(2, {{{1}, 1}}), expr(2, {{{1}, 1}, {{2}, 1}}));
  CHECK(r1.yes());
  CHECK(r1.rule == "R1");

  // trivial class against a transversal-feasible sum
  CompareVerdict r4 = compare(expr(2, {{{}, 1}}), expr(2, {{{1}, 1}, {{2}, 1}}));
  CHECK(r4.no());
  CHECK(r4.rule == "R4");
  CHECK(r4.obstruction.feasible);
  CHECK(r4.obstruction.transversal.size() == 2);

  // stability margin: rank 7 against rank 4 over 3 used coordinates
  CompareVerdict r2 = compare(expr(3, {{{}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}}), expr(3, {{{1}, 7}}));
  CHECK(r2.yes());
  CHECK(r2.rule == "R2");
  CHECK(r2.margin_dim == 3);

  // rank drop
  CompareVerdict r3 = compare(expr(2, {{{1}, 3}}), expr(2, {{{2}, 2}}));
  CHECK(r3.no());
  CHECK(r3.rule == "R3");

  // neither rule applies
  CompareVerdict unk = compare(expr(2, {{{1}, 2}}), expr(2, {{{2}, 2}}));
  CHECK(unk.result == CompareVerdict::Result::Unknown);

  CHECK_THROWS_AS(compare(expr(1, {}), expr(2, {})), std::invalid_argument);
}

TEST_CASE("rule evaluation never conflicts on small instances") {
  // exhaustive d <= 2 here; the full d <= 3 sweep runs in the property suite
  for (int d = 1; d <= 2; ++d) {
    std::vector<std::vector<int>> sets = {{}};
    for (int mask = 1; mask < (1 << d); ++mask) {
      std::vector<int> s;
      for (int i = 1; i <= d; ++i)
        if (mask & (1 << (i - 1))) s.push_back(i);
      sets.push_back(std::move(s));
    }
    std::vector<ProjectionExpr> exprs;
    std::function<void(size_t, long long, std::vector<std::pair<std::vector<int>, long long>>&)> rec =
        [&](size_t idx, long long left, std::vector<std::pair<std::vector<int>, long long>>& cur) {
          exprs.push_back(ProjectionExpr::make(d, cur));
          if (left == 0) return;
          for (size_t i = idx; i < sets.size(); ++i)
            for (long long c = 1; c <= left; ++c) {
              cur.push_back({sets[i], c});
              rec(i + 1, left - c, cur);
              cur.pop_back();
            }
        };
    std::vector<std::pair<std::vector<int>, long long>> cur;
    rec(0, 3, cur);
    for (const auto& xi : exprs)
      for (const auto& eta : exprs) {
        bool r1 = true;
        for (const auto& [set, mult] : xi.coeffs)
          if (mult > eta.coeff(set)) {
            r1 = false;
            break;
          }
        bool r3 = xi.rank() > eta.rank();
        bool r4 = xi.coeff({}) >= 1 && hall_check(eta.family()).feasible;
        bool r2 = eta.rank() - xi.rank() >= ProjectionExpr::joint_support(xi, eta);
        bool conflict = (r1 || r2) && (r3 || r4);
        CHECK_FALSE(conflict);
      }
  }
}

TEST_CASE("lower bound oracle for halving") {
  // square of a two-coordinate class: feasible at N = 2
  WeakDivLowerBound lb = div2_lower_bound(expr(2, {{{1, 2}, 1}}), 2);
  CHECK(lb.proved);
  CHECK(recheck_transversal(lb.family, lb.certificate));
  CHECK_FALSE(euler_of_family(lb.family).is_zero());

  // single coordinate squared: pigeonhole kills it
  WeakDivLowerBound fail = div2_lower_bound(expr(1, {{{1}, 1}}), 2);
  CHECK_FALSE(fail.proved);
  CHECK(recheck_violator(fail.family, fail.certificate));
  CHECK(euler_of_family(fail.family).is_zero());

  // the staged construction at N = 2, n = 2
  ConstructionSpec c = build_simple1(2, 2);
  WeakDivLowerBound staged = div2_lower_bound(strip_trivial(c.q), 2);
  CHECK(staged.proved);

  CHECK_THROWS_AS(div2_lower_bound(expr(2, {{{}, 1}, {{1}, 1}}), 2), std::invalid_argument);
}

TEST_CASE("upper bound via the stability margin") {
  ConstructionSpec c2 = build_simple1(2, 2);  // N = 2: d_2 = 6, rank 4
  DivUpperBound ub = div_upper_bound(c2.q, 2);
  CHECK(ub.n == 10);  // 3N + 4
  CHECK(ub.witness_set == c2.J[1]);
  CHECK(ub.witness_mult == 2);
  CHECK(ub.rank_u == 4);
  CHECK(ub.margin_dim == 6);

  DivUpperBound small = div_upper_bound(expr(1, {{{1}, 2}}), 2);
  CHECK(small.n == 3);  // rank 2 + margin 1
  CHECK(small.witness_set == std::vector<int>{1});

  CHECK_THROWS_AS(div_upper_bound(expr(1, {{{1}, 1}}), 2), std::invalid_argument);

  // the certified value indeed satisfies the margin rule
  ProjectionExpr target = ProjectionExpr::make(c2.q.dim, {{c2.J[1], ub.n}});
  CompareVerdict v = compare(c2.q, target);
  CHECK(v.yes());
  CHECK(v.rule == "R2");
  // and one copy fewer does not
  ProjectionExpr less = ProjectionExpr::make(c2.q.dim, {{c2.J[1], ub.n - 1}});
  CHECK_FALSE(compare(c2.q, less).yes());
}

TEST_CASE("general stage upper bound stays below the coarse closed form") {
  // at stage n with witness multiplicity m = 2^(n-1), the coarse bound is
  // (2N+2)m; the margin-certified value is never worse
  for (long long N : {1, 2, 3})
    for (int n : {2, 3, 4}) {
      ConstructionSpec c = build_simple1(N, n);
      long long m = 1LL << (n - 1);
      DivUpperBound ub = div_upper_bound(c.q, m);
      long long coarse = (2 * N + 2) * m;
      CHECK(ub.n <= coarse);
      // the coarse value is itself margin-certified
      ProjectionExpr target = ProjectionExpr::make(c.q.dim, {{c.J.back(), coarse}});
      CHECK(compare(c.q, target).yes());
    }
}

TEST_CASE("finite truncations of the omega-decomposable example") {
  for (int d = 0; d <= 6; ++d) {
    OmegaExampleReport rep = verify_omega_example(d);
    CAPTURE(d);
    CHECK(rep.halving_pass);
    CHECK(rep.obstruction_pass);
    CHECK(rep.halving_checked == d);
    CHECK(rep.obstruction_checked == (1 << d) - 1);
  }
}
