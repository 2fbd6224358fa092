#include "cudiv/propsuite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cudiv/bundle.hpp"
#include "cudiv/config.hpp"
#include "cudiv/poly.hpp"
#include "cudiv/villadsen.hpp"

namespace cudiv {
namespace {

std::vector<int> maximal_of(const FiniteCuModel& m, const std::vector<int>& items) {
  std::vector<int> maxima;
  for (int z : items) {
    bool dominated = false;
    for (size_t i = 0; i < maxima.size();) {
      if (m.leq(z, maxima[i])) {
        dominated = true;
        break;
      }
      if (m.leq(maxima[i], z))
        maxima.erase(maxima.begin() + static_cast<long>(i));
      else
        ++i;
    }
    if (!dominated) maxima.push_back(z);
  }
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

// canonical list of nonempty subsets of {1..ground}: by (size, lex)
std::vector<std::vector<int>> canonical_subsets(int ground) {
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << ground); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= ground; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return subsets;
}

ExtNat chain_value(const DivValue& v) { return v.as_extnat(); }

ExtNat pow_ext(ExtNat base, long long e) {
  ExtNat out(1);
  for (long long i = 0; i < e; ++i) out = out * base;
  return out;
}

struct SuiteRunner {
  std::vector<PropertyResult> results;
  std::string filter;
  unsigned long long seed = 0;

  bool wanted(const std::string& name) const {
    return filter.empty() || name.find(filter) != std::string::npos;
  }

  void run(const std::string& name, const std::function<std::string()>& body) {
    if (!wanted(name)) return;
    PropertyResult r;
    r.name = name;
    try {
      r.detail = body();  // empty detail means pass
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string check_chain_on(const FiniteCuModel& model, long long m) {
  DivisibilityReport weak = least(model, model.unit, DivKind::WeakDiv, m);
  DivisibilityReport dec = least(model, model.unit, DivKind::Decomp, m);
  DivisibilityReport div = least(model, model.unit, DivKind::Div, m);
  ExtNat w = chain_value(weak.value), d = chain_value(dec.value), D = chain_value(div.value);
  if (!(w <= D)) return "weak > full at m=" + std::to_string(m) + " on " + model.name;
  if (!(d <= D)) return "decomp > full at m=" + std::to_string(m) + " on " + model.name;
  ExtNat dm = d.is_infinite() ? ExtNat::infinity() : pow_ext(d, m);
  if (!(w <= dm)) return "weak > decomp^m at m=" + std::to_string(m) + " on " + model.name;
  return "";
}

}  // namespace

void for_each_family(int ground, long long max_mult, const std::function<void(const SetFamily&)>& fn) {
  std::vector<std::vector<int>> subsets = canonical_subsets(ground);
  std::vector<SetFamily::Member> current;
  std::function<void(size_t, long long)> rec = [&](size_t idx, long long left) {
    SetFamily f;
    f.ground = ground;
    f.members = current;  // already canonical by construction
    fn(f);
    if (left == 0) return;
    for (size_t i = idx; i < subsets.size(); ++i)
      for (long long c = 1; c <= left; ++c) {
        current.push_back({subsets[i], c});
        rec(i + 1, left - c);
        current.pop_back();
      }
  };
  rec(0, max_mult);
}

std::optional<std::vector<int>> two_div_witness(const FiniteCuModel& m, int u, int v, long long N) {
  std::vector<int> candidates;
  for (int x = 0; x < m.size; ++x)
    if (m.leq(m.mul(2, x), v)) candidates.push_back(x);
  std::vector<int> maxima = maximal_of(m, candidates);
  const int base = m.add(v, m.mul(2 * N + 1, u));
  const int target = m.mul(2, v);
  auto good = [&](int sum_2x) { return m.leq(target, m.add(base, sum_2x)); };

  // the all-equal tuple usually works; try it first
  for (int x : maxima)
    if (good(m.mul(2 * N, x))) return std::vector<int>(static_cast<size_t>(N), x);

  std::vector<int> tuple;
  std::function<bool(size_t, long long, int)> rec = [&](size_t start, long long left, int acc) -> bool {
    if (left == 0) return good(acc);
    for (size_t i = start; i < maxima.size(); ++i) {
      tuple.push_back(maxima[i]);
      if (rec(i, left - 1, m.add(acc, m.mul(2, maxima[i])))) return true;
      tuple.pop_back();
    }
    return false;
  };
  if (rec(0, N, 0)) return tuple;
  return std::nullopt;
}

std::vector<PropertyResult> run_property_suites(const std::string& filter, unsigned long long seed) {
  SuiteRunner runner;
  runner.filter = filter;
  runner.seed = seed;

  runner.run("extnat-table-agreement", [] {
    for (long long k : {2, 3, 5, 8}) {
      FiniteCuModel table = ext_nat_table(k, 4 * k + 2);
      const int inf = *table.top;
      auto to_idx = [&](ExtNat e) { return e.is_infinite() ? inf : static_cast<int>(e.value()); };
      std::vector<ExtNat> args;
      for (long long a = 0; a <= 2 * k; ++a) args.push_back(ExtNat(a));
      args.push_back(ExtNat::infinity());
      for (ExtNat a : args)
        for (ExtNat b : args) {
          if (table.add(to_idx(a), to_idx(b)) != to_idx(a + b))
            return "add disagrees at k=" + std::to_string(k);
          if (table.leq(to_idx(a), to_idx(b)) != (a <= b))
            return "leq disagrees at k=" + std::to_string(k);
        }
      for (ExtNat a : args) {
        ExtNat native = a.is_infinite() || a.value() > 0 ? ExtNat::infinity() : ExtNat(0);
        if (infinite_multiple(table, to_idx(a)) != to_idx(native))
          return "infinite multiple disagrees at k=" + std::to_string(k);
      }
    }
    return std::string();
  });

  runner.run("zoo-axioms", [] {
    for (const auto& entry : builtin_zoo()) {
      AxiomReport rep = check_axioms(entry.model);
      if (!rep.all_pass()) {
        for (const auto& c : rep.checks)
          if (!c.pass) return entry.name + " fails " + c.name;
      }
    }
    return std::string();
  });

  runner.run("axiom-witness-recheck", [] {
    FiniteCuModel bad = non_monotone_model();
    AxiomReport rep = check_axioms(bad);
    const AxiomCheck* oc = rep.find("order-compatible");
    if (!oc || oc->pass) return std::string("the broken table was not caught");
    if (!axiom_witness_violates(bad, *oc)) return std::string("witness does not re-check");
    return std::string();
  });

  runner.run("infinite-multiple-laws", [] {
    for (const auto& entry : builtin_zoo()) {
      const FiniteCuModel& m = entry.model;
      for (int x = 0; x < m.size; ++x) {
        int ix = infinite_multiple(m, x);
        if (!m.leq(x, ix)) return "x <= inf*x fails on " + entry.name;
        if (infinite_multiple(m, ix) != ix) return "inf*inf*x != inf*x on " + entry.name;
        for (int y = 0; y < m.size; ++y)
          if (m.leq(x, y) && !m.leq(ix, infinite_multiple(m, y)))
            return "inf-multiple not monotone on " + entry.name;
      }
    }
    return std::string();
  });

  runner.run("matrix-formula-agreement", [] {
    for (long long k = 2; k <= 10; ++k) {
      FiniteCuModel table = ext_nat_table(k, 2 * k + 2);
      for (long long m = 2; m <= k; ++m)
        for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv}) {
          DivisibilityReport r = least(table, table.unit, kind, m);
          if (!(r.value.as_extnat() == matrix_div(m, k)))
            return "mismatch at k=" + std::to_string(k) + " m=" + std::to_string(m) + " kind=" + to_string(kind);
        }
    }
    return std::string();
  });

  runner.run("divisibility-chain", [] {
    for (const auto& entry : builtin_zoo())
      for (long long m : {2, 3}) {
        std::string err = check_chain_on(entry.model, m);
        if (!err.empty()) return err;
      }
    return std::string();
  });

  runner.run("cov-sandwich", [] {
    for (const auto& entry : builtin_zoo())
      for (long long m : {2, 3}) {
        DivisibilityReport cov = least(entry.model, entry.model.unit, DivKind::Cov, m);
        DivisibilityReport weak = least(entry.model, entry.model.unit, DivKind::WeakDiv, m);
        if (cov.value.is_finite() && weak.value.is_finite()) {
          if (cov.value.n > weak.value.n) return "cov > weak on " + entry.name;
          if (weak.value.n > (2 * m - 1) * cov.value.n) return "weak > (2m-1)*cov on " + entry.name;
        } else if (cov.value.is_finite() != weak.value.is_finite()) {
          // finiteness must agree: cov <= weak <= (2m-1)*cov
          return "cov/weak finiteness mismatch on " + entry.name;
        }
      }
    return std::string();
  });

  runner.run("properly-infinite-consequence", [] {
    for (const auto& entry : builtin_zoo()) {
      const FiniteCuModel& m = entry.model;
      for (int u = 0; u < m.size; ++u)
        for (long long mm = 2; mm <= 4; ++mm)
          for (long long n = 1; n < mm; ++n)
            for (DivKind kind : {DivKind::Div, DivKind::Decomp, DivKind::WeakDiv})
              if (check(m, u, kind, mm, n).ok) {
                int nu = m.mul(n, u);
                if (!element_flags(m, nu).properly_infinite)
                  return "n*u not properly infinite on " + entry.name;
              }
    }
    return std::string();
  });

  runner.run("omega-implies-properly-infinite", [] {
    for (const auto& entry : builtin_zoo()) {
      const FiniteCuModel& m = entry.model;
      for (int u = 0; u < m.size; ++u)
        for (long long n = 1; n <= m.size; ++n)
          if (omega_check(m, u, DivKind::Decomp, n) && !element_flags(m, u).properly_infinite)
            return "omega-decomposable element not properly infinite on " + entry.name;
    }
    return std::string();
  });

  runner.run("cfp4s-zoo", [] {
    for (const auto& entry : builtin_zoo()) {
      if (!entry.model.top) continue;
      Cfp4sReport rep = cfp4s_check(entry.model);
      if (!rep.sum_condition_pass || !rep.pi_condition_pass) return "cfp4s fails on " + entry.name;
    }
    return std::string();
  });

  runner.run("two-div-witness", [] {
    for (const auto& entry : builtin_zoo()) {
      const FiniteCuModel& m = entry.model;
      if (m.size > 40) continue;  // the acceptance suite covers the large models
      for (int u = 0; u < m.size; ++u)
        for (int v = 0; v < m.size; ++v) {
          DivisibilityReport r = least(m, m.add(u, v), DivKind::Div, 2, 8);
          if (!r.value.is_finite() || r.value.n > 4) continue;
          if (!two_div_witness(m, u, v, r.value.n))
            return "no witness tuple on " + entry.name + " for (" + m.label(u) + "," + m.label(v) + ")";
        }
    }
    return std::string();
  });

  runner.run("tensor-power-weak-bound", [] {
    // if the 2-divisibility of every factor is at most N, the product scale
    // is weakly (m, N^n)-divisible whenever 2^n >= m
    const std::vector<std::vector<long long>> cases = {{3, 5}, {2, 2}, {3, 4}, {4, 6}, {2, 3, 3}};
    for (const auto& scales : cases) {
      long long nfac = static_cast<long long>(scales.size());
      long long prod = 1;
      ExtNat N(0);
      for (long long c : scales) {
        prod *= c;
        ExtNat d2 = matrix_div(2, c);
        if (N < d2) N = d2;
      }
      FiniteCuModel table = ext_nat_table(prod, 2 * prod + 2);
      for (long long m = 2; m <= (1LL << nfac); ++m) {
        DivisibilityReport r = least(table, table.unit, DivKind::WeakDiv, m, 4 * prod);
        ExtNat bound = pow_ext(N, nfac);
        if (!(r.value.as_extnat() <= bound)) {
          std::ostringstream os;
          os << "weak divisibility exceeds N^n at product " << prod << " m=" << m;
          return os.str();
        }
      }
    }
    return std::string();
  });

  runner.run("scaled-pairing-duality", [] {
    // a (2,3)-divisible right factor turns 3x <= 2y into pairing comparison
    const long long scale_b = 6;  // witness z=2: 2z <= 6 <= 3z
    std::vector<ExtNat> vals;
    for (long long i = 0; i <= 20; ++i) vals.push_back(ExtNat(i));
    vals.push_back(ExtNat::infinity());
    for (ExtNat x : vals)
      for (ExtNat y : vals) {
        if (!(3 * x <= 2 * y)) continue;
        ExtNat left = ext_tensor_pair(x, 20, ExtNat(scale_b), scale_b);
        ExtNat right = ext_tensor_pair(y, 20, ExtNat(scale_b), scale_b);
        if (!(left <= right)) return std::string("pairing comparison fails");
      }
    return std::string();
  });

  runner.run("euler-hall-small-exhaustive", [] {
    std::string err;
    for (int d = 0; d <= 4 && err.empty(); ++d)
      for_each_family(d, 4, [&](const SetFamily& f) {
        if (!err.empty()) return;
        bool hall = hall_check(f).feasible;
        bool nonzero = !euler_of_family(f).is_zero();
        if (hall != nonzero) err = "equivalence fails on a family over ground " + std::to_string(f.ground);
      });
    return err;
  });

  runner.run("euler-hall-random", [seed] {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int iter = 0; iter < 2000; ++iter) {
      int d = 1 + static_cast<int>(rng() % 8);
      int members = 1 + static_cast<int>(rng() % 4);
      std::vector<SetFamily::Member> ms;
      for (int i = 0; i < members; ++i) {
        std::vector<int> set;
        for (int e = 1; e <= d; ++e)
          if (rng() % 3 == 0) set.push_back(e);
        if (set.empty()) set.push_back(1 + static_cast<int>(rng() % d));
        ms.push_back({std::move(set), 1 + static_cast<long long>(rng() % 3)});
      }
      SetFamily f = SetFamily::make(d, std::move(ms));
      bool hall = hall_check(f).feasible;
      bool nonzero = !euler_of_family(f).is_zero();
      if (hall != nonzero) return std::string("random equivalence mismatch at iter ") + std::to_string(iter);
    }
    return std::string();
  });

  runner.run("hall-sdr-random", [seed] {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    for (int iter = 0; iter < 2000; ++iter) {
      int d = 1 + static_cast<int>(rng() % 6);
      std::vector<SetFamily::Member> ms;
      long long total = 0;
      while (total < 6 && rng() % 4 != 0) {
        std::vector<int> set;
        for (int e = 1; e <= d; ++e)
          if (rng() % 2 == 0) set.push_back(e);
        if (set.empty()) set.push_back(1 + static_cast<int>(rng() % d));
        long long mult = 1 + static_cast<long long>(rng() % 2);
        total += mult;
        ms.push_back({std::move(set), mult});
      }
      SetFamily f = SetFamily::make(d, std::move(ms));
      if (f.total_mult() > 8) continue;
      if (hall_check(f).feasible != sdr_bruteforce(f))
        return std::string("hall/sdr mismatch at iter ") + std::to_string(iter);
    }
    return std::string();
  });

  runner.run("hall-monotonicity", [seed] {
    std::mt19937_64 rng(seed ^ 0x165667b19e3779f9ull);
    for (int iter = 0; iter < 1000; ++iter) {
      int d = 2 + static_cast<int>(rng() % 8);
      std::vector<SetFamily::Member> ms;
      for (int i = 0; i < 4; ++i) {
        std::vector<int> set;
        for (int e = 1; e <= d; ++e)
          if (rng() % 2 == 0) set.push_back(e);
        if (set.empty()) set.push_back(1 + static_cast<int>(rng() % d));
        ms.push_back({std::move(set), 1 + static_cast<long long>(rng() % 3)});
      }
      SetFamily f = SetFamily::make(d, std::move(ms));
      if (!hall_check(f).feasible) continue;
      // decrement one member's multiplicity
      std::vector<SetFamily::Member> fewer = f.members;
      size_t pick = rng() % fewer.size();
      fewer[pick].mult -= 1;
      if (!hall_check(SetFamily::make(d, fewer)).feasible)
        return std::string("decreasing a multiplicity broke feasibility");
      // drop a member entirely
      fewer = f.members;
      fewer.erase(fewer.begin() + static_cast<long>(pick));
      if (!hall_check(SetFamily::make(d, fewer)).feasible)
        return std::string("removing a member broke feasibility");
    }
    return std::string();
  });

  runner.run("ring-laws-random", [seed] {
    std::mt19937_64 rng(seed ^ 0x27d4eb2f165667c5ull);
    const int d = 5;
    auto random_poly = [&]() {
      MultilinearPoly p(d);
      int terms = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < terms; ++t) {
        std::vector<int> key;
        for (int i = 1; i <= d; ++i)
          if (rng() % 3 == 0) key.push_back(i);
        p.add_term(key, Coeff(static_cast<long long>(rng() % 7) - 3));
      }
      return p;
    };
    for (int iter = 0; iter < 300; ++iter) {
      MultilinearPoly a = random_poly(), b = random_poly(), c = random_poly();
      if (!(a * b == b * a)) return std::string("multiplication not commutative");
      if (!((a * b) * c == a * (b * c))) return std::string("multiplication not associative");
      if (!(a * (b + c) == a * b + a * c)) return std::string("multiplication not distributive");
    }
    // products of more than d linear forms vanish
    for (int iter = 0; iter < 50; ++iter) {
      MultilinearPoly prod = MultilinearPoly::constant(d, 1);
      for (int t = 0; t <= d; ++t) {
        std::vector<int> set;
        for (int i = 1; i <= d; ++i)
          if (rng() % 2 == 0) set.push_back(i);
        if (set.empty()) set.push_back(1 + static_cast<int>(rng() % d));
        prod = prod * MultilinearPoly::linear_form(set, d);
      }
      if (!prod.is_zero()) return std::string("a degree-(d+1) product survived");
    }
    return std::string();
  });

  runner.run("bundle-soundness-sweep", [] {
    // all expressions over d <= 3 with rank <= 4: Yes-rules and No-rules
    // never both apply to the same pair
    for (int d = 1; d <= 3; ++d) {
      std::vector<std::vector<int>> sets = canonical_subsets(d);
      sets.insert(sets.begin(), {});
      std::vector<ProjectionExpr> exprs;
      std::vector<std::pair<std::vector<int>, long long>> current;
      std::function<void(size_t, long long)> rec = [&](size_t idx, long long left) {
        exprs.push_back(ProjectionExpr::make(d, current));
        if (left == 0) return;
        for (size_t i = idx; i < sets.size(); ++i)
          for (long long c = 1; c <= left; ++c) {
            current.push_back({sets[i], c});
            rec(i + 1, left - c);
            current.pop_back();
          }
      };
      rec(0, 4);
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
          if ((r1 || r2) && (r3 || r4)) return std::string("conflicting rules fire on a pair");
        }
    }
    return std::string();
  });

  runner.run("bundle-r1-transitive", [seed] {
    std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
    const int d = 4;
    std::vector<std::vector<int>> sets = canonical_subsets(d);
    sets.insert(sets.begin(), {});
    auto random_expr = [&]() {
      std::vector<std::pair<std::vector<int>, long long>> entries;
      for (const auto& s : sets)
        if (rng() % 3 == 0) entries.push_back({s, 1 + static_cast<long long>(rng() % 3)});
      return ProjectionExpr::make(d, std::move(entries));
    };
    for (int iter = 0; iter < 500; ++iter) {
      ProjectionExpr a = random_expr();
      ProjectionExpr b = a + random_expr();  // guarantees compare(a,b) = Yes by R1
      ProjectionExpr c = b + random_expr();
      CompareVerdict ab = compare(a, b), bc = compare(b, c), ac = compare(a, c);
      if (!(ab.yes() && ab.rule == "R1")) return std::string("expected Yes(R1) for a <= b");
      if (!(bc.yes() && bc.rule == "R1")) return std::string("expected Yes(R1) for b <= c");
      if (!(ac.yes() && ac.rule == "R1")) return std::string("R1 chain not transitive");
      if (a.rank() > c.rank()) return std::string("rank not monotone along Yes");
    }
    return std::string();
  });

  runner.run("bundle-obstruction-recheck", [] {
    // every No(R4) certificate re-checks, and the polynomial route agrees
    for (int d = 1; d <= 3; ++d)
      for (int mask = 1; mask < (1 << d); ++mask) {
        std::vector<std::pair<std::vector<int>, long long>> entries;
        for (int i = 1; i <= d; ++i)
          if (mask & (1 << (i - 1))) entries.push_back({{i}, 1});
        ProjectionExpr eta = ProjectionExpr::make(d, std::move(entries));
        ProjectionExpr trivial = ProjectionExpr::make(d, {{{}, 1}});
        CompareVerdict v = compare(trivial, eta);
        if (!(v.no() && v.rule == "R4")) return std::string("expected No(R4)");
        if (!recheck_transversal(eta.family(), v.obstruction)) return std::string("R4 certificate fails re-check");
        if (euler_of_family(eta.family()).is_zero()) return std::string("polynomial route disagrees with R4");
      }
    return std::string();
  });

  runner.run("pair-order-total", [] {
    for (int k = 1; k <= 10; ++k)
      for (int j = 0; j <= 10; ++j) {
        if (pair_order_less(k, j, k, j)) return std::string("order not irreflexive");
        for (int l = 1; l <= 10; ++l)
          for (int i = 0; i <= 10; ++i) {
            bool ab = pair_order_less(k, j, l, i), ba = pair_order_less(l, i, k, j);
            if ((k != l || j != i) && ab == ba) return std::string("order not total/asymmetric");
          }
      }
    // transitivity on a sampled grid
    for (int a = 1; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c)
          for (int e = 0; e <= 6; ++e)
            for (int f = 1; f <= 6; ++f)
              for (int g = 0; g <= 6; ++g)
                if (pair_order_less(a, b, c, e) && pair_order_less(c, e, f, g) && !pair_order_less(a, b, f, g))
                  return std::string("order not transitive");
    return std::string();
  });

  runner.run("s-enum-shape", [] {
    // the enumeration is empty beyond m = k+j, which caps the size maximum;
    // note the cardinality itself is NOT monotone in m (|S(1;1,3)| = 1 while
    // |S(2;1,3)| = 2), it merely collapses to zero at the cap
    for (int k = 1; k <= 4; ++k)
      for (int j = 0; j <= 4; ++j)
        for (int m = k; m <= 8; ++m) {
          size_t card = s_enum(m, k, j).size();
          if (m > k + j && card != 0) return std::string("expected empty enumeration beyond k+j");
        }
    if (s_enum(1, 1, 3).size() != 1 || s_enum(2, 1, 3).size() != 2)
      return std::string("the documented non-monotonicity example changed");
    return std::string();
  });

  runner.run("construction-shapes", [] {
    for (long long N : {1, 2, 3})
      for (int n : {1, 2, 3, 4}) {
        ConstructionSpec c = build_simple1(N, n);
        long long expect = N;
        long long total = 0;
        for (int j = 1; j <= n; ++j) {
          if (static_cast<long long>(c.J[static_cast<size_t>(j) - 1].size()) != expect)
            return std::string("simple1 block size mismatch");
          total += expect;
          expect *= 2;
        }
        if (c.d_n != total) return std::string("simple1 ground size mismatch");
        if (c.q.rank() != (1LL << n)) return std::string("simple1 rank mismatch");
        std::vector<int> all;
        for (const auto& block : c.J) all.insert(all.end(), block.begin(), block.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
          return std::string("simple1 blocks are not disjoint");
      }
    for (int n : {1, 2, 3}) {
      ConstructionSpec c = build_simple2(n);
      for (int j = 1; j <= n; ++j)
        if (static_cast<long long>(c.J[static_cast<size_t>(j) - 1].size()) != (1LL << (2 * j - 1)) * j)
          return std::string("simple2 block size mismatch");
      if (c.q.rank() != (1LL << n)) return std::string("simple2 rank mismatch");
    }
    return std::string();
  });

  runner.run("simple1-saturated-matching", [] {
    // block sizes equal demands exactly: the transversal uses every element
    for (long long N : {1, 2, 3})
      for (int n : {2, 3}) {
        ConstructionSpec c = build_simple1(N, n);
        WeakDivLowerBound lb = div2_lower_bound(strip_trivial(c.q), N);
        if (!lb.proved) return std::string("matching expected to be feasible");
        if (static_cast<long long>(lb.certificate.transversal.size()) != c.d_n)
          return std::string("matching should saturate the whole ground set");
      }
    return std::string();
  });

  runner.run("thm-simple-quick", [] {
    for (long long N : {1, 2, 3})
      for (int n : {2, 3}) {
        CertifiedInterval iv = verify_thm_simple(N, n);
        if (!iv.lower_cert.proved || iv.lower != N) return std::string("lower bound not certified");
        if (!(iv.upper == ExtNat(3 * N + 4))) return std::string("upper bound is not 3N+4");
        if (!recheck_transversal(iv.lower_cert.family, iv.lower_cert.certificate))
          return std::string("lower certificate fails re-check");
      }
    return std::string();
  });

  runner.run("combinators", [] {
    auto rep = [](DivKind kind, long long m, DivValue v) {
      DivisibilityReport r;
      r.kind = kind;
      r.m = m;
      r.value = v;
      r.cutoff = kDefaultCutoff;
      return r;
    };
    auto fin = [](long long n) { return DivValue::finite(n); };
    if (combine_product({rep(DivKind::Div, 2, fin(3)), rep(DivKind::Div, 2, fin(4)), rep(DivKind::Div, 2, fin(4))}).value.n != 4)
      return std::string("sup combinator wrong");
    if (combine_product({rep(DivKind::Div, 2, fin(2)), rep(DivKind::Div, 2, DivValue::infinite())}).value.tag != DivValue::Infinite)
      return std::string("sup with infinity wrong");
    if (combine_chain({rep(DivKind::Div, 2, fin(5)), rep(DivKind::Div, 2, fin(4)), rep(DivKind::Div, 2, fin(4)), rep(DivKind::Div, 2, fin(3))}).value.n != 3)
      return std::string("inf combinator wrong");
    if (combine_chain({rep(DivKind::Div, 2, DivValue::infinite()), rep(DivKind::Div, 2, DivValue::infinite())}).value.tag != DivValue::Infinite)
      return std::string("inf of infinities wrong");
    if (combine_chain({rep(DivKind::Div, 3, fin(4)), rep(DivKind::Div, 3, fin(4))}).value.n != 4)
      return std::string("constant chain wrong");
    return std::string();
  });

  runner.run("div-star-samples", [] {
    DivStarEstimate cone = div_star_estimate(ModelFamily::rational_cone(Rat(1)), 8);
    for (const auto& s : cone.samples)
      if (!(s.div_m == ExtNat(s.m))) return std::string("cone sample is not m");
    if (!(cone.upper == ExtRat(Rat(1)))) return std::string("cone upper estimate is not 1");
    DivStarEstimate fin = div_star_estimate(ModelFamily::ext_nat(6), 8);
    if (!fin.upper.infinite) return std::string("finite-rank upper estimate should be infinite");
    DivStarEstimate pi = div_star_estimate(ModelFamily::rational_cone_infinite_unit(), 8);
    if (!(pi.upper == ExtRat(Rat(0)))) return std::string("properly infinite unit estimate should be 0");
    return std::string();
  });

  runner.run("omega-example", [] {
    for (int d = 0; d <= 6; ++d) {
      OmegaExampleReport rep = verify_omega_example(d);
      if (!rep.halving_pass || !rep.obstruction_pass)
        return std::string("finite truncation fails at d=") + std::to_string(d);
    }
    return std::string();
  });

  runner.run("lm-simple2-quick", [] {
    if (verify_lm_simple2(1, 1).status != DivmLowerBound::Status::Proved) return std::string("(1,1) not proved");
    if (verify_lm_simple2(2, 2).status != DivmLowerBound::Status::Proved) return std::string("(2,2) not proved");
    if (verify_lm_simple2(2, 1).status != DivmLowerBound::Status::InfiniteByRank)
      return std::string("(2,1) should be infinite by rank");
    return std::string();
  });

  runner.run("inf-tensor-quick", [] {
    for (long long N : {1, 2})
      for (int m : {1, 2})
        for (int n : {1, 2})
          if (!verify_thm_inf_tensor(N, m, n).proved) return std::string("tensor bound not certified");
    return std::string();
  });

  return runner.results;
}

}  // namespace cudiv
