#include "cudiv/divisibility.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "cudiv/config.hpp"

namespace cudiv {
namespace {

void require_args(const FiniteCuModel& model, int u, long long m, long long n) {
  if (u < 0 || u >= model.size) throw std::invalid_argument("element out of range");
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be >= 1");
}

std::vector<int> minimal_elements(const FiniteCuModel& model, const std::vector<int>& items) {
  std::vector<int> mins;
  for (int z : items) {
    bool dominated = false;
    for (size_t i = 0; i < mins.size();) {
      if (model.leq(mins[i], z)) {
        dominated = true;
        break;
      }
      if (model.leq(z, mins[i]))
        mins.erase(mins.begin() + static_cast<long>(i));
      else
        ++i;
    }
    if (!dominated) mins.push_back(z);
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

// Min-count sums: dist[s] = least number of generator uses whose model sum
// is s, with parent pointers for canonical witness reconstruction.
struct SumSearch {
  std::vector<int> dist;
  std::vector<std::pair<int, int>> parent;  // (previous sum, generator)

  void run(const FiniteCuModel& model, const std::vector<int>& generators) {
    dist.assign(model.size, -1);
    parent.assign(model.size, {-1, -1});
    std::deque<int> queue;
    dist[0] = 0;
    queue.push_back(0);
    size_t visited = 0;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int g : generators) {
        if (g == 0) continue;
        if (++visited > budget().search_nodes) throw GuardError("search budget exceeded in sum search");
        int t = model.add(s, g);
        if (t == s || dist[t] >= 0) continue;
        dist[t] = dist[s] + 1;
        parent[t] = {s, g};
        queue.push_back(t);
      }
    }
  }

  std::vector<int> reconstruct(int target) const {
    std::vector<int> terms;
    int s = target;
    while (parent[s].first >= 0 || parent[s].second >= 0) {
      terms.push_back(parent[s].second);
      s = parent[s].first;
    }
    std::sort(terms.begin(), terms.end());
    return terms;
  }
};

// Best reachable target s >= u: minimal count, ties by smallest element index.
int best_target_at_least(const FiniteCuModel& model, const SumSearch& search, int u) {
  int best = -1;
  for (int s = 0; s < model.size; ++s) {
    if (search.dist[s] < 0 || !model.leq(u, s)) continue;
    if (best < 0 || search.dist[s] < search.dist[best]) best = s;
  }
  return best;
}

// Reachability of (count, sum <= u) states by multisets over the candidate
// list; partial sums of any sub-multiset stay below the total, so pruning to
// sums <= u loses nothing.
struct BoundedCountSearch {
  int slots = 0;
  std::vector<uint8_t> reach;                // (count)*size + sum
  std::vector<std::pair<int, int>> parent;   // (previous state index, generator)

  void run(const FiniteCuModel& model, int u, long long m, const std::vector<int>& candidates) {
    slots = static_cast<int>(m);
    reach.assign(static_cast<size_t>(slots + 1) * model.size, 0);
    parent.assign(static_cast<size_t>(slots + 1) * model.size, {-1, -1});
    reach[0] = 1;
    size_t visited = 0;
    for (int r = 0; r < slots; ++r)
      for (int s = 0; s < model.size; ++s) {
        if (!reach[static_cast<size_t>(r) * model.size + s]) continue;
        for (int x : candidates) {
          if (++visited > budget().search_nodes) throw GuardError("search budget exceeded in tuple search");
          int t = model.add(s, x);
          if (!model.leq(t, u)) continue;
          size_t state = static_cast<size_t>(r + 1) * model.size + t;
          if (!reach[state]) {
            reach[state] = 1;
            parent[state] = {r * model.size + s, x};
          }
        }
      }
  }

  bool reached(int count, int sum, int size) const {
    return reach[static_cast<size_t>(count) * size + sum] != 0;
  }

  std::vector<int> reconstruct(int count, int sum, int size) const {
    std::vector<int> terms;
    size_t state = static_cast<size_t>(count) * size + sum;
    while (parent[state].first >= 0) {
      terms.push_back(parent[state].second);
      state = static_cast<size_t>(parent[state].first);
    }
    std::sort(terms.begin(), terms.end());
    return terms;
  }
};

// Closure of elements <= u expressible as sums of coeff*y terms with
// coeff in [m, 2m).  Larger coefficients split into such terms, so the
// restricted range is complete.
struct CoverClosure {
  std::vector<uint8_t> in_closure;
  std::vector<std::array<int, 3>> parent;  // (previous element, coeff, y); previous = -1 for roots

  void run(const FiniteCuModel& model, int u, long long m) {
    in_closure.assign(model.size, 0);
    parent.assign(model.size, {-1, -1, -1});
    std::vector<std::pair<long long, int>> gens;  // (coeff, y) with value <= u
    std::vector<int> gen_value;
    for (long long c = m; c < 2 * m; ++c)
      for (int y = 0; y < model.size; ++y) {
        int v = model.mul(c, y);
        if (model.leq(v, u)) {
          gens.push_back({c, y});
          gen_value.push_back(v);
        }
      }
    std::deque<int> queue;
    for (size_t i = 0; i < gens.size(); ++i) {
      int v = gen_value[i];
      if (!in_closure[v]) {
        in_closure[v] = 1;
        parent[v] = {-1, static_cast<int>(gens[i].first), gens[i].second};
        queue.push_back(v);
      }
    }
    size_t visited = 0;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < gens.size(); ++i) {
        if (++visited > budget().search_nodes) throw GuardError("search budget exceeded in cover closure");
        int t = model.add(s, gen_value[i]);
        if (!model.leq(t, u) || in_closure[t]) continue;
        in_closure[t] = 1;
        parent[t] = {s, static_cast<int>(gens[i].first), gens[i].second};
        queue.push_back(t);
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(in_closure.size()); ++s)
      if (in_closure[s]) out.push_back(s);
    return out;
  }

  CovPart decomposition(int element) const {
    CovPart part;
    part.total = element;
    int s = element;
    while (s >= 0) {
      part.terms.push_back({parent[s][1], parent[s][2]});
      s = parent[s][0];
    }
    std::sort(part.terms.begin(), part.terms.end());
    return part;
  }
};

std::string infinite_tag(const FiniteCuModel& model, long long m) {
  if (model.matrix_rank && m > *model.matrix_rank) return "rank obstruction: m > rank";
  return "exhausted finite carrier";
}

std::vector<int> div_candidates(const FiniteCuModel& model, int u, long long m) {
  std::vector<int> xs;
  for (int x = 0; x < model.size; ++x)
    if (model.leq(model.mul(m, x), u)) xs.push_back(x);
  return xs;
}

}  // namespace

std::string to_string(DivKind k) {
  switch (k) {
    case DivKind::Div: return "Div";
    case DivKind::Decomp: return "Decomp";
    case DivKind::WeakDiv: return "WeakDiv";
    case DivKind::Cov: return "Cov";
  }
  return "?";
}

DivKind div_kind_from_string(const std::string& s) {
  if (s == "Div" || s == "div") return DivKind::Div;
  if (s == "Decomp" || s == "decomp") return DivKind::Decomp;
  if (s == "WeakDiv" || s == "weakdiv" || s == "weak") return DivKind::WeakDiv;
  if (s == "Cov" || s == "cov") return DivKind::Cov;
  throw std::invalid_argument("unknown divisibility kind: " + s);
}

ExtNat DivValue::as_extnat() const {
  if (tag == Finite) return ExtNat(n);
  if (tag == Infinite) return ExtNat::infinity();
  throw std::logic_error("DivValue: cutoff-bounded value has no extended-natural reading");
}

std::string DivValue::to_string() const {
  if (tag == Finite) return std::to_string(n);
  if (tag == Infinite) return "inf";
  return ">=" + std::to_string(n);
}

CheckResult check(const FiniteCuModel& model, int u, DivKind kind, long long m, long long n) {
  require_args(model, u, m, n);
  CheckResult result;
  switch (kind) {
    case DivKind::Div: {
      for (int x = 0; x < model.size; ++x)
        if (model.leq(model.mul(m, x), u) && model.leq(u, model.mul(n, x))) {
          result.ok = true;
          result.witness.elems = {x};
          return result;
        }
      return result;
    }
    case DivKind::Decomp: {
      std::vector<int> ys;
      for (int x = 0; x < model.size; ++x)
        if (model.leq(u, model.mul(n, x))) ys.push_back(x);
      std::vector<int> cands = minimal_elements(model, ys);
      BoundedCountSearch search;
      search.run(model, u, m, cands);
      for (int s = 0; s < model.size; ++s)
        if (search.reached(static_cast<int>(m), s, model.size) && model.leq(s, u)) {
          result.ok = true;
          result.witness.elems = search.reconstruct(static_cast<int>(m), s, model.size);
          return result;
        }
      return result;
    }
    case DivKind::WeakDiv: {
      SumSearch search;
      search.run(model, div_candidates(model, u, m));
      int target = best_target_at_least(model, search, u);
      if (target >= 0 && search.dist[target] <= n) {
        result.ok = true;
        result.witness.elems = search.reconstruct(target);
        if (result.witness.elems.empty()) result.witness.elems = {0};  // u = 0 convention
        return result;
      }
      return result;
    }
    case DivKind::Cov: {
      CoverClosure closure;
      closure.run(model, u, m);
      SumSearch search;
      search.run(model, closure.elements());
      int target = best_target_at_least(model, search, u);
      if (target >= 0 && search.dist[target] <= n) {
        result.ok = true;
        result.witness.elems = search.reconstruct(target);
        if (result.witness.elems.empty()) result.witness.elems = {0};
        for (int x : result.witness.elems) result.witness.parts.push_back(closure.decomposition(x));
        return result;
      }
      return result;
    }
  }
  return result;
}

DivisibilityReport least(const FiniteCuModel& model, int u, DivKind kind, long long m, long long cutoff) {
  require_args(model, u, m, 1);
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  DivisibilityReport rep;
  rep.kind = kind;
  rep.m = m;
  rep.cutoff = cutoff;

  switch (kind) {
    case DivKind::Div: {
      long long best_n = -1;
      int best_x = -1;
      for (int x = 0; x < model.size; ++x) {
        if (!model.leq(model.mul(m, x), u)) continue;
        int prev = -1, cur = 0;
        for (long long k = 1; cur != prev; ++k) {
          prev = cur;
          cur = model.add(cur, x);
          if (model.leq(u, cur)) {
            if (best_n < 0 || k < best_n) {
              best_n = k;
              best_x = x;
            }
            break;
          }
          if (best_n > 0 && k >= best_n) break;
        }
      }
      if (best_n < 0) {
        rep.value = DivValue::infinite();
        rep.proof_tag = infinite_tag(model, m);
      } else if (best_n > cutoff) {
        rep.value = DivValue::at_least(cutoff);
      } else {
        rep.value = DivValue::finite(best_n);
        rep.witness.elems = {best_x};
      }
      return rep;
    }
    case DivKind::WeakDiv: {
      SumSearch search;
      search.run(model, div_candidates(model, u, m));
      int target = best_target_at_least(model, search, u);
      if (target < 0) {
        rep.value = DivValue::infinite();
        rep.proof_tag = infinite_tag(model, m);
      } else {
        long long n = std::max(1, search.dist[target]);
        if (n > cutoff) {
          rep.value = DivValue::at_least(cutoff);
        } else {
          rep.value = DivValue::finite(n);
          rep.witness.elems = search.reconstruct(target);
          if (rep.witness.elems.empty()) rep.witness.elems = {0};
        }
      }
      return rep;
    }
    case DivKind::Decomp: {
      // Emptiness proof first: u <= n*x for some n iff u <= inf*x, so the
      // stabilized candidate set decides whether any finite n can work.
      std::vector<int> ys_inf;
      for (int x = 0; x < model.size; ++x)
        if (model.leq(u, infinite_multiple(model, x))) ys_inf.push_back(x);
      {
        BoundedCountSearch search;
        search.run(model, u, m, minimal_elements(model, ys_inf));
        bool feasible = false;
        for (int s = 0; s < model.size && !feasible; ++s)
          if (search.reached(static_cast<int>(m), s, model.size) && model.leq(s, u)) feasible = true;
        if (!feasible) {
          rep.value = DivValue::infinite();
          rep.proof_tag = infinite_tag(model, m);
          return rep;
        }
      }
      for (long long n = 1; n <= cutoff; ++n) {
        CheckResult r = check(model, u, DivKind::Decomp, m, n);
        if (r.ok) {
          rep.value = DivValue::finite(n);
          rep.witness = r.witness;
          return rep;
        }
      }
      rep.value = DivValue::at_least(cutoff);
      return rep;
    }
    case DivKind::Cov: {
      CoverClosure closure;
      closure.run(model, u, m);
      SumSearch search;
      search.run(model, closure.elements());
      int target = best_target_at_least(model, search, u);
      if (target < 0) {
        rep.value = DivValue::infinite();
        rep.proof_tag = infinite_tag(model, m);
      } else {
        long long n = std::max(1, search.dist[target]);
        if (n > cutoff) {
          rep.value = DivValue::at_least(cutoff);
        } else {
          rep.value = DivValue::finite(n);
          rep.witness.elems = search.reconstruct(target);
          if (rep.witness.elems.empty()) rep.witness.elems = {0};
          for (int x : rep.witness.elems) rep.witness.parts.push_back(closure.decomposition(x));
        }
      }
      return rep;
    }
  }
  return rep;
}

bool recheck_witness(const FiniteCuModel& model, int u, DivKind kind, long long m, long long n,
                     const DivWitness& w) {
  require_args(model, u, m, n);
  for (int x : w.elems)
    if (x < 0 || x >= model.size) return false;
  switch (kind) {
    case DivKind::Div: {
      if (w.elems.size() != 1) return false;
      int x = w.elems[0];
      return model.leq(model.mul(m, x), u) && model.leq(u, model.mul(n, x));
    }
    case DivKind::Decomp: {
      if (w.elems.size() != static_cast<size_t>(m)) return false;
      int sum = 0;
      for (int x : w.elems) {
        if (!model.leq(u, model.mul(n, x))) return false;
        sum = model.add(sum, x);
      }
      return model.leq(sum, u);
    }
    case DivKind::WeakDiv: {
      if (w.elems.empty() || w.elems.size() > static_cast<size_t>(n)) return false;
      int sum = 0;
      for (int x : w.elems) {
        if (!model.leq(model.mul(m, x), u)) return false;
        sum = model.add(sum, x);
      }
      return model.leq(u, sum);
    }
    case DivKind::Cov: {
      if (w.elems.empty() || w.elems.size() > static_cast<size_t>(n)) return false;
      if (w.parts.size() != w.elems.size()) return false;
      int sum = 0;
      for (size_t i = 0; i < w.elems.size(); ++i) {
        const CovPart& part = w.parts[i];
        if (part.total != w.elems[i] || part.terms.empty()) return false;
        int acc = 0;
        for (auto [c, y] : part.terms) {
          if (c < m || c >= 2 * m) return false;
          acc = model.add(acc, model.mul(c, y));
        }
        if (acc != part.total) return false;
        if (!model.leq(part.total, u)) return false;
        sum = model.add(sum, part.total);
      }
      return model.leq(u, sum);
    }
  }
  return false;
}

namespace {

DivisibilityReport combine(const std::vector<DivisibilityReport>& reports, bool take_sup,
                           const char* what) {
  if (reports.empty()) throw std::invalid_argument(std::string(what) + ": no reports to combine");
  const DivKind kind = reports.front().kind;
  const long long m = reports.front().m;
  long long cutoff = 0;
  bool any_infinite = false, all_infinite = true;
  long long best = -1;
  for (const auto& r : reports) {
    if (r.kind != kind || r.m != m) throw std::invalid_argument(std::string(what) + ": mixed kinds or m");
    if (r.value.tag == DivValue::AtLeastCutoff)
      throw std::invalid_argument(std::string(what) + ": cutoff-bounded report cannot be combined");
    cutoff = std::max(cutoff, r.cutoff);
    if (r.value.tag == DivValue::Infinite) {
      any_infinite = true;
    } else {
      all_infinite = false;
      long long v = r.value.n;
      if (best < 0)
        best = v;
      else
        best = take_sup ? std::max(best, v) : std::min(best, v);
    }
  }
  DivisibilityReport out;
  out.kind = kind;
  out.m = m;
  out.cutoff = cutoff;
  if (take_sup ? any_infinite : all_infinite) {
    out.value = DivValue::infinite();
    out.proof_tag = take_sup ? "supremum with an infinite factor" : "all stages infinite";
  } else {
    out.value = DivValue::finite(best);
  }
  return out;
}

}  // namespace

DivisibilityReport combine_product(const std::vector<DivisibilityReport>& reports) {
  return combine(reports, true, "combine_product");
}

DivisibilityReport combine_chain(const std::vector<DivisibilityReport>& reports) {
  return combine(reports, false, "combine_chain");
}

bool omega_check(const FiniteCuModel& model, int u, DivKind kind, long long n) {
  require_args(model, u, 1, n);
  if (kind == DivKind::Decomp) {
    for (int x = 0; x < model.size; ++x)
      if (model.leq(infinite_multiple(model, x), u) && model.leq(u, model.mul(n, x))) return true;
    return false;
  }
  if (kind == DivKind::WeakDiv) {
    std::vector<int> xs;
    for (int x = 0; x < model.size; ++x)
      if (model.leq(infinite_multiple(model, x), u)) xs.push_back(x);
    SumSearch search;
    search.run(model, xs);
    int target = best_target_at_least(model, search, u);
    return target >= 0 && search.dist[target] <= n;
  }
  throw std::invalid_argument("omega_check: kind must be Decomp or WeakDiv");
}

Cfp4sReport cfp4s_check(const FiniteCuModel& model) {
  if (!model.top) throw ModelError("cfp4s_check requires a model with a top element");
  Cfp4sReport rep;
  const int top = *model.top;

  for (int y = 0; y < model.size && rep.sum_condition_pass; ++y) {
    int im = infinite_multiple(model, y);
    int prev = -1, cur = 0;
    for (long long mm = 1; cur != prev; ++mm) {
      prev = cur;
      cur = model.add(cur, y);
      if (cur == top && im != top) {
        rep.sum_condition_pass = false;
        rep.sum_witness = {y, static_cast<int>(mm)};
        break;
      }
    }
  }

  for (int y = 0; y < model.size && rep.pi_condition_pass; ++y) {
    ElementFlags flags = element_flags(model, y);
    if (!flags.full) continue;
    for (long long mm = 1; mm <= model.size; ++mm) {
      if (omega_check(model, y, DivKind::Decomp, mm)) {
        if (!flags.properly_infinite) {
          rep.pi_condition_pass = false;
          rep.pi_witness = {y, static_cast<int>(mm)};
        }
        break;
      }
    }
  }

  rep.note =
      "both conditions hold automatically under the all-compact convention: "
      "m*y = top forces inf*y = top, and an omega-decomposition witness x with "
      "inf*x <= y <= m*x gives 2y <= 2m*x <= inf*x <= y";
  return rep;
}

long long rational_cone_least_div(const Rat& unit, long long m, long long denom_bound) {
  if (m < 1 || denom_bound < 1) throw std::invalid_argument("rational_cone_least_div: bad arguments");
  for (long long n = 1; n <= 4 * m + 4; ++n) {
    for (long long den = 1; den <= denom_bound; ++den) {
      // x = p/den with m*x <= unit <= n*x; p = 0 fails the upper half unless unit = 0.
      long long pmax = (unit.num * den) / (unit.den * m);
      for (long long p = 1; p <= pmax; ++p)
        if (unit.num * den <= n * p * unit.den) return n;
    }
  }
  throw std::logic_error("rational_cone_least_div: no witness found below the safety bound");
}

DivStarEstimate div_star_estimate(const ModelFamily& family, long long m_max) {
  if (m_max < 2) throw std::invalid_argument("div_star_estimate: m_max must be >= 2");
  DivStarEstimate est;

  if (family.kind == ModelFamily::RationalCone && family.cone_unit_infinite) {
    for (long long m = 2; m <= m_max; ++m) est.samples.push_back({m, ExtNat(1)});
    est.lower = ExtRat(Rat(0));
    est.upper = ExtRat(Rat(0));
    est.note = "properly infinite unit: every divisibility number is 1, the asymptotic value is 0";
    return est;
  }

  bool any_infinite = false;
  if (family.kind == ModelFamily::ExtNatScaled) {
    FiniteCuModel table = ext_nat_table(family.k, 2 * family.k + 2);
    for (long long m = 2; m <= m_max; ++m) {
      DivisibilityReport r = least(table, table.unit, DivKind::Div, m, std::max<long long>(kDefaultCutoff, family.k + 2));
      est.samples.push_back({m, r.value.as_extnat()});
      if (!r.value.is_finite()) any_infinite = true;
    }
  } else {
    for (long long m = 2; m <= m_max; ++m) {
      long long n = rational_cone_least_div(family.cone_unit, m, family.cone_unit.den * m_max);
      est.samples.push_back({m, ExtNat(n)});
    }
  }

  if (any_infinite) {
    est.lower = ExtRat::infinity();
    est.upper = ExtRat::infinity();
    est.note = "finite rank: divisibility numbers are infinite beyond the rank, the asymptotic value is infinite";
    return est;
  }
  Rat lower(0), upper(0);
  bool first = true;
  for (const auto& s : est.samples) {
    Rat lo = Rat(s.div_m.value() - 1) / s.m;
    Rat up = Rat(s.div_m.value()) / s.m;
    if (first) {
      lower = lo;
      upper = up;
      first = false;
    } else {
      if (lower < lo) lower = lo;
      if (up < upper) upper = up;
    }
  }
  est.lower = ExtRat(lower);
  est.upper = ExtRat(upper);
  return est;
}

}  // namespace cudiv
