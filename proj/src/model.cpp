#include "cudiv/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cudiv {
namespace {

using Json = nlohmann::json;

std::string tuple_str(const FiniteCuModel& m, const std::vector<int>& xs) {
  std::string out = "(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += m.label(xs[i]);
  }
  return out + ")";
}

// Down-set bitrows: bits[a] marks every z with z <= a.
struct DownSets {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> bits;

  explicit DownSets(const FiniteCuModel& m) : n(m.size), words((m.size + 63) / 64), bits(static_cast<size_t>(m.size) * words, 0) {
    for (int a = 0; a < n; ++a)
      for (int z = 0; z < n; ++z)
        if (m.leq(z, a)) row(a)[z / 64] |= uint64_t{1} << (z % 64);
  }
  uint64_t* row(int a) { return bits.data() + static_cast<size_t>(a) * words; }
  const uint64_t* row(int a) const { return bits.data() + static_cast<size_t>(a) * words; }
};

// Maximal elements of the intersection of two down-sets.
std::vector<int> maximal_common_lower(const FiniteCuModel& m, int u, int v) {
  std::vector<int> maxima;
  for (int z = 0; z < m.size; ++z) {
    if (!m.leq(z, u) || !m.leq(z, v)) continue;
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

}  // namespace

int FiniteCuModel::mul(long long n, int x) const {
  if (n < 0) throw std::invalid_argument("FiniteCuModel::mul: negative multiplier");
  int cur = 0;
  for (long long i = 0; i < n; ++i) {
    int nxt = add(cur, x);
    if (nxt == cur) return cur;  // k*x stabilized
    cur = nxt;
  }
  return cur;
}

int infinite_multiple(const FiniteCuModel& m, int x) {
  if (x < 0 || x >= m.size) throw std::invalid_argument("infinite_multiple: element out of range");
  int cur = 0;
  for (int step = 0; step <= m.size + 1; ++step) {
    int nxt = m.add(cur, x);
    if (nxt == cur) return cur;
    cur = nxt;
  }
  throw ModelError("no stable infinite multiple for element " + m.label(x) +
                   ": the sequence k*x does not reach a fixed point");
}

ElementFlags element_flags(const FiniteCuModel& m, int x) {
  ElementFlags f;
  f.properly_infinite = m.leq(m.mul(2, x), x);
  int im = infinite_multiple(m, x);
  if (m.top) {
    f.full = (im == *m.top);
  } else {
    f.full = true;
    for (int y = 0; y < m.size; ++y)
      if (!m.leq(y, im)) {
        f.full = false;
        break;
      }
  }
  f.compact = true;
  return f;
}

void validate_model(const FiniteCuModel& m) {
  const int n = m.size;
  if (n < 1) throw ModelError("model must have at least the neutral element");
  if (m.add_tab.size() != static_cast<size_t>(n) * n) throw ModelError("add table has wrong shape");
  if (m.leq_tab.size() != static_cast<size_t>(n) * n) throw ModelError("leq table has wrong shape");
  for (int v : m.add_tab)
    if (v < 0 || v >= n) throw ModelError("add table entry out of range");
  if (m.unit < 0 || m.unit >= n) throw ModelError("unit out of range");
  if (m.top && (*m.top < 0 || *m.top >= n)) throw ModelError("top out of range");
  if (!m.labels.empty() && m.labels.size() != static_cast<size_t>(n)) throw ModelError("labels list has wrong length");

  for (int a = 0; a < n; ++a) {
    if (m.add(0, a) != a || m.add(a, 0) != a)
      throw ModelError("0 is not neutral: witness " + tuple_str(m, {a}));
    if (!m.leq(a, a)) throw ModelError("order not reflexive: witness " + tuple_str(m, {a}));
    if (!m.leq(0, a)) throw ModelError("0 is not the least element: witness " + tuple_str(m, {a}));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a))
        throw ModelError("not commutative: witness " + tuple_str(m, {a, b}));
      if (a != b && m.leq(a, b) && m.leq(b, a))
        throw ModelError("order not antisymmetric: witness " + tuple_str(m, {a, b}));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (m.leq(a, b)) {
        // transitivity via row containment: everything above b is above a
        for (int c = 0; c < n; ++c)
          if (m.leq(b, c) && !m.leq(a, c))
            throw ModelError("order not transitive: witness " + tuple_str(m, {a, b, c}));
      }
      for (int c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          throw ModelError("not associative: witness " + tuple_str(m, {a, b, c}));
    }
  // Monotonicity in one argument; with commutativity and transitivity this
  // gives full order compatibility.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!m.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (!m.leq(m.add(a, c), m.add(b, c)))
          throw ModelError("order incompatible with addition: witness " + tuple_str(m, {a, b, c}));
    }
  if (m.top) {
    int t = *m.top;
    for (int a = 0; a < n; ++a) {
      if (!m.leq(a, t)) throw ModelError("top is not the largest element: witness " + tuple_str(m, {a}));
      if (m.add(a, t) != t) throw ModelError("top is not absorbing: witness " + tuple_str(m, {a}));
    }
  }
}

AxiomReport check_axioms(const FiniteCuModel& m) {
  AxiomReport rep;
  const int n = m.size;
  auto push = [&rep](std::string name, bool pass, std::string note, std::vector<int> witness = {}) {
    rep.checks.push_back(AxiomCheck{std::move(name), pass, std::move(note), std::move(witness)});
  };

  // Monoid laws
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        if (m.add(a, b) != m.add(b, a)) {
          ok = false;
          w = {a, b};
        }
    push("commutative", ok, ok ? "" : "add(a,b) != add(b,a)", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) {
            ok = false;
            w = {a, b, c};
            break;
          }
    push("associative", ok, ok ? "" : "(a+b)+c != a+(b+c)", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; a < n; ++a)
      if (m.add(0, a) != a) {
        ok = false;
        w = {a};
        break;
      }
    push("neutral-zero", ok, ok ? "" : "0+a != a", w);
  }

  // Order laws
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; a < n; ++a)
      if (!m.leq(a, a)) {
        ok = false;
        w = {a};
        break;
      }
    push("reflexive", ok, ok ? "" : "a <= a fails", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (m.leq(a, b) && m.leq(b, a)) {
          ok = false;
          w = {a, b};
          break;
        }
    push("antisymmetric", ok, ok ? "" : "a <= b and b <= a for distinct a,b", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        if (!m.leq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (m.leq(b, c) && !m.leq(a, c)) {
            ok = false;
            w = {a, b, c};
            break;
          }
      }
    push("transitive", ok, ok ? "" : "a <= b <= c but not a <= c", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; a < n; ++a)
      if (!m.leq(0, a)) {
        ok = false;
        w = {a};
        break;
      }
    push("zero-least", ok, ok ? "" : "0 <= a fails", w);
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        if (!m.leq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (!m.leq(m.add(a, c), m.add(b, c))) {
            ok = false;
            w = {a, b, c};
            break;
          }
      }
    push("order-compatible", ok, ok ? "" : "a <= b but a+c <= b+c fails", w);
  }
  if (m.top) {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; a < n; ++a)
      if (!m.leq(a, *m.top) || m.add(a, *m.top) != *m.top) {
        ok = false;
        w = {a};
        break;
      }
    push("top-absorbing", ok, ok ? "" : "top fails x <= top or x+top = top", w);
  }

  // Category axioms in the finite-model reading (compact containment = order).
  push("A1", true, "automatic in finite models: increasing sequences stabilize");
  push("A2", true, "automatic in finite models: every element is compact, constant sequences suffice");
  {
    // A3 coincides with order compatibility once compact containment is the order.
    const AxiomCheck* oc = rep.find("order-compatible");
    push("A3", oc->pass, oc->pass ? "coincides with order compatibility under the all-compact convention" : "fails with the order-compatibility witness", oc->witness);
  }
  push("A4", true, "automatic in finite models: increasing sequences stabilize");

  // (P1): u' <= u <= v+w  ==>  exists v' <= u,v and w' <= u,w with u' <= v'+w'.
  {
    DownSets down(m);
    const int words = down.words;
    std::vector<std::vector<std::vector<int>>> maxima(n);
    for (int u = 0; u < n; ++u) {
      maxima[u].resize(n);
      for (int v = 0; v < n; ++v) maxima[u][v] = maximal_common_lower(m, u, v);
    }
    bool ok = true;
    std::vector<int> w;
    std::vector<uint64_t> cover(words);
    for (int u = 0; ok && u < n; ++u)
      for (int v = 0; ok && v < n; ++v)
        for (int ww = 0; ww < n; ++ww) {
          if (!m.leq(u, m.add(v, ww))) continue;
          std::fill(cover.begin(), cover.end(), 0);
          for (int vp : maxima[u][v])
            for (int wp : maxima[u][ww]) {
              const uint64_t* row = down.row(m.add(vp, wp));
              for (int i = 0; i < words; ++i) cover[i] |= row[i];
            }
          const uint64_t* need = down.row(u);
          int missing = -1;
          for (int i = 0; i < words && missing < 0; ++i) {
            uint64_t gap = need[i] & ~cover[i];
            if (gap) missing = i * 64 + __builtin_ctzll(gap);
          }
          if (missing >= 0) {
            ok = false;
            w = {missing, u, v, ww};
            break;
          }
        }
    push("P1", ok, ok ? "" : "no v',w' below (u,v) and (u,w) with u' <= v'+w'", w);
  }

  // (P2): u' <= u <= v  ==>  exists w with u'+w <= v <= u+w.
  {
    bool ok = true;
    std::vector<int> wit;
    for (int u = 0; ok && u < n; ++u)
      for (int v = 0; ok && v < n; ++v) {
        if (!m.leq(u, v)) continue;
        for (int up = 0; up < n; ++up) {
          if (!m.leq(up, u)) continue;
          bool found = false;
          for (int w = 0; w < n; ++w)
            if (m.leq(m.add(up, w), v) && m.leq(v, m.add(u, w))) {
              found = true;
              break;
            }
          if (!found) {
            ok = false;
            wit = {up, u, v};
            break;
          }
        }
      }
    push("P2", ok, ok ? "" : "no w with u'+w <= v <= u+w", wit);
  }

  return rep;
}

bool axiom_witness_violates(const FiniteCuModel& m, const AxiomCheck& c) {
  const auto& w = c.witness;
  if (c.pass || w.empty()) return false;
  if (c.name == "commutative") return m.add(w[0], w[1]) != m.add(w[1], w[0]);
  if (c.name == "associative") return m.add(m.add(w[0], w[1]), w[2]) != m.add(w[0], m.add(w[1], w[2]));
  if (c.name == "neutral-zero") return m.add(0, w[0]) != w[0];
  if (c.name == "reflexive") return !m.leq(w[0], w[0]);
  if (c.name == "antisymmetric") return w[0] != w[1] && m.leq(w[0], w[1]) && m.leq(w[1], w[0]);
  if (c.name == "transitive") return m.leq(w[0], w[1]) && m.leq(w[1], w[2]) && !m.leq(w[0], w[2]);
  if (c.name == "zero-least") return !m.leq(0, w[0]);
  if (c.name == "order-compatible" || c.name == "A3")
    return m.leq(w[0], w[1]) && !m.leq(m.add(w[0], w[2]), m.add(w[1], w[2]));
  if (c.name == "top-absorbing")
    return m.top && (!m.leq(w[0], *m.top) || m.add(w[0], *m.top) != *m.top);
  if (c.name == "P1") {
    int up = w[0], u = w[1], v = w[2], ww = w[3];
    if (!m.leq(up, u) || !m.leq(u, m.add(v, ww))) return false;
    for (int vp = 0; vp < m.size; ++vp) {
      if (!m.leq(vp, u) || !m.leq(vp, v)) continue;
      for (int wp = 0; wp < m.size; ++wp)
        if (m.leq(wp, u) && m.leq(wp, ww) && m.leq(up, m.add(vp, wp))) return false;
    }
    return true;
  }
  if (c.name == "P2") {
    int up = w[0], u = w[1], v = w[2];
    if (!m.leq(up, u) || !m.leq(u, v)) return false;
    for (int x = 0; x < m.size; ++x)
      if (m.leq(m.add(up, x), v) && m.leq(v, m.add(u, x))) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

FiniteCuModel ext_nat_table(long long k, long long cap) {
  if (k < 1) throw std::invalid_argument("ext_nat_table: k must be >= 1");
  if (cap < 0) cap = 4 * k + 2;
  if (cap < k + 1) throw std::invalid_argument("ext_nat_table: cap must be at least k+1");
  FiniteCuModel m;
  const int n = static_cast<int>(cap) + 2;  // 0..cap plus the top
  const int inf = n - 1;
  m.name = "extnat-" + std::to_string(k) + "-cap" + std::to_string(cap);
  m.size = n;
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.leq_tab.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s;
      if (a == inf || b == inf)
        s = inf;
      else
        s = (a + b <= cap) ? a + b : inf;
      m.add_tab[static_cast<size_t>(a) * n + b] = s;
      m.leq_tab[static_cast<size_t>(a) * n + b] = (b == inf || (a != inf && a <= b)) ? 1 : 0;
    }
  m.unit = static_cast<int>(k);
  m.top = inf;
  m.labels.resize(n);
  for (int a = 0; a < inf; ++a) m.labels[a] = std::to_string(a);
  m.labels[inf] = "inf";
  m.matrix_rank = k;
  m.sat_cap = cap;
  return m;
}

FiniteCuModel product_model(const FiniteCuModel& a, const FiniteCuModel& b) {
  FiniteCuModel m;
  m.name = a.name + " x " + b.name;
  m.size = a.size * b.size;
  const int n = m.size;
  auto idx = [&b](int i, int j) { return i * b.size + j; };
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.leq_tab.assign(static_cast<size_t>(n) * n, 0);
  for (int i1 = 0; i1 < a.size; ++i1)
    for (int j1 = 0; j1 < b.size; ++j1)
      for (int i2 = 0; i2 < a.size; ++i2)
        for (int j2 = 0; j2 < b.size; ++j2) {
          int x = idx(i1, j1), y = idx(i2, j2);
          m.add_tab[static_cast<size_t>(x) * n + y] = idx(a.add(i1, i2), b.add(j1, j2));
          m.leq_tab[static_cast<size_t>(x) * n + y] = (a.leq(i1, i2) && b.leq(j1, j2)) ? 1 : 0;
        }
  m.unit = idx(a.unit, b.unit);
  if (a.top && b.top) m.top = idx(*a.top, *b.top);
  m.labels.resize(n);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) m.labels[idx(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
  if (a.matrix_rank && b.matrix_rank) m.matrix_rank = std::min(*a.matrix_rank, *b.matrix_rank);
  return m;
}

FiniteCuModel rational_grid_model(const Rat& unit, long long subdiv, long long cap_steps) {
  if (subdiv < 1 || cap_steps < subdiv + 1)
    throw std::invalid_argument("rational_grid_model: need subdiv >= 1 and cap_steps >= subdiv+1");
  FiniteCuModel m = ext_nat_table(subdiv, cap_steps);
  m.name = "rational-grid-" + unit.to_string() + "-by" + std::to_string(subdiv);
  Rat step = unit / subdiv;
  for (long long a = 0; a <= cap_steps; ++a) m.labels[a] = (a * step).to_string();
  m.matrix_rank.reset();  // the grid stands in for a cone sample, not a matrix model
  return m;
}

FiniteCuModel one_element_model() {
  FiniteCuModel m;
  m.name = "one-element";
  m.size = 1;
  m.add_tab = {0};
  m.leq_tab = {1};
  m.unit = 0;
  m.top = 0;
  m.labels = {"0"};
  return m;
}

FiniteCuModel small_top_model(int unit_index) {
  if (unit_index < 1 || unit_index > 2) throw std::invalid_argument("small_top_model: unit must be a or top");
  FiniteCuModel m;
  m.name = std::string("small-top-unit-") + (unit_index == 1 ? "a" : "b");
  m.size = 3;
  // elements 0, a, b with a+a = b and b absorbing
  m.add_tab = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  m.leq_tab = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  m.unit = unit_index;
  m.top = 2;
  m.labels = {"0", "a", "b"};
  return m;
}

FiniteCuModel chain_model(long long k) {
  FiniteCuModel m = ext_nat_table(k, k + 1);
  m.name = "chain-" + std::to_string(k);
  m.matrix_rank.reset();
  return m;
}

FiniteCuModel join_lattice_model(int atoms) {
  if (atoms < 1 || atoms > 6) throw std::invalid_argument("join_lattice_model: atoms in 1..6");
  FiniteCuModel m;
  m.name = "join-lattice-" + std::to_string(atoms);
  const int n = 1 << atoms;
  m.size = n;
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.leq_tab.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m.add_tab[static_cast<size_t>(a) * n + b] = a | b;
      m.leq_tab[static_cast<size_t>(a) * n + b] = ((a & b) == a) ? 1 : 0;
    }
  m.unit = n - 1;
  m.top = n - 1;
  m.labels.resize(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "{";
    for (int i = 0; i < atoms; ++i)
      if (a & (1 << i)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(i + 1);
      }
    m.labels[a] = s + "}";
  }
  return m;
}

FiniteCuModel non_monotone_model() {
  FiniteCuModel m;
  m.name = "non-monotone";
  m.size = 3;
  // 0 < a < b, but a+a = 0: passes the monoid laws, breaks monotonicity.
  m.add_tab = {0, 1, 2, 1, 0, 2, 2, 2, 2};
  m.leq_tab = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  m.unit = 1;
  m.top = 2;
  m.labels = {"0", "a", "b"};
  return m;
}

const std::vector<ZooEntry>& builtin_zoo() {
  static const std::vector<ZooEntry> zoo = [] {
    std::vector<ZooEntry> z;
    for (long long k = 1; k <= 12; ++k) {
      FiniteCuModel m = ext_nat_table(k, 2 * k + 2);
      z.push_back({m.name, std::move(m)});
    }
    const std::pair<long long, long long> pairs[] = {{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4},
                                                     {4, 4}, {4, 5}, {5, 5}, {2, 10}, {3, 7}, {6, 10}};
    for (auto [k1, k2] : pairs) {
      FiniteCuModel m = product_model(ext_nat_table(k1, k1 + 1), ext_nat_table(k2, k2 + 1));
      z.push_back({m.name, std::move(m)});
    }
    {
      FiniteCuModel m = rational_grid_model(Rat(1), 4, 8);
      z.push_back({m.name, std::move(m)});
    }
    z.push_back({"one-element", one_element_model()});
    z.push_back({"small-top-unit-a", small_top_model(1)});
    z.push_back({"small-top-unit-b", small_top_model(2)});
    z.push_back({"chain-5", chain_model(5)});
    z.push_back({"join-lattice-3", join_lattice_model(3)});
    for (const auto& e : z) validate_model(e.model);
    return z;
  }();
  return zoo;
}

// ---------------------------------------------------------------------------
// Interchange format
// ---------------------------------------------------------------------------

FiniteCuModel load_model(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ModelError(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model document must be an object");
  for (const char* field : {"name", "size", "add", "leq", "unit", "top"})
    if (!j.contains(field)) throw ModelError(std::string("model document missing field '") + field + "'");

  FiniteCuModel m;
  try {
    m.name = j.at("name").get<std::string>();
    m.size = j.at("size").get<int>();
    if (m.size < 1) throw ModelError("size must be >= 1");
    const auto& add = j.at("add");
    if (!add.is_array() || add.size() != static_cast<size_t>(m.size))
      throw ModelError("add must be a size x size matrix");
    m.add_tab.reserve(static_cast<size_t>(m.size) * m.size);
    for (const auto& row : add) {
      if (!row.is_array() || row.size() != static_cast<size_t>(m.size))
        throw ModelError("add must be a size x size matrix");
      for (const auto& v : row) m.add_tab.push_back(v.get<int>());
    }
    m.leq_tab.assign(static_cast<size_t>(m.size) * m.size, 0);
    for (const auto& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2) throw ModelError("leq entries must be [a,b] pairs");
      int a = pr[0].get<int>(), b = pr[1].get<int>();
      if (a < 0 || a >= m.size || b < 0 || b >= m.size) throw ModelError("leq pair out of range");
      m.leq_tab[static_cast<size_t>(a) * m.size + b] = 1;
    }
    m.unit = j.at("unit").get<int>();
    if (!j.at("top").is_null()) m.top = j.at("top").get<int>();
    if (j.contains("labels") && !j.at("labels").is_null())
      m.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ModelError(std::string("model document has a malformed field: ") + e.what());
  }
  validate_model(m);
  return m;
}

FiniteCuModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string model_record(const FiniteCuModel& m) {
  Json j;
  j["name"] = m.name;
  j["size"] = m.size;
  Json add = Json::array();
  for (int a = 0; a < m.size; ++a) {
    Json row = Json::array();
    for (int b = 0; b < m.size; ++b) row.push_back(m.add(a, b));
    add.push_back(std::move(row));
  }
  j["add"] = std::move(add);
  Json leq = Json::array();
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (m.leq(a, b)) leq.push_back(Json::array({a, b}));
  j["leq"] = std::move(leq);
  j["unit"] = m.unit;
  if (m.top)
    j["top"] = *m.top;
  else
    j["top"] = nullptr;
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j.dump();
}

}  // namespace cudiv
