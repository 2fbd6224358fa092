#include "cudiv/setfamily.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "cudiv/config.hpp"

namespace cudiv {
namespace {

// Dinic max-flow with 64-bit capacities.
struct FlowNetwork {
  struct Edge {
    int to;
    int rev;
    long long cap;
  };

  std::vector<std::vector<Edge>> adj;
  std::vector<int> level, iter;

  explicit FlowNetwork(int n) : adj(n), level(n), iter(n) {}

  void add_edge(int from, int to, long long cap) {
    adj[from].push_back({to, static_cast<int>(adj[to].size()), cap});
    adj[to].push_back({from, static_cast<int>(adj[from].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue;
    level[s] = 0;
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const Edge& e : adj[v])
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push_back(e.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
      Edge& e = adj[v][i];
      if (e.cap > 0 && level[v] < level[e.to]) {
        long long d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          adj[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
    }
    return flow;
  }

  std::vector<uint8_t> residual_reachable(int s) const {
    std::vector<uint8_t> seen(adj.size(), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (const Edge& e : adj[queue[qi]])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push_back(e.to);
        }
    return seen;
  }
};

}  // namespace

SetFamily SetFamily::make(int ground, std::vector<Member> members) {
  if (ground < 0) throw std::invalid_argument("SetFamily: negative ground size");
  SetFamily f;
  f.ground = ground;
  for (Member& m : members) {
    if (m.mult < 0) throw std::invalid_argument("SetFamily: negative multiplicity");
    if (m.mult > kMaxMultiplicity) throw std::invalid_argument("SetFamily: multiplicity overflow beyond 2^62");
    if (m.mult == 0) continue;
    std::sort(m.set.begin(), m.set.end());
    if (std::adjacent_find(m.set.begin(), m.set.end()) != m.set.end())
      throw std::invalid_argument("SetFamily: repeated index inside a set");
    for (int i : m.set)
      if (i < 1 || i > ground) throw std::invalid_argument("SetFamily: index outside the ground set");
    f.members.push_back(std::move(m));
  }
  std::sort(f.members.begin(), f.members.end(), [](const Member& a, const Member& b) {
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set < b.set;
  });
  std::vector<Member> merged;
  for (Member& m : f.members) {
    if (!merged.empty() && merged.back().set == m.set) {
      if (merged.back().mult > kMaxMultiplicity - m.mult)
        throw std::invalid_argument("SetFamily: multiplicity overflow beyond 2^62");
      merged.back().mult += m.mult;
    } else {
      merged.push_back(std::move(m));
    }
  }
  f.members = std::move(merged);
  return f;
}

long long SetFamily::total_mult() const {
  long long total = 0;
  for (const Member& m : members) {
    if (total > kMaxMultiplicity - m.mult)
      throw std::invalid_argument("SetFamily: total multiplicity overflow beyond 2^62");
    total += m.mult;
  }
  return total;
}

HallCertificate hall_check(const SetFamily& f) {
  HallCertificate cert;
  const int m_count = static_cast<int>(f.members.size());
  const long long demand = f.total_mult();
  if (demand == 0) {
    cert.feasible = true;
    return cert;
  }

  // Nodes: 0 = source, 1..m members, m+1..m+ground elements, last = sink.
  const int source = 0;
  const int sink = 1 + m_count + f.ground;
  FlowNetwork net(sink + 1);
  const long long big = kMaxMultiplicity + 2;  // never the binding constraint
  for (int i = 0; i < m_count; ++i) {
    net.add_edge(source, 1 + i, f.members[i].mult);
    for (int e : f.members[i].set) net.add_edge(1 + i, 1 + m_count + (e - 1), big);
  }
  for (int e = 1; e <= f.ground; ++e) net.add_edge(1 + m_count + (e - 1), sink, 1);

  long long flow = net.max_flow(source, sink);
  if (flow == demand) {
    cert.feasible = true;
    for (int i = 0; i < m_count; ++i) {
      std::vector<int> used;
      for (const auto& edge : net.adj[1 + i]) {
        if (edge.to == source) continue;
        // forward member->element edges started at capacity `big`
        long long pushed = big - edge.cap;
        if (pushed > 0 && edge.to > m_count) used.push_back(edge.to - m_count - 1 + 1);
      }
      std::sort(used.begin(), used.end());
      for (int e : used) cert.transversal.push_back({i, e});
    }
    return cert;
  }

  // Min cut: members reachable from the source in the residual graph form a
  // violating subfamily (their elements are all reachable through the
  // uncuttable middle edges).
  cert.feasible = false;
  std::vector<uint8_t> seen = net.residual_reachable(source);
  for (int i = 0; i < m_count; ++i)
    if (seen[1 + i]) cert.violator.push_back(i);
  return cert;
}

bool sdr_bruteforce(const SetFamily& f) {
  long long total = f.total_mult();
  if (total > 8) throw GuardError("sdr_bruteforce: instance too large (total multiplicity > 8)");
  std::vector<const std::vector<int>*> copies;
  for (const auto& m : f.members)
    for (long long c = 0; c < m.mult; ++c) copies.push_back(&m.set);
  // smallest sets first: prunes earlier
  std::sort(copies.begin(), copies.end(),
            [](const std::vector<int>* a, const std::vector<int>* b) { return a->size() < b->size(); });
  std::set<int> used;
  std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
    if (idx == copies.size()) return true;
    for (int e : *copies[idx]) {
      if (used.count(e)) continue;
      used.insert(e);
      if (assign(idx + 1)) return true;
      used.erase(e);
    }
    return false;
  };
  return assign(0);
}

bool recheck_transversal(const SetFamily& f, const HallCertificate& cert) {
  if (!cert.feasible) return false;
  std::vector<long long> counts(f.members.size(), 0);
  std::set<int> used;
  for (auto [member, element] : cert.transversal) {
    if (member < 0 || member >= static_cast<int>(f.members.size())) return false;
    const auto& set = f.members[member].set;
    if (!std::binary_search(set.begin(), set.end(), element)) return false;
    if (!used.insert(element).second) return false;  // representatives must be distinct
    counts[member]++;
  }
  for (size_t i = 0; i < f.members.size(); ++i)
    if (counts[i] != f.members[i].mult) return false;
  return true;
}

bool recheck_violator(const SetFamily& f, const HallCertificate& cert) {
  if (cert.feasible || cert.violator.empty()) return false;
  std::set<int> elems;
  long long demand = 0;
  for (int i : cert.violator) {
    if (i < 0 || i >= static_cast<int>(f.members.size())) return false;
    demand += f.members[i].mult;
    elems.insert(f.members[i].set.begin(), f.members[i].set.end());
  }
  return static_cast<long long>(elems.size()) < demand;
}

}  // namespace cudiv
