#include "cudiv/bundle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cudiv {

ProjectionExpr ProjectionExpr::make(int dim, std::vector<std::pair<std::vector<int>, long long>> entries) {
  if (dim < 0) throw std::invalid_argument("ProjectionExpr: negative dimension");
  ProjectionExpr p;
  p.dim = dim;
  for (auto& [set, mult] : entries) {
    if (mult < 0) throw std::invalid_argument("ProjectionExpr: negative multiplicity");
    if (mult == 0) continue;
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("ProjectionExpr: repeated index inside a class");
    for (int i : set)
      if (i < 1 || i > dim) throw std::invalid_argument("ProjectionExpr: index outside the dimension");
    p.coeffs[set] += mult;
  }
  return p;
}

long long ProjectionExpr::rank() const {
  long long r = 0;
  for (const auto& [set, mult] : coeffs) r += mult;
  return r;
}

long long ProjectionExpr::coeff(const std::vector<int>& I) const {
  auto it = coeffs.find(I);
  return it == coeffs.end() ? 0 : it->second;
}

int ProjectionExpr::joint_support(const ProjectionExpr& a, const ProjectionExpr& b) {
  std::set<int> used;
  for (const auto& [set, mult] : a.coeffs) used.insert(set.begin(), set.end());
  for (const auto& [set, mult] : b.coeffs) used.insert(set.begin(), set.end());
  return static_cast<int>(used.size());
}

SetFamily ProjectionExpr::family() const {
  std::vector<SetFamily::Member> members;
  for (const auto& [set, mult] : coeffs) members.push_back({set, mult});
  return SetFamily::make(dim, std::move(members));
}

ProjectionExpr ProjectionExpr::operator+(const ProjectionExpr& other) const {
  if (dim != other.dim) throw std::invalid_argument("ProjectionExpr: dimension mismatch");
  ProjectionExpr out = *this;
  for (const auto& [set, mult] : other.coeffs) out.coeffs[set] += mult;
  return out;
}

ProjectionExpr operator*(long long n, const ProjectionExpr& p) {
  if (n < 0) throw std::invalid_argument("ProjectionExpr: negative multiple");
  ProjectionExpr out;
  out.dim = p.dim;
  if (n == 0) return out;
  for (const auto& [set, mult] : p.coeffs) out.coeffs[set] = n * mult;
  return out;
}

std::string ProjectionExpr::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [set, mult] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    if (set.empty()) {
      os << "1";
      continue;
    }
    os << "p{";
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) os << ",";
      os << set[i];
    }
    os << "}";
  }
  return os.str();
}

CompareVerdict compare(const ProjectionExpr& xi, const ProjectionExpr& eta, long long margin_extra) {
  if (xi.dim != eta.dim) throw std::invalid_argument("compare: dimension mismatch");
  CompareVerdict v;
  v.rank_left = xi.rank();
  v.rank_right = eta.rank();
  v.margin_dim = ProjectionExpr::joint_support(xi, eta);

  // R1: summand dominance
  bool dominated = true;
  for (const auto& [set, mult] : xi.coeffs)
    if (mult > eta.coeff(set)) {
      dominated = false;
      break;
    }
  if (dominated) {
    v.result = CompareVerdict::Result::Yes;
    v.rule = "R1";
    return v;
  }

  // R3: rank drop
  if (v.rank_left > v.rank_right) {
    v.result = CompareVerdict::Result::No;
    v.rule = "R3";
    return v;
  }

  // R4: trivial-summand obstruction
  if (xi.coeff({}) >= 1) {
    HallCertificate cert = hall_check(eta.family());
    if (cert.feasible) {
      v.result = CompareVerdict::Result::No;
      v.rule = "R4";
      v.obstruction = std::move(cert);
      return v;
    }
  }

  // R2: stability margin over the coordinates actually used
  if (v.rank_right - v.rank_left >= v.margin_dim + margin_extra) {
    v.result = CompareVerdict::Result::Yes;
    v.rule = "R2";
    return v;
  }

  v.result = CompareVerdict::Result::Unknown;
  return v;
}

WeakDivLowerBound div2_lower_bound(const ProjectionExpr& q, long long N) {
  if (q.coeff({}) != 0)
    throw std::invalid_argument("div2_lower_bound: the class must not contain a trivial summand");
  if (N < 1) throw std::invalid_argument("div2_lower_bound: N must be >= 1");
  WeakDivLowerBound out;
  out.bound = N;
  std::vector<SetFamily::Member> members;
  for (const auto& [set, mult] : q.coeffs) members.push_back({set, N * mult});
  out.family = SetFamily::make(q.dim, std::move(members));
  out.certificate = hall_check(out.family);
  out.proved = out.certificate.feasible;
  return out;
}

DivUpperBound div_upper_bound(const ProjectionExpr& u, long long m) {
  if (m < 1) throw std::invalid_argument("div_upper_bound: m must be >= 1");
  const ProjectionExpr empty{u.dim, {}};
  DivUpperBound out;
  out.rank_u = u.rank();
  out.margin_dim = ProjectionExpr::joint_support(u, empty);
  bool found = false;
  for (const auto& [set, mult] : u.coeffs) {
    if (mult < m) continue;
    // all witness classes certify the same n = rank(u) + support(u);
    // take the canonically first (smallest set, then lexicographic)
    if (!found || set.size() < out.witness_set.size() ||
        (set.size() == out.witness_set.size() && set < out.witness_set)) {
      out.witness_set = set;
      out.witness_mult = mult;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("div_upper_bound: no class with multiplicity >= m to serve as witness");
  out.n = out.rank_u + out.margin_dim;
  return out;
}

OmegaExampleReport verify_omega_example(int d) {
  if (d < 0) throw std::invalid_argument("verify_omega_example: d must be >= 0");
  OmegaExampleReport rep;
  rep.dim = d;
  ProjectionExpr trivial = ProjectionExpr::make(d, {{{}, 1}});
  for (int i = 1; i <= d; ++i) {
    ProjectionExpr two_xi = ProjectionExpr::make(d, {{{i}, 2}});
    CompareVerdict v = compare(trivial, two_xi);
    ++rep.halving_checked;
    if (!(v.yes() && v.rule == "R2")) rep.halving_pass = false;
  }
  for (int mask = 1; mask < (1 << d); ++mask) {
    std::vector<std::pair<std::vector<int>, long long>> entries;
    for (int i = 1; i <= d; ++i)
      if (mask & (1 << (i - 1))) entries.push_back({{i}, 1});
    ProjectionExpr sum = ProjectionExpr::make(d, std::move(entries));
    CompareVerdict v = compare(trivial, sum);
    ++rep.obstruction_checked;
    if (!(v.no() && v.rule == "R4")) rep.obstruction_pass = false;
  }
  return rep;
}

}  // namespace cudiv
