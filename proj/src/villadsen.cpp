#include "cudiv/villadsen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cudiv/config.hpp"

namespace cudiv {
namespace {

constexpr long long kMaxFamilyMembers = 100000;
constexpr long long kMaxGround = 1000000;

ConstructionSpec assemble(ConstructionSpec::Variant variant, long long N, int k_index, int n,
                          int ground_offset, const std::vector<long long>& block_sizes) {
  long long total = 0;
  for (long long s : block_sizes) total += s;
  if (ground_offset + total > kMaxGround)
    throw GuardError("construction ground set exceeds the size guard");

  ConstructionSpec spec;
  spec.variant = variant;
  spec.N = N;
  spec.k_index = k_index;
  spec.n = n;
  spec.ground_offset = ground_offset;
  int next = ground_offset + 1;
  for (long long s : block_sizes) {
    std::vector<int> block(static_cast<size_t>(s));
    std::iota(block.begin(), block.end(), next);
    next += static_cast<int>(s);
    spec.J.push_back(std::move(block));
  }
  spec.d_n = static_cast<int>(total);

  std::vector<std::pair<std::vector<int>, long long>> entries;
  entries.push_back({{}, 1});
  long long mult = 1;
  for (int j = 1; j <= n; ++j) {
    entries.push_back({spec.J[static_cast<size_t>(j) - 1], mult});
    mult *= 2;
  }
  spec.q = ProjectionExpr::make(ground_offset + spec.d_n, std::move(entries));
  return spec;
}

}  // namespace

std::string to_string(ConstructionSpec::Variant v) {
  switch (v) {
    case ConstructionSpec::Variant::Simple1: return "simple1";
    case ConstructionSpec::Variant::Simple2: return "simple2";
    case ConstructionSpec::Variant::InfTensor: return "inf_tensor";
  }
  return "?";
}

ConstructionSpec::Variant variant_from_string(const std::string& s) {
  if (s == "simple1") return ConstructionSpec::Variant::Simple1;
  if (s == "simple2") return ConstructionSpec::Variant::Simple2;
  if (s == "inf_tensor" || s == "inf-tensor") return ConstructionSpec::Variant::InfTensor;
  throw std::invalid_argument("unknown construction variant: " + s);
}

ConstructionSpec build_simple1(long long N, int n) {
  if (N < 1 || n < 1) throw std::invalid_argument("build_simple1: need N >= 1 and n >= 1");
  std::vector<long long> sizes;
  long long w = N;
  for (int j = 1; j <= n; ++j) {
    sizes.push_back(w);
    w *= 2;
  }
  return assemble(ConstructionSpec::Variant::Simple1, N, 1, n, 0, sizes);
}

ConstructionSpec build_simple2(int n) {
  if (n < 1) throw std::invalid_argument("build_simple2: need n >= 1");
  std::vector<long long> sizes;
  for (int j = 1; j <= n; ++j) sizes.push_back((1LL << (2 * j - 1)) * j);
  return assemble(ConstructionSpec::Variant::Simple2, 1, 1, n, 0, sizes);
}

ConstructionSpec build_inf_tensor_factor(long long N, int k, int n, int ground_offset) {
  if (N < 1 || k < 1 || n < 1)
    throw std::invalid_argument("build_inf_tensor_factor: need N, k, n >= 1");
  std::vector<long long> sizes;
  for (int j = 1; j <= n; ++j) sizes.push_back(inf_tensor_size(k, j, N));
  return assemble(ConstructionSpec::Variant::InfTensor, N, k, n, ground_offset, sizes);
}

bool pair_order_less(int k, int j, int l, int i) {
  if (k + j != l + i) return k + j < l + i;
  return k < l;
}

std::vector<std::vector<int>> s_enum(int m, int k, int j) {
  if (m < k || k < 1 || j < 0) throw std::invalid_argument("s_enum: need m >= k >= 1 and j >= 0");
  // Positions are independent: position k is pinned to j, position l != k
  // admits exactly the i with (l, i) below (k, j).
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<size_t>(m), 0);
  std::vector<int> limit(static_cast<size_t>(m) + 1, 0);  // 1-based positions
  for (int l = 1; l <= m; ++l) {
    if (l == k) continue;
    int max_i = k + j - l - (l < k ? 0 : 1);  // equal-sum pairs need l < k
    if (max_i < 0) return out;                // some position has no admissible value
    limit[static_cast<size_t>(l)] = max_i;
  }
  tuple[static_cast<size_t>(k) - 1] = j;
  // odometer over the admissible ranges
  size_t count = 0;
  std::vector<int> pos;  // free positions
  for (int l = 1; l <= m; ++l)
    if (l != k) pos.push_back(l);
  while (true) {
    out.push_back(tuple);
    if (++count > budget().search_nodes) throw GuardError("s_enum: enumeration budget exceeded");
    size_t p = 0;
    while (p < pos.size()) {
      int l = pos[p];
      if (tuple[static_cast<size_t>(l) - 1] < limit[static_cast<size_t>(l)]) {
        tuple[static_cast<size_t>(l) - 1]++;
        break;
      }
      tuple[static_cast<size_t>(l) - 1] = 0;
      ++p;
    }
    if (p == pos.size()) break;
    if (pos.empty()) break;
  }
  return out;
}

long long inf_tensor_size(int k, int j, long long N) {
  if (k < 1 || j < 1 || N < 1) throw std::invalid_argument("inf_tensor_size: need k, j, N >= 1");
  long long best = 0;
  for (int m = k; m <= k + j; ++m) {
    long long sum = 0;
    for (const auto& tuple : s_enum(m, k, j)) {
      long long term = N;
      for (int i : tuple) term *= (i >= 1) ? (1LL << (i - 1)) : 1;
      sum += term;
    }
    best = std::max(best, sum);
  }
  return best;
}

ProjectionExpr strip_trivial(const ProjectionExpr& q) {
  ProjectionExpr out = q;
  out.coeffs.erase(std::vector<int>{});
  return out;
}

DivmLowerBound divm_lower_bound(const ConstructionSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("divm_lower_bound: need k >= 1");
  DivmLowerBound out;
  out.m = 1LL << k;
  out.bound = out.m * k;
  const long long rank = spec.q.rank();
  if (out.m > rank) {
    out.status = DivmLowerBound::Status::InfiniteByRank;
    out.note = "infinite by rank: the stage class has rank " + std::to_string(rank) +
               " < " + std::to_string(out.m);
    return out;
  }

  const long long num_fresh = out.m * k;          // fresh disjoint blocks I_1..I_N
  const long long fresh_size = out.m - 1;         // each of size m-1
  const long long members = (spec.n + 1) * num_fresh;
  const long long ground = spec.ground_offset + spec.d_n + num_fresh * fresh_size;
  if (members > kMaxFamilyMembers) throw GuardError("divm_lower_bound: family member guard exceeded");
  if (ground > kMaxGround) throw GuardError("divm_lower_bound: ground set guard exceeded");

  std::vector<std::vector<int>> fresh;
  int next = spec.ground_offset + spec.d_n + 1;
  for (long long i = 0; i < num_fresh; ++i) {
    std::vector<int> block(static_cast<size_t>(fresh_size));
    std::iota(block.begin(), block.end(), next);
    next += static_cast<int>(fresh_size);
    fresh.push_back(std::move(block));
  }

  std::vector<SetFamily::Member> fam;
  for (int j = 0; j <= spec.n; ++j) {
    long long mult = (j <= 1) ? 1 : (1LL << (j - 1));
    const std::vector<int> empty;
    const std::vector<int>& Jj = (j == 0) ? empty : spec.J[static_cast<size_t>(j) - 1];
    for (const auto& I : fresh) {
      std::vector<int> u = Jj;
      u.insert(u.end(), I.begin(), I.end());
      fam.push_back({std::move(u), mult});
    }
  }
  out.family = SetFamily::make(static_cast<int>(ground), std::move(fam));
  out.certificate = hall_check(out.family);
  out.status = out.certificate.feasible ? DivmLowerBound::Status::Proved : DivmLowerBound::Status::NotProved;
  return out;
}

CertifiedInterval verify_thm_simple(long long N, int n) {
  if (N < 1 || n < 2) throw std::invalid_argument("verify_thm_simple: need N >= 1 and n >= 2");
  ConstructionSpec stage_n = build_simple1(N, n);
  ConstructionSpec stage_2 = build_simple1(N, 2);

  CertifiedInterval interval;
  interval.quantity_kind = "divisibility numbers of the stage units, m = 2";
  interval.m = 2;
  interval.lower_cert = div2_lower_bound(strip_trivial(stage_n.q), N);
  interval.lower = N;
  interval.upper_cert = div_upper_bound(stage_2.q, 2);
  interval.upper = ExtNat(interval.upper_cert.n);
  interval.provenance =
      "lower bound certified at stage " + std::to_string(n) +
      ", upper bound at stage 2; both transfer to the inductive-limit object because the "
      "divisibility numbers of a compact unit equal the infimum over stages";
  if (!interval.lower_cert.proved)
    interval.provenance += "; WARNING: lower-bound transversal check failed";
  return interval;
}

DivmLowerBound verify_lm_simple2(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("verify_lm_simple2: need k >= 1 and n >= 1");
  if (n < k) {
    DivmLowerBound out;
    out.m = 1LL << k;
    out.bound = out.m * k;
    out.status = DivmLowerBound::Status::InfiniteByRank;
    out.note = "infinite by rank: the stage class has rank " + std::to_string(1LL << n) + " < " +
               std::to_string(out.m);
    return out;
  }
  return divm_lower_bound(build_simple2(n), k);
}

InfTensorResult verify_thm_inf_tensor(long long N, int m, int n) {
  if (N < 1 || m < 1 || n < 1)
    throw std::invalid_argument("verify_thm_inf_tensor: need N, m, n >= 1");
  InfTensorResult out;
  out.bound = N;

  int offset = 0;
  for (int k = 1; k <= m; ++k) {
    ConstructionSpec factor = build_inf_tensor_factor(N, k, n, offset);
    offset += factor.d_n;
    out.factors.push_back(std::move(factor));
  }

  // non-zero stage tuples (i_1..i_m) with entries <= n
  long long tuple_count = 1;
  for (int t = 0; t < m; ++t) {
    tuple_count *= (n + 1);
    if (tuple_count > kMaxFamilyMembers) throw GuardError("verify_thm_inf_tensor: member guard exceeded");
  }

  std::vector<SetFamily::Member> fam;
  std::vector<int> tuple(static_cast<size_t>(m), 0);
  for (long long code = 1; code < tuple_count; ++code) {
    long long c = code;
    for (int t = 0; t < m; ++t) {
      tuple[static_cast<size_t>(t)] = static_cast<int>(c % (n + 1));
      c /= (n + 1);
    }
    std::vector<int> u;
    long long mult = N;
    for (int t = 0; t < m; ++t) {
      int i = tuple[static_cast<size_t>(t)];
      if (i == 0) continue;
      const auto& block = out.factors[static_cast<size_t>(t)].J[static_cast<size_t>(i) - 1];
      u.insert(u.end(), block.begin(), block.end());
      mult *= (i >= 2) ? (1LL << (i - 1)) : 1;
    }
    fam.push_back({std::move(u), mult});
  }
  out.family = SetFamily::make(offset, std::move(fam));
  out.certificate = hall_check(out.family);
  out.proved = out.certificate.feasible;
  return out;
}

}  // namespace cudiv
