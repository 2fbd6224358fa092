#pragma once

#include <string>
#include <vector>

#include "cudiv/bundle.hpp"

namespace cudiv {

/// Staged construction data: pairwise disjoint index blocks J_1..J_n on a
/// ground set of size d_n, and the stage class
///   q_n = 1 + p_{J_1} + 2*p_{J_2} + ... + 2^(n-1)*p_{J_n}
/// of rank 2^n.  The variants differ only in the block sizes:
///   simple1(N):    |J_j| = N * 2^(j-1)
///   simple2:       |J_j| = 2^(2j-1) * j
///   inf_tensor(N): |J_j| = inf_tensor_size(k, j, N) for the k-th factor
struct ConstructionSpec {
  enum class Variant { Simple1, Simple2, InfTensor } variant = Variant::Simple1;
  long long N = 1;   // simple1 / inf_tensor parameter (ignored by simple2)
  int k_index = 1;   // inf_tensor factor index
  int n = 1;         // stage
  int ground_offset = 0;  // blocks start at ground_offset + 1
  std::vector<std::vector<int>> J;
  int d_n = 0;  // total block size
  ProjectionExpr q;
};

std::string to_string(ConstructionSpec::Variant v);
ConstructionSpec::Variant variant_from_string(const std::string& s);

ConstructionSpec build_simple1(long long N, int n);
ConstructionSpec build_simple2(int n);
ConstructionSpec build_inf_tensor_factor(long long N, int k, int n, int ground_offset);

/// Strict total order on pairs (k, j) in N x N0: by k+j first, then by k.
bool pair_order_less(int k, int j, int l, int i);

/// All m-tuples (i_1..i_m) of non-negative integers with i_k = j and
/// (l, i_l) strictly below (k, j) in the pair order for every l != k.
/// Empty whenever m > k + j.
std::vector<std::vector<int>> s_enum(int m, int k, int j);

/// Block size for the tensor-factor construction: the maximum over
/// k <= m <= k+j of the weighted tuple count over s_enum(m; k, j)
/// (the enumeration is empty beyond m = k+j, which caps the range).
long long inf_tensor_size(int k, int j, long long N);

/// The class q with the trivial summand removed (the lower-bound oracle
/// takes the non-trivial part).
ProjectionExpr strip_trivial(const ProjectionExpr& q);

/// Lower-bound oracle for the least n making q_n weakly (2^k, n)-divisible:
/// appends 2^k * k fresh disjoint index blocks of size 2^k - 1 to the ground
/// set and runs the transversal check on the unions {J_j U I_i} with the
/// stage multiplicities.  When 2^k exceeds the rank 2^n the quantity is
/// infinite outright.
struct DivmLowerBound {
  enum class Status { Proved, NotProved, InfiniteByRank } status = Status::NotProved;
  long long m = 0;      // 2^k
  long long bound = 0;  // the strict lower bound 2^k * k (when applicable)
  SetFamily family;
  HallCertificate certificate;
  std::string note;
};
DivmLowerBound divm_lower_bound(const ConstructionSpec& spec, int k);

/// End-to-end verifier: lower bound N from the transversal oracle on the
/// stage-n family, upper bound 3N+4 from the stability margin at stage 2.
/// Stage bounds transfer to the inductive-limit object because the
/// divisibility numbers of a compact unit equal the infimum over stages.
CertifiedInterval verify_thm_simple(long long N, int n);

DivmLowerBound verify_lm_simple2(int k, int n);

struct InfTensorResult {
  bool proved = false;
  long long bound = 0;
  std::vector<ConstructionSpec> factors;
  SetFamily family;
  HallCertificate certificate;
};
/// Tensor-factor verifier: enumerates the non-zero stage tuples, forms the
/// union family with the product multiplicities, and runs the transversal
/// check, certifying that the tensor class is not weakly (2, N)-divisible.
InfTensorResult verify_thm_inf_tensor(long long N, int m, int n);

}  // namespace cudiv
