#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cudiv {

inline constexpr long long kMaxMultiplicity = 1LL << 62;

/// Multiset of finite index sets over the ground set {1..ground}, with
/// possibly huge multiplicities.  Canonical form: sets sorted ascending,
/// members ordered by (size, lexicographic), duplicate sets merged,
/// zero-multiplicity members dropped.
struct SetFamily {
  struct Member {
    std::vector<int> set;
    long long mult = 0;
  };

  int ground = 0;
  std::vector<Member> members;

  /// Canonicalizes and validates; throws std::invalid_argument on indices
  /// outside 1..ground or multiplicities outside [0, 2^62].
  static SetFamily make(int ground, std::vector<Member> members);

  long long total_mult() const;
};

/// Transversal certificate: for a feasible family, one (member, element)
/// assignment per demanded copy, members in canonical order and elements
/// ascending within a member; for an infeasible one, a violating subfamily
/// whose union is smaller than its total demand.
struct HallCertificate {
  bool feasible = false;
  std::vector<std::pair<int, int>> transversal;  // (member index, element)
  std::vector<int> violator;                     // member indices
};

/// Decides whether the multiset (each set repeated by its multiplicity)
/// admits a system of distinct representatives, by exact integral max-flow
/// on the member/element network.  Runs in time polynomial in (members,
/// ground) independent of the multiplicities; no unary expansion.
HallCertificate hall_check(const SetFamily& f);

/// Exhaustive backtracking transversal search; the reference oracle for
/// hall_check.  Requires total multiplicity <= 8.
bool sdr_bruteforce(const SetFamily& f);

bool recheck_transversal(const SetFamily& f, const HallCertificate& cert);
bool recheck_violator(const SetFamily& f, const HallCertificate& cert);

}  // namespace cudiv
