#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cudiv/extnat.hpp"
#include "cudiv/setfamily.hpp"

namespace cudiv {

/// Formal non-negative combination of line-bundle classes over the
/// d-fold product of 2-spheres: a sparse map from index sets I in {1..d}
/// to multiplicities.  The empty set is the trivial rank-1 class.
struct ProjectionExpr {
  int dim = 0;
  std::map<std::vector<int>, long long> coeffs;  // keys sorted; values >= 1

  static ProjectionExpr make(int dim, std::vector<std::pair<std::vector<int>, long long>> entries);

  long long rank() const;
  long long coeff(const std::vector<int>& I) const;
  /// Number of coordinates appearing in some class of either expression.
  static int joint_support(const ProjectionExpr& a, const ProjectionExpr& b);

  /// The multiset of this expression's index sets, multiplicity-weighted
  /// (including a trivial-class member when present).
  SetFamily family() const;

  ProjectionExpr operator+(const ProjectionExpr& other) const;
  friend ProjectionExpr operator*(long long n, const ProjectionExpr& p);

  std::string to_string() const;
};

/// A sound three-valued comparison verdict.  Yes and No always carry the
/// rule that produced them plus a re-checkable certificate; Unknown makes
/// no claim.
struct CompareVerdict {
  enum class Result { Yes, No, Unknown } result = Result::Unknown;
  std::string rule;  // "R1".."R4"
  // R2/R3 data
  long long rank_left = 0, rank_right = 0;
  int margin_dim = 0;
  // R4 data
  HallCertificate obstruction;

  bool yes() const { return result == Result::Yes; }
  bool no() const { return result == Result::No; }
};

/// Rules, evaluated in the fixed order R1, R3, R4, R2:
///   R1 (Yes) summand dominance: every class multiplicity of xi is at most
///        the matching multiplicity in eta.
///   R3 (No)  rank drop: rank(xi) > rank(eta).
///   R4 (No)  trivial-class obstruction: xi contains a trivial summand and
///        eta's family admits a transversal, so the top product class of
///        eta does not vanish and the trivial class cannot embed.
///   R2 (Yes) stability margin: rank(eta) - rank(xi) >= margin, where the
///        margin is the number of coordinates the two expressions actually
///        use (half the real dimension of the supporting sphere product,
///        rounded up).  margin_extra configures a stricter margin.
CompareVerdict compare(const ProjectionExpr& xi, const ProjectionExpr& eta, long long margin_extra = 0);

/// Certifies that the least n making the unit-extended class 1+q weakly
/// (2,n)-divisible exceeds N: feasibility of the family {(I, N*mult_I)}
/// witnesses a non-vanishing N-th power of the top class of q.
/// Requires q to have no trivial summand.
struct WeakDivLowerBound {
  bool proved = false;
  long long bound = 0;  // the strict lower bound N
  SetFamily family;
  HallCertificate certificate;
};
WeakDivLowerBound div2_lower_bound(const ProjectionExpr& q, long long N);

/// Upper bound for the least n with m*x <= u <= n*x: picks a class with
/// multiplicity >= m as the witness (so m*x <= u by summand dominance) and
/// returns the least n certified by the stability margin,
/// n = rank(u) + support(u).
struct DivUpperBound {
  long long n = 0;
  std::vector<int> witness_set;
  long long witness_mult = 0;
  long long rank_u = 0;
  int margin_dim = 0;
};
DivUpperBound div_upper_bound(const ProjectionExpr& u, long long m);

/// Finite truncation of the infinitely-decomposable-but-not-properly-
/// infinite example: with v the trivial class and x_i the coordinate
/// classes, v <= 2*x_i for every i while v embeds into no sum of distinct
/// coordinate classes.
struct OmegaExampleReport {
  int dim = 0;
  bool halving_pass = true;      // compare(v, 2*x_i) = Yes(R2) for all i
  bool obstruction_pass = true;  // compare(v, sum over F) = No(R4) for all nonempty F
  int halving_checked = 0;
  int obstruction_checked = 0;
};
OmegaExampleReport verify_omega_example(int d);

/// Certified two-sided bound on a divisibility quantity, with re-checkable
/// certificates on both ends.  The lower bound is strict.
struct CertifiedInterval {
  std::string quantity_kind;
  long long m = 0;
  long long lower = 0;
  ExtNat upper;
  WeakDivLowerBound lower_cert;
  DivUpperBound upper_cert;
  std::string provenance;
};

}  // namespace cudiv
