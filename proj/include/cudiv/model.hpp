#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cudiv/extnat.hpp"
#include "cudiv/rational.hpp"

namespace cudiv {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite ordered abelian monoid with a designated compact unit: the
/// desk-scale stand-in for a Cuntz semigroup fragment.  Element 0 is the
/// neutral element.  Models are immutable after construction; all member
/// functions are const and safe for concurrent readers.
///
/// Convention: in a finite model every increasing sequence stabilizes, so
/// every element is compact and the compact-containment relation coincides
/// with the order.  All divisibility checks therefore use the compact form
/// of the defining inequalities.
struct FiniteCuModel {
  std::string name;
  int size = 0;
  std::vector<int> add_tab;      // size*size, row-major
  std::vector<uint8_t> leq_tab;  // size*size, leq_tab[a*size+b] != 0 iff a <= b
  int unit = 0;
  std::optional<int> top;
  std::vector<std::string> labels;  // empty => print indices

  // In-memory annotations (not part of the file schema).
  std::optional<long long> matrix_rank;  // rank metadata for matrix-style models
  std::optional<long long> sat_cap;      // saturation cap of a truncated encoding

  int add(int a, int b) const { return add_tab[static_cast<size_t>(a) * size + b]; }
  bool leq(int a, int b) const { return leq_tab[static_cast<size_t>(a) * size + b] != 0; }

  /// n*x by iterated addition, with early exit once the sequence k*x
  /// stabilizes (it is increasing in any valid model).
  int mul(long long n, int x) const;

  std::string label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) return labels[x];
    return std::to_string(x);
  }
};

/// Supremum of the increasing sequence (k*x); exists in every valid finite
/// model.  Throws ModelError if the sequence fails to stabilize (possible
/// only for tables that violate the order axioms).
int infinite_multiple(const FiniteCuModel& m, int x);

struct ElementFlags {
  bool properly_infinite = false;  // 2x <= x
  bool full = false;               // infinite multiple is the largest element
  bool compact = true;             // always, by the finite-model convention
};

ElementFlags element_flags(const FiniteCuModel& m, int x);

/// Hard validation of the FiniteCuModel invariants.  Throws ModelError with
/// the offending tuple in the message.
void validate_model(const FiniteCuModel& m);

// ---------------------------------------------------------------------------
// Axiom report
// ---------------------------------------------------------------------------

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string note;
  std::vector<int> witness;  // offending tuple; empty when pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Checks the commutative-monoid and order laws, the category axioms in
/// their finite-model form, and the Riesz-style properties (P1)/(P2) by
/// exhaustive quantification.  Failures are report content with concrete
/// witnesses, not errors.
AxiomReport check_axioms(const FiniteCuModel& m);

/// Re-evaluates a failed check's witness tuple; true iff it still violates
/// the law it was reported for.
bool axiom_witness_violates(const FiniteCuModel& m, const AxiomCheck& check);

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Truncated-table encoding of the extended naturals {0,1,...,inf} with the
/// unit at k.  Elements are 0..cap plus a top representing infinity; finite
/// sums above cap saturate to the top.  Exactness note: any comparison
/// anchored at an element <= cap/2 (in particular at the unit, once
/// cap >= 2k+2) decides exactly as in the untruncated semigroup, because a
/// saturated value and the true value sit on the same side of the anchor.
/// cap = -1 selects the default 4k+2, which in addition keeps sums of
/// arguments <= 2k exact.
FiniteCuModel ext_nat_table(long long k, long long cap = -1);

/// Coordinatewise product: realizes the direct-sum semigroup of the two
/// factors at finite scale.  Unit is the pair of units; the top exists iff
/// both factors have one.
FiniteCuModel product_model(const FiniteCuModel& a, const FiniteCuModel& b);

/// Finite grid {0, u/q, 2u/q, ..., cap_num*u/q, inf} inside the rational
/// cone with unit u; addition saturates to infinity above the grid.
FiniteCuModel rational_grid_model(const Rat& unit, long long subdiv, long long cap_steps);

FiniteCuModel one_element_model();

/// {0, a, top} with a+a = top: the smallest model with a non-trivial
/// infinite multiple.
FiniteCuModel small_top_model(int unit_index);

/// {0, 1, ..., k, top} chain with a properly infinite top and unit k.
FiniteCuModel chain_model(long long k);

/// Boolean lattice on n atoms with join as addition (every element properly
/// infinite); unit is the top.
FiniteCuModel join_lattice_model(int atoms);

/// Deliberately broken table (0 < a but a+a = 0): passes the monoid laws and
/// fails order compatibility.  For validator and report tests.
FiniteCuModel non_monotone_model();

struct ZooEntry {
  std::string name;
  FiniteCuModel model;
};

/// The curated model zoo used by the property suites: extended-natural
/// tables, coordinatewise products, a rational grid, and the hand-built
/// tables.  Every entry passes check_axioms.
const std::vector<ZooEntry>& builtin_zoo();

// ---------------------------------------------------------------------------
// Interchange format
// ---------------------------------------------------------------------------

/// Parses and validates a model document (see README for the schema:
/// name, size, add matrix, leq pair list, unit, top, optional labels).
FiniteCuModel load_model(const std::string& json_text);
FiniteCuModel load_model_file(const std::string& path);

/// Canonical serialization: leq pairs sorted lexicographically.
std::string model_record(const FiniteCuModel& m);

}  // namespace cudiv
