#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cudiv/setfamily.hpp"

namespace cudiv {

using Coeff = boost::multiprecision::cpp_int;

/// Element of Z[z_1..z_d] / (z_1^2, ..., z_d^2): a sparse map from subsets
/// of {1..d} to arbitrary-precision integers.  Coefficients count transversal
/// completions in the geometric applications and outgrow any fixed width.
class MultilinearPoly {
 public:
  using Key = std::vector<int>;  // sorted distinct indices in 1..dim

  MultilinearPoly() = default;
  explicit MultilinearPoly(int dim) : dim_(dim) {}

  static MultilinearPoly zero(int dim) { return MultilinearPoly(dim); }

  static MultilinearPoly constant(int dim, Coeff c) {
    MultilinearPoly p(dim);
    if (c != 0) p.terms_[{}] = std::move(c);
    return p;
  }

  /// Sum of the variables indexed by I; the empty set gives the constant 1
  /// (the class of a trivial line summand is the unit for the product).
  static MultilinearPoly linear_form(const std::vector<int>& I, int dim);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Key, Coeff>& terms() const { return terms_; }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Key k, const Coeff& c);

  MultilinearPoly operator+(const MultilinearPoly& other) const;
  MultilinearPoly operator-(const MultilinearPoly& other) const;

  /// Ring product with the square-zero truncation: monomials sharing an
  /// index vanish.  Throws GuardError beyond the sparse-term budget.
  MultilinearPoly operator*(const MultilinearPoly& other) const;

  bool operator==(const MultilinearPoly& other) const {
    return dim_ == other.dim_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::map<Key, Coeff> terms_;
};

/// Product over the family of linear_form(I)^mult.  Short-circuits to zero
/// when the degree (total multiplicity of the nonempty sets) exceeds the
/// dimension; trivial-set members contribute the unit factor.  Beyond the
/// term budget throws GuardError: callers fall back to hall_check, the
/// scalable equivalent oracle.
MultilinearPoly euler_of_family(const SetFamily& f);

}  // namespace cudiv
