#include "cudiv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cudiv/config.hpp"

namespace cudiv {

MultilinearPoly MultilinearPoly::linear_form(const std::vector<int>& I, int dim) {
  MultilinearPoly p(dim);
  if (I.empty()) {
    p.terms_[{}] = 1;
    return p;
  }
  for (int i : I) {
    if (i < 1 || i > dim) throw std::invalid_argument("linear_form: index out of range");
    p.terms_[{i}] = 1;
  }
  if (p.terms_.size() != I.size()) throw std::invalid_argument("linear_form: repeated index");
  return p;
}

void MultilinearPoly::add_term(Key k, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  MultilinearPoly out = *this;
  for (const auto& [k, c] : other.terms_) out.add_term(k, c);
  return out;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  MultilinearPoly out = *this;
  for (const auto& [k, c] : other.terms_) out.add_term(k, -c);
  return out;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  MultilinearPoly out(dim_);
  Key merged;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : other.terms_) {
      // merge the sorted index sets; a shared index kills the monomial
      merged.clear();
      merged.reserve(k1.size() + k2.size());
      size_t i = 0, j = 0;
      bool collision = false;
      while (i < k1.size() && j < k2.size()) {
        if (k1[i] == k2[j]) {
          collision = true;
          break;
        }
        merged.push_back(k1[i] < k2[j] ? k1[i++] : k2[j++]);
      }
      if (collision) continue;
      merged.insert(merged.end(), k1.begin() + i, k1.end());
      merged.insert(merged.end(), k2.begin() + j, k2.end());
      out.add_term(merged, c1 * c2);
      if (out.terms_.size() > budget().poly_terms)
        throw GuardError("polynomial term budget exceeded; use the transversal oracle instead");
    }
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (k.empty()) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) os << "*";
      os << "z" << k[i];
    }
  }
  return os.str();
}

MultilinearPoly euler_of_family(const SetFamily& f) {
  long long degree = 0;
  for (const auto& m : f.members)
    if (!m.set.empty()) {
      if (m.mult > static_cast<long long>(f.ground) - degree) return MultilinearPoly::zero(f.ground);
      degree += m.mult;
    }
  MultilinearPoly product = MultilinearPoly::constant(f.ground, 1);
  for (const auto& m : f.members) {
    if (m.set.empty()) continue;  // unit factor
    MultilinearPoly form = MultilinearPoly::linear_form(m.set, f.ground);
    for (long long c = 0; c < m.mult; ++c) {
      product = product * form;
      if (product.is_zero()) return product;
    }
  }
  return product;
}

}  // namespace cudiv
