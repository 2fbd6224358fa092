#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cudiv {

/// Extended natural number: a value in {0, 1, 2, ...} or infinity.
/// Addition and scalar multiplication absorb infinity; the order is the
/// usual one with infinity on top.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(long long v) : v_(v) {
    if (v < 0) throw std::invalid_argument("ExtNat: negative value");
  }

  static constexpr ExtNat infinity() {
    ExtNat x;
    x.v_ = kInf;
    return x;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  constexpr long long value() const {
    if (is_infinite()) throw std::logic_error("ExtNat: value() on infinity");
    return v_;
  }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.v_ > kMaxFinite - b.v_) throw std::overflow_error("ExtNat: addition overflow");
    return ExtNat(a.v_ + b.v_);
  }

  friend constexpr ExtNat operator*(long long n, ExtNat x) {
    if (n < 0) throw std::invalid_argument("ExtNat: negative multiplier");
    if (n == 0) return ExtNat(0);
    if (x.is_infinite()) return infinity();
    if (x.v_ != 0 && n > kMaxFinite / x.v_) throw std::overflow_error("ExtNat: multiplication overflow");
    return ExtNat(n * x.v_);
  }

  friend constexpr ExtNat operator*(ExtNat x, ExtNat y) {
    if (x.is_infinite() || y.is_infinite()) {
      // 0 * infinity = 0: the neutral element stays neutral under the pairing.
      if (x.v_ == 0 || y.v_ == 0) return ExtNat(0);
      return infinity();
    }
    if (x.v_ != 0 && y.v_ > kMaxFinite / x.v_) throw std::overflow_error("ExtNat: multiplication overflow");
    return ExtNat(x.v_ * y.v_);
  }

  // The infinity sentinel is the largest representable value, so comparing
  // representations gives the extended order directly.
  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ExtNat a, ExtNat b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtNat a, ExtNat b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtNat a, ExtNat b) { return a.v_ >= b.v_; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  friend std::ostream& operator<<(std::ostream& os, ExtNat x) { return os << x.to_string(); }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max();
  static constexpr long long kMaxFinite = kInf - 1;

  long long v_ = 0;
};

/// Least n such that the unit of a rank-k matrix model is (m,n)-divisible:
/// ceil(k / floor(k/m)) when m <= k, infinity when m > k.  The same value is
/// the least n for the decomposition and weak-divisibility variants.
inline ExtNat matrix_div(long long m, long long k) {
  if (m < 1 || k < 1) throw std::invalid_argument("matrix_div: m and k must be >= 1");
  if (m > k) return ExtNat::infinity();
  long long q = k / m;
  return ExtNat((k + q - 1) / q);
}

/// Bi-additive pairing of matrix-model classes: an element x at scale a and
/// an element y at scale b pair to x*y at scale a*b, infinity-absorbing.
inline ExtNat ext_tensor_pair(ExtNat x, long long scale_a, ExtNat y, long long scale_b) {
  if (scale_a < 1 || scale_b < 1) throw std::invalid_argument("ext_tensor_pair: scales must be >= 1");
  return x * y;
}

}  // namespace cudiv
