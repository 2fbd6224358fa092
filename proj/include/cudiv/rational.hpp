#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cudiv {

/// Exact non-negative rational, normalized (gcd 1, positive denominator).
struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  Rat(long long n, long long d = 1) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Rat: denominator must be positive");
    if (n < 0) throw std::invalid_argument("Rat: negative rational");
    normalize();
  }

  void normalize() {
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator*(long long n, Rat a) { return Rat(n * a.num, a.den); }
  friend Rat operator/(Rat a, long long n) { return Rat(a.num, a.den * n); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Rational extended with infinity (used for asymptotic divisibility bounds).
struct ExtRat {
  bool infinite = false;
  Rat value;

  ExtRat() = default;
  ExtRat(Rat r) : value(r) {}
  static ExtRat infinity() {
    ExtRat x;
    x.infinite = true;
    return x;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return a.value <= b.value;
  }

  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

}  // namespace cudiv
