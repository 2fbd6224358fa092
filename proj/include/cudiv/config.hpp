#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>

namespace cudiv {

/// Resource guards for the exact searches.  CU_DIV_BUDGET in the environment
/// overrides both limits with a single value (number of sparse terms /
/// search nodes).
struct Budget {
  std::size_t poly_terms = std::size_t{1} << 20;
  std::size_t search_nodes = std::size_t{1} << 26;
};

inline const Budget& budget() {
  static const Budget b = [] {
    Budget out;
    if (const char* env = std::getenv("CU_DIV_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) {
        out.poly_terms = static_cast<std::size_t>(v);
        out.search_nodes = static_cast<std::size_t>(v);
      }
    }
    return out;
  }();
  return b;
}

/// Thrown when an exact search or expansion would exceed its configured
/// budget.  Callers are expected to fall back to the scalable route or
/// report the instance, never to truncate silently.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cudiv
