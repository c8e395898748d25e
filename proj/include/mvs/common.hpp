#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvs {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Thrown on malformed inputs (bad indices, non-ideals, arity mismatches).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when two routes that must agree by construction disagree.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Carrier bound for exhaustive operations. Overridable via MVS_SIZE_GUARD.
inline int size_guard() {
  static int guard = [] {
    if (const char* s = std::getenv("MVS_SIZE_GUARD")) {
      int v = std::atoi(s);
      if (v > 0 && v <= 64) return v;
    }
    return 64;
  }();
  return guard;
}

inline void check_size_guard(int n, const char* what) {
  if (n > size_guard())
    throw InputError(std::string(what) + ": carrier size " + std::to_string(n) +
                     " exceeds size guard " + std::to_string(size_guard()));
}

/// Subsets of a carrier with at most 64 elements.
using Mask = std::uint64_t;

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (has_bit(m, i)) out.push_back(i);
  return out;
}

inline Mask vec_to_mask(const std::vector<int>& v) {
  Mask m = 0;
  for (int i : v) m |= Mask{1} << i;
  return m;
}

}  // namespace mvs
