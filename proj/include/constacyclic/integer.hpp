#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "constacyclic/error.hpp"

namespace constacyclic {

using u64 = std::uint64_t;

/// base^exp, throwing OutOfRange on 64-bit overflow.
constexpr u64 ipow(u64 base, u64 exp) {
  u64 result = 1;
  for (u64 e = 0; e < exp; ++e) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base) {
      throw Error(Errc::OutOfRange, "integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

/// base^exp clamped to `limit + 1` once it exceeds `limit`; never overflows.
constexpr u64 ipow_saturating(u64 base, u64 exp, u64 limit) {
  u64 result = 1;
  for (u64 e = 0; e < exp; ++e) {
    if (base != 0 && result > limit / base) return limit + 1;
    result *= base;
    if (result > limit) return limit + 1;
  }
  return result;
}

// Trial division; callers keep p small (field orders are capped).
constexpr bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_prime(u64 p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace constacyclic
