#pragma once

// Base-p digits, the Low / Beta / TauK partition of {1, ..., p^s - 1}, and the
// digit-product weight of (x^n + gamma)^N.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "constacyclic/error.hpp"
#include "constacyclic/integer.hpp"

namespace constacyclic {

struct PadicExpansion {
  u64 p = 0;
  std::vector<u64> digits;  // b_0, b_1, ... little-endian

  u64 value() const {
    u64 v = 0;
    for (auto k = digits.size(); k-- > 0;) v = v * p + digits[k];
    return v;
  }
};

/// Minimal digit vector of `value` (empty for 0), or exactly `width` digits.
inline PadicExpansion padic_expansion(u64 value, u64 p, std::optional<u64> width = std::nullopt) {
  require_prime(p);
  PadicExpansion out{p, {}};
  u64 rest = value;
  while (rest > 0) {
    out.digits.push_back(rest % p);
    rest /= p;
  }
  if (width) {
    if (out.digits.size() > *width) {
      throw Error(Errc::WidthTooSmall, std::to_string(value) + " needs more than " +
                                           std::to_string(*width) + " base-" +
                                           std::to_string(p) + " digits");
    }
    out.digits.resize(*width, 0);
  }
  return out;
}

namespace partition {

/// 1 <= i <= p^{s-1}
struct Low {
  friend bool operator==(const Low&, const Low&) = default;
};

/// beta p^{s-1} + 1 <= i <= (beta + 1) p^{s-1}, 1 <= beta <= p - 2
struct Beta {
  u64 beta;
  friend bool operator==(const Beta&, const Beta&) = default;
};

/// p^s - p^{s-k} + (tau - 1) p^{s-k-1} + 1 <= i <= p^s - p^{s-k} + tau p^{s-k-1},
/// 1 <= k <= s - 1, 1 <= tau <= p - 1
struct TauK {
  u64 k;
  u64 tau;
  friend bool operator==(const TauK&, const TauK&) = default;
};

}  // namespace partition

using PartitionClass = std::variant<partition::Low, partition::Beta, partition::TauK>;

inline std::string class_name(const PartitionClass& c) {
  if (std::holds_alternative<partition::Low>(c)) return "Low";
  if (std::holds_alternative<partition::Beta>(c)) return "Beta";
  return "TauK";
}

struct ExponentRange {
  u64 lo;
  u64 hi;
  friend bool operator==(const ExponentRange&, const ExponentRange&) = default;
};

/// Inclusive bounds of the exponents that fall in class `c` for (p, s).
inline ExponentRange class_range(const PartitionClass& c, u64 p, u64 s) {
  const u64 ps = ipow(p, s);
  const u64 ps1 = ipow(p, s - 1);
  if (std::holds_alternative<partition::Low>(c)) return {1, ps1};
  if (const auto* b = std::get_if<partition::Beta>(&c)) {
    return {b->beta * ps1 + 1, (b->beta + 1) * ps1};
  }
  const auto& t = std::get<partition::TauK>(c);
  const u64 base = ps - ipow(p, s - t.k);
  const u64 step = ipow(p, s - t.k - 1);
  return {base + (t.tau - 1) * step + 1, base + t.tau * step};
}

/// The unique partition class containing i, for 1 <= i <= p^s - 1.
inline PartitionClass classify_exponent(u64 i, u64 p, u64 s) {
  require_prime(p);
  if (s == 0) throw Error(Errc::OutOfRange, "s must be >= 1");
  const u64 ps = ipow(p, s);
  if (i < 1 || i >= ps) {
    throw Error(Errc::OutOfRange, "exponent " + std::to_string(i) + " outside [1, " +
                                      std::to_string(ps - 1) + "]");
  }
  const u64 ps1 = ipow(p, s - 1);
  if (i <= ps1) return partition::Low{};
  if (i <= (p - 1) * ps1) return partition::Beta{(i - 1) / ps1};
  for (u64 k = 1; k <= s - 1; ++k) {
    const u64 base = ps - ipow(p, s - k);
    const u64 top = ps - ipow(p, s - k - 1);
    if (i <= top) {
      const u64 step = ipow(p, s - k - 1);
      return partition::TauK{k, (i - base - 1) / step + 1};
    }
  }
  throw Error(Errc::OutOfRange, "exponent not covered by the partition");
}

/// Weight of (x^n + gamma)^N for any n >= 1 and gamma != 0: the product of
/// (digit + 1) over the base-p digits of N. N = 0 gives 1.
inline u64 weight_of_power(u64 N, u64 p) {
  u64 w = 1;
  for (const auto d : padic_expansion(N, p).digits) w *= d + 1;
  return w;
}

/// Lower bound helper, vacuously true when m >= p^s - beta p^{s-1} - 1.
inline bool weight_lower_bound_beta(u64 m, u64 beta, u64 p, u64 s) {
  if (beta < 1 || beta + 2 > p) throw Error(Errc::OutOfRange, "beta outside [1, p-2]");
  if (s == 0) throw Error(Errc::OutOfRange, "s must be >= 1");
  const u64 ps1 = ipow(p, s - 1);
  const u64 bound = ipow(p, s) - beta * ps1 - 1;
  if (m >= bound) return true;
  return weight_of_power(m + beta * ps1 + 1, p) >= beta + 2;
}

/// Lower bound helper, vacuously true when m >= p^{s-k} - (tau-1) p^{s-k-1} - 1.
inline bool weight_lower_bound_tauk(u64 m, u64 tau, u64 k, u64 p, u64 s) {
  if (tau < 1 || tau >= p) throw Error(Errc::OutOfRange, "tau outside [1, p-1]");
  if (k < 1 || k + 1 > s) throw Error(Errc::OutOfRange, "k outside [1, s-1]");
  const u64 step = ipow(p, s - k - 1);
  const u64 bound = ipow(p, s - k) - (tau - 1) * step - 1;
  if (m >= bound) return true;
  const u64 exponent = m + ipow(p, s) - ipow(p, s - k) + (tau - 1) * step + 1;
  return weight_of_power(exponent, p) >= (tau + 1) * ipow(p, k);
}

}  // namespace constacyclic
