#pragma once

// Closed-form minimum Hamming distances. None of the formulas depend on the
// field, on n, or on gamma / xi: only on (p, s) and the exponents.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "constacyclic/code.hpp"
#include "constacyclic/padic.hpp"

namespace constacyclic {

/// Which formula clause or table row produced a distance.
enum class Case { FullSpace, ZeroCode, Low, Beta, TauK, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11 };

inline std::string case_name(Case c) {
  switch (c) {
    case Case::FullSpace: return "FullSpace";
    case Case::ZeroCode: return "ZeroCode";
    case Case::Low: return "Low";
    case Case::Beta: return "Beta";
    case Case::TauK: return "TauK";
    default: break;
  }
  return "T" + std::to_string(static_cast<int>(c) - static_cast<int>(Case::T1) + 1);
}

/// Exponents of a minimum-weight codeword: (x^n + gamma)^first for the
/// single-factor family, (x^n - xi)^first (x^n + xi)^second for two factors.
struct Witness {
  u64 first = 0;
  u64 second = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DistanceResult {
  std::optional<u64> value;  // absent for the zero code
  Case label = Case::ZeroCode;
  bool swapped = false;  // (i, j) were exchanged before the table lookup
  std::optional<Witness> witness;
  std::optional<Polynomial> certificate;
};

/// d_H(<(x^n + gamma)^i>) for 0 <= i <= p^s.
inline DistanceResult distance_single(u64 p, u64 s, u64 i) {
  require_prime(p);
  if (s == 0) throw Error(Errc::OutOfRange, "s must be >= 1");
  const u64 ps = ipow(p, s);
  detail::check_exponent(i, ps, "i");
  if (i == 0) return {1, Case::FullSpace, false, Witness{0, 0}, std::nullopt};
  if (i == ps) return {std::nullopt, Case::ZeroCode, false, std::nullopt, std::nullopt};

  const auto cls = classify_exponent(i, p, s);
  const u64 hi = class_range(cls, p, s).hi;
  if (std::holds_alternative<partition::Low>(cls)) {
    return {2, Case::Low, false, Witness{hi, 0}, std::nullopt};
  }
  if (const auto* b = std::get_if<partition::Beta>(&cls)) {
    return {b->beta + 2, Case::Beta, false, Witness{hi, 0}, std::nullopt};
  }
  const auto& t = std::get<partition::TauK>(cls);
  return {(t.tau + 1) * ipow(p, t.k), Case::TauK, false, Witness{hi, 0}, std::nullopt};
}

/// d_H(<(x^n - xi)^i (x^n + xi)^j>) for 0 <= i, j <= p^s, p odd.
///
/// Rows are matched in table order after swapping so that i >= j; the j = 0
/// and j <= p^{s-1} rows come first so that i = p^s with small j lands in
/// row 4 rather than rows 10/11.
inline DistanceResult distance_two_factor(u64 p, u64 s, u64 i, u64 j) {
  require_prime(p);
  if (p == 2) throw Error(Errc::EvenCharacteristic, "the two-factor table needs odd p");
  if (s == 0) throw Error(Errc::OutOfRange, "s must be >= 1");
  const u64 ps = ipow(p, s);
  detail::check_exponent(i, ps, "i");
  detail::check_exponent(j, ps, "j");
  if (i == 0 && j == 0) return {1, Case::FullSpace, false, Witness{0, 0}, std::nullopt};
  if (i == ps && j == ps) return {std::nullopt, Case::ZeroCode, false, std::nullopt, std::nullopt};

  const bool swapped = i < j;
  if (swapped) std::swap(i, j);
  const u64 ps1 = ipow(p, s - 1);

  auto row = [&](Case c, u64 value, u64 a, u64 b) {
    Witness w = swapped ? Witness{b, a} : Witness{a, b};
    return DistanceResult{value, c, swapped, w, std::nullopt};
  };

  if (j == 0) return row(Case::T1, 2, ps, 0);
  if (i <= ps1) return row(Case::T2, 2, ps1, ps1);
  if (j <= ps1) {
    if (i <= 2 * ps1) return row(Case::T3, 3, 2 * ps1, 2 * ps1);
    return row(Case::T4, 4, ps, ps1);
  }

  const auto cj = classify_exponent(j, p, s);
  const u64 hi_j = class_range(cj, p, s).hi;
  if (i == ps) {
    if (const auto* b = std::get_if<partition::Beta>(&cj)) {
      return row(Case::T10, 2 * (b->beta + 2), ps, hi_j);
    }
    const auto& t = std::get<partition::TauK>(cj);
    return row(Case::T11, 2 * (t.tau + 1) * ipow(p, t.k), ps, hi_j);
  }

  const auto ci = classify_exponent(i, p, s);
  const u64 hi_i = class_range(ci, p, s).hi;
  if (const auto* bi = std::get_if<partition::Beta>(&ci)) {
    const auto& bj = std::get<partition::Beta>(cj);
    const u64 same = bi->beta + 2;
    const u64 split = 2 * (bj.beta + 2);
    if (same <= split) return row(Case::T5, same, hi_i, hi_i);
    return row(Case::T5, split, ps, hi_j);
  }
  const auto& ti = std::get<partition::TauK>(ci);
  if (const auto* bj = std::get_if<partition::Beta>(&cj)) {
    return row(Case::T6, 2 * (bj->beta + 2), ps, hi_j);
  }
  const auto& tj = std::get<partition::TauK>(cj);
  if (ti.k == tj.k) {
    const u64 pk = ipow(p, ti.k);
    if (ti.tau == tj.tau) return row(Case::T7, (ti.tau + 1) * pk, hi_i, hi_i);
    const u64 same = (ti.tau + 1) * pk;
    const u64 split = 2 * (tj.tau + 1) * pk;
    if (same <= split) return row(Case::T8, same, hi_i, hi_i);
    return row(Case::T8, split, ps, hi_j);
  }
  // i >= j forces k_i > k_j here; only j's class enters the value
  return row(Case::T9, 2 * (tj.tau + 1) * ipow(p, tj.k), ps, hi_j);
}

/// Negacyclic codes of length 2 p^s over F_{p^a}: the single-factor formula
/// when x^2 + 1 is irreducible (j must be absent), the two-factor table
/// otherwise (j required).
inline DistanceResult negacyclic_distance(u64 p, u64 a, u64 s, u64 i, std::optional<u64> j) {
  require_prime(p);
  if (p == 2) throw Error(Errc::EvenCharacteristic, "negacyclic routing needs odd p");
  if (x2_plus_1_irreducible(p, a)) {
    if (j) throw Error(Errc::WrongArity, "x^2 + 1 is irreducible here; j must be omitted");
    return distance_single(p, s, i);
  }
  if (!j) throw Error(Errc::WrongArity, "x^2 + 1 splits here; j is required");
  return distance_two_factor(p, s, i, *j);
}

/// The explicit codeword of weight result.value named by the witness.
inline Polynomial certificate_for(const CodeInstance& code, const DistanceResult& result) {
  if (!result.value || !result.witness) {
    throw Error(Errc::ZeroCode, "the zero code has no minimum-weight codeword");
  }
  const auto& w = *result.witness;
  if (code.family() == Family::Single) {
    return power_of_binomial(code.n(), code.parameter(), w.first);
  }
  const auto& xi = code.parameter();
  return mul_power_of_binomial(power_of_binomial(code.n(), -xi, w.first), code.n(), xi,
                               w.second);
}

/// Formula distance of a constructed code, with its certificate attached.
inline DistanceResult distance_of(const CodeInstance& code) {
  const u64 p = code.field().characteristic();
  DistanceResult r = code.family() == Family::Single
                         ? distance_single(p, code.s(), code.i())
                         : distance_two_factor(p, code.s(), code.i(), *code.j());
  if (r.value) r.certificate = certificate_for(code, r);
  return r;
}

}  // namespace constacyclic
