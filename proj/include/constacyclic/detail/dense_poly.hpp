#pragma once

// Dense polynomial kernels over any coefficient ring exposing
// add/sub/mul/neg/inv on packed u32 values with 0 = zero and 1 = one.
// Vectors are little-endian and kept trimmed (no trailing zeros).

#include <cstdint>
#include <utility>
#include <vector>

#include "constacyclic/error.hpp"

namespace constacyclic::detail {

using u32 = std::uint32_t;
using Coeffs = std::vector<u32>;

template <class A>
concept CoefficientArith = requires(const A& a, u32 x) {
  { a.add(x, x) } -> std::same_as<u32>;
  { a.sub(x, x) } -> std::same_as<u32>;
  { a.mul(x, x) } -> std::same_as<u32>;
  { a.neg(x) } -> std::same_as<u32>;
  { a.inv(x) } -> std::same_as<u32>;
  { a.order() } -> std::convertible_to<std::uint64_t>;
};

inline void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

template <CoefficientArith A>
Coeffs add(const A& ar, const Coeffs& f, const Coeffs& g) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const u32 a = k < f.size() ? f[k] : 0;
    const u32 b = k < g.size() ? g[k] : 0;
    r[k] = ar.add(a, b);
  }
  trim(r);
  return r;
}

template <CoefficientArith A>
Coeffs sub(const A& ar, const Coeffs& f, const Coeffs& g) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const u32 a = k < f.size() ? f[k] : 0;
    const u32 b = k < g.size() ? g[k] : 0;
    r[k] = ar.sub(a, b);
  }
  trim(r);
  return r;
}

template <CoefficientArith A>
Coeffs mul(const A& ar, const Coeffs& f, const Coeffs& g) {
  if (f.empty() || g.empty()) return {};
  Coeffs r(f.size() + g.size() - 1, 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (g[b] == 0) continue;
      r[a + b] = ar.add(r[a + b], ar.mul(f[a], g[b]));
    }
  }
  trim(r);
  return r;
}

template <CoefficientArith A>
Coeffs scale(const A& ar, const Coeffs& f, u32 c) {
  if (c == 0) return {};
  Coeffs r(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) r[k] = ar.mul(f[k], c);
  trim(r);
  return r;
}

/// f = g*q + r with r == 0 or deg r < deg g.
template <CoefficientArith A>
std::pair<Coeffs, Coeffs> divrem(const A& ar, const Coeffs& f, const Coeffs& g) {
  if (g.empty()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (f.size() < g.size()) return {{}, f};
  Coeffs rem = f;
  Coeffs quo(f.size() - g.size() + 1, 0);
  const u32 lead_inv = ar.inv(g.back());
  const std::size_t dg = g.size() - 1;
  for (std::size_t top = f.size(); top-- > dg;) {
    const u32 c = rem[top];
    if (c == 0) continue;
    const u32 factor = ar.mul(c, lead_inv);
    const std::size_t shift = top - dg;
    quo[shift] = factor;
    for (std::size_t k = 0; k <= dg; ++k) {
      rem[shift + k] = ar.sub(rem[shift + k], ar.mul(factor, g[k]));
    }
  }
  trim(quo);
  trim(rem);
  return {std::move(quo), std::move(rem)};
}

template <CoefficientArith A>
Coeffs mod(const A& ar, const Coeffs& f, const Coeffs& g) {
  return divrem(ar, f, g).second;
}

template <CoefficientArith A>
Coeffs powmod(const A& ar, Coeffs base, std::uint64_t e, const Coeffs& m) {
  if (m.empty()) throw Error(Errc::DivisionByZeroPoly, "modulus is the zero polynomial");
  Coeffs result = mod(ar, Coeffs{1}, m);
  base = mod(ar, base, m);
  while (e > 0) {
    if (e & 1U) result = mod(ar, mul(ar, result, base), m);
    e >>= 1U;
    if (e > 0) base = mod(ar, mul(ar, base, base), m);
  }
  return result;
}

template <CoefficientArith A>
Coeffs make_monic(const A& ar, const Coeffs& f) {
  if (f.empty()) return f;
  return scale(ar, f, ar.inv(f.back()));
}

template <CoefficientArith A>
Coeffs gcd_monic(const A& ar, Coeffs f, Coeffs g) {
  if (f.empty() && g.empty()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  while (!g.empty()) {
    Coeffs r = mod(ar, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(ar, f);
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 2; t * t <= d; ++t) {
    if (d % t == 0) {
      out.push_back(t);
      while (d % t == 0) d /= t;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

/// Rabin's test: f of degree d is irreducible iff x^{q^d} = x mod f and
/// gcd(x^{q^{d/t}} - x, f) = 1 for every prime t dividing d.
template <CoefficientArith A>
bool is_irreducible(const A& ar, const Coeffs& f) {
  if (f.size() < 2) throw Error(Errc::DegreeZero, "irreducibility needs degree >= 1");
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const std::uint64_t q = ar.order();
  const Coeffs x{0, 1};
  const auto primes = prime_divisors(d);

  // frob[k] = x^{q^k} mod f for k = 0..d
  std::vector<Coeffs> frob;
  frob.reserve(d + 1);
  frob.push_back(mod(ar, x, f));
  for (std::size_t k = 1; k <= d; ++k) frob.push_back(powmod(ar, frob.back(), q, f));

  if (frob[d] != frob[0]) return false;
  for (const auto t : primes) {
    const Coeffs diff = sub(ar, frob[d / t], frob[0]);
    if (diff.empty()) return false;
    const Coeffs g = gcd_monic(ar, diff, f);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Arithmetic of the prime field F_p on values in [0, p).
struct PrimeArith {
  std::uint64_t p;

  u32 add(u32 a, u32 b) const { return static_cast<u32>((std::uint64_t{a} + b) % p); }
  u32 sub(u32 a, u32 b) const { return static_cast<u32>((std::uint64_t{a} + p - b) % p); }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>((std::uint64_t{a} * b) % p); }
  u32 neg(u32 a) const { return a == 0 ? 0 : static_cast<u32>(p - a); }
  u32 inv(u32 a) const {
    if (a == 0) throw Error(Errc::ZeroInverse, "0 has no inverse");
    // Fermat: a^{p-2}
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<u32>(result);
  }
  std::uint64_t order() const { return p; }
};

}  // namespace constacyclic::detail
