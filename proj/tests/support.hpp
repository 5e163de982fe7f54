#pragma once

#include <initializer_list>
#include <vector>

#include "constacyclic/polynomial.hpp"

namespace constacyclic::testing {

/// Polynomial over a prime field from small integer coefficients, constant first.
inline Polynomial poly(const Field& f, std::initializer_list<long> coeffs) {
  std::vector<Element> c;
  for (const long v : coeffs) c.push_back(f.from_int(v));
  return {f, c};
}

/// All monic polynomials of exact degree d, in counter order.
inline std::vector<Polynomial> monic_of_degree(const Field& f, std::size_t d) {
  std::vector<Polynomial> out;
  const u64 q = f.order();
  const u64 total = ipow(q, d);
  for (u64 v = 0; v < total; ++v) {
    Polynomial::Coeffs c(d + 1, 0);
    u64 x = v;
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    c[d] = 1;
    out.emplace_back(f, std::move(c));
  }
  return out;
}

}  // namespace constacyclic::testing
