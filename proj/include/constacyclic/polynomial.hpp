#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constacyclic/detail/dense_poly.hpp"
#include "constacyclic/field.hpp"

namespace constacyclic {

/// Dense univariate polynomial over a Field; little-endian, trailing zeros
/// stripped, so the zero polynomial has no coefficients and no degree.
class Polynomial {
 public:
  using Coeffs = detail::Coeffs;

  explicit Polynomial(Field field) : field_(std::move(field)) {}

  Polynomial(Field field, Coeffs raw) : field_(std::move(field)), c_(std::move(raw)) {
    for (const auto v : c_) {
      if (v >= field_.order()) throw Error(Errc::OutOfRange, "coefficient outside the field");
    }
    detail::trim(c_);
  }

  Polynomial(Field field, const std::vector<Element>& coeffs) : field_(std::move(field)) {
    c_.reserve(coeffs.size());
    for (const auto& e : coeffs) {
      if (!(e.field() == field_)) {
        throw Error(Errc::ContextMismatch, "coefficient from a different field");
      }
      c_.push_back(e.index());
    }
    detail::trim(c_);
  }

  static Polynomial constant(const Element& c) { return {c.field(), Coeffs{c.index()}}; }

  static Polynomial monomial(const Element& c, std::size_t degree) {
    Coeffs raw(degree + 1, 0);
    raw[degree] = c.index();
    return {c.field(), std::move(raw)};
  }

  static Polynomial x(const Field& field) { return monomial(field.one(), 1); }

  /// x^n + c
  static Polynomial binomial(std::size_t n, const Element& c) {
    Coeffs raw(n + 1, 0);
    raw[n] = 1;
    raw[0] = n == 0 ? c.field().raw().add(1, c.index()) : c.index();
    return {c.field(), std::move(raw)};
  }

  const Field& field() const { return field_; }
  const Coeffs& raw() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// Absent for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }

  Element coefficient(std::size_t k) const {
    return {field_, k < c_.size() ? c_[k] : 0U};
  }
  Element leading() const {
    if (c_.empty()) return field_.zero();
    return {field_, c_.back()};
  }

  /// Coefficients padded with zeros to `length` entries.
  std::vector<Element> to_vector(std::size_t length) const {
    if (c_.size() > length) throw Error(Errc::LengthMismatch, "polynomial longer than vector");
    std::vector<Element> out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) out.push_back(coefficient(k));
    return out;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    check_same(f, g);
    return {f.field_, detail::add(f.field_.raw(), f.c_, g.c_)};
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    check_same(f, g);
    return {f.field_, detail::sub(f.field_.raw(), f.c_, g.c_)};
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_same(f, g);
    return {f.field_, detail::mul(f.field_.raw(), f.c_, g.c_)};
  }
  friend Polynomial operator*(const Element& c, const Polynomial& f) {
    if (!(c.field() == f.field_)) throw Error(Errc::ContextMismatch, "scalar from another field");
    return {f.field_, detail::scale(f.field_.raw(), f.c_, c.index())};
  }
  Polynomial operator-() const { return Polynomial(field_) - *this; }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.c_ == g.c_ && f.field_ == g.field_;
  }

  static void check_same(const Polynomial& f, const Polynomial& g) {
    if (!(f.field_ == g.field_)) {
      throw Error(Errc::ContextMismatch, "polynomials over different fields");
    }
  }

 private:
  Field field_;
  Coeffs c_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = g*quotient + remainder with remainder = 0 or deg remainder < deg g.
inline DivRem divrem(const Polynomial& f, const Polynomial& g) {
  Polynomial::check_same(f, g);
  auto [q, r] = detail::divrem(f.field().raw(), f.raw(), g.raw());
  return {Polynomial(f.field(), std::move(q)), Polynomial(f.field(), std::move(r))};
}

inline Polynomial operator%(const Polynomial& f, const Polynomial& g) {
  return divrem(f, g).remainder;
}

/// f^e mod m by repeated squaring.
inline Polynomial powmod(const Polynomial& f, std::uint64_t e, const Polynomial& m) {
  Polynomial::check_same(f, m);
  return {f.field(), detail::powmod(f.field().raw(), f.raw(), e, m.raw())};
}

/// f^e with no reduction, by repeated squaring.
inline Polynomial pow(const Polynomial& f, std::uint64_t e) {
  Polynomial result = Polynomial::constant(f.field().one());
  Polynomial base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Hamming weight: number of nonzero coefficients.
inline std::size_t weight(const Polynomial& f) {
  std::size_t w = 0;
  for (const auto v : f.raw()) w += v != 0 ? 1 : 0;
  return w;
}

inline Polynomial monic(const Polynomial& f) {
  return {f.field(), detail::make_monic(f.field().raw(), f.raw())};
}

/// Monic gcd; BothZero when f = g = 0.
inline Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial::check_same(f, g);
  return {f.field(), detail::gcd_monic(f.field().raw(), f.raw(), g.raw())};
}

/// Irreducibility over the coefficient field (Rabin's criterion); DegreeZero
/// for constants.
inline bool is_irreducible(const Polynomial& f) {
  return detail::is_irreducible(f.field().raw(), f.raw());
}

/// f * (x^m + c) in one pass.
inline Polynomial mul_binomial(const Polynomial& f, std::size_t m, const Element& c) {
  if (!(c.field() == f.field())) throw Error(Errc::ContextMismatch, "scalar from another field");
  if (f.is_zero()) return f;
  const auto& ar = f.field().raw();
  const auto& src = f.raw();
  Polynomial::Coeffs out(src.size() + m, 0);
  for (std::size_t k = 0; k < src.size(); ++k) out[k] = ar.mul(src[k], c.index());
  for (std::size_t k = 0; k < src.size(); ++k) out[k + m] = ar.add(out[k + m], src[k]);
  return {f.field(), std::move(out)};
}

/// f / (x^m + c) when the division is exact, otherwise nothing. m >= 1.
inline std::optional<Polynomial> div_binomial(const Polynomial& f, std::size_t m,
                                              const Element& c) {
  if (m == 0) throw Error(Errc::OutOfRange, "binomial degree must be >= 1");
  if (f.is_zero()) return f;
  if (f.size() <= m) return std::nullopt;
  const auto& ar = f.field().raw();
  Polynomial::Coeffs rem = f.raw();
  Polynomial::Coeffs quo(rem.size() - m, 0);
  for (std::size_t top = rem.size(); top-- > m;) {
    const auto lead = rem[top];
    if (lead == 0) continue;
    quo[top - m] = lead;
    rem[top] = 0;
    rem[top - m] = ar.sub(rem[top - m], ar.mul(lead, c.index()));
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (rem[k] != 0) return std::nullopt;
  }
  return Polynomial(f.field(), std::move(quo));
}

/// Canonical text: the coefficients' element texts joined by commas, constant
/// term first. Every element has exactly a digits, so the flat list splits
/// unambiguously. The zero polynomial is the empty string.
inline std::string to_text(const Polynomial& f) {
  std::string out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) out += ',';
    out += to_text(f.coefficient(k));
  }
  return out;
}

inline Polynomial parse_polynomial(const Field& field, std::string_view text) {
  if (text.empty()) return Polynomial(field);
  const auto ints = detail::parse_int_list(text);
  const std::size_t a = field.degree();
  if (ints.size() % a != 0) {
    throw Error(Errc::ParseError, "digit count is not a multiple of " + std::to_string(a));
  }
  std::vector<Element> coeffs;
  for (std::size_t k = 0; k < ints.size(); k += a) {
    coeffs.push_back(field.from_digits(std::span<const std::int64_t>(ints).subspan(k, a)));
  }
  return {field, coeffs};
}

}  // namespace constacyclic
