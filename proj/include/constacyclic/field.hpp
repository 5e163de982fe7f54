#pragma once

// Finite fields F_{p^a} = F_p[y]/(m(y)) where m is the lexicographically
// smallest monic irreducible of degree a (coefficients compared from the
// constant term up). Elements are packed as sum(c_k p^k) in a u32.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "constacyclic/detail/dense_poly.hpp"
#include "constacyclic/error.hpp"
#include "constacyclic/integer.hpp"

namespace constacyclic {

inline constexpr u64 kDefaultFieldCap = u64{1} << 20;
// Packed values must fit in a u32.
inline constexpr u64 kHardFieldLimit = u64{1} << 32;
// Full add/mul tables are built up to this order.
inline constexpr u64 kTableLimit = 256;

namespace detail {

struct FieldData {
  u64 p = 0;
  u64 a = 0;
  u64 q = 0;
  Coeffs modulus;  // over F_p, monic, degree a
  std::vector<u32> add_table;
  std::vector<u32> mul_table;

  bool has_tables() const { return !mul_table.empty(); }

  std::vector<u32> unpack(u32 v) const {
    std::vector<u32> d(a, 0);
    for (u64 k = 0; k < a; ++k) {
      d[k] = static_cast<u32>(v % p);
      v = static_cast<u32>(v / p);
    }
    return d;
  }

  u32 pack(const std::vector<u32>& d) const {
    u64 v = 0;
    for (u64 k = d.size(); k-- > 0;) v = v * p + d[k];
    return static_cast<u32>(v);
  }

  u32 add_slow(u32 x, u32 y) const {
    if (a == 1) return static_cast<u32>((u64{x} + y) % p);
    u64 out = 0, place = 1;
    for (u64 k = 0; k < a; ++k) {
      out += ((x % p + y % p) % p) * place;
      x = static_cast<u32>(x / p);
      y = static_cast<u32>(y / p);
      place *= p;
    }
    return static_cast<u32>(out);
  }

  u32 neg_slow(u32 x) const {
    if (a == 1) return x == 0 ? 0 : static_cast<u32>(p - x);
    u64 out = 0, place = 1;
    for (u64 k = 0; k < a; ++k) {
      const u64 d = x % p;
      out += ((p - d) % p) * place;
      x = static_cast<u32>(x / p);
      place *= p;
    }
    return static_cast<u32>(out);
  }

  u32 mul_slow(u32 x, u32 y) const {
    if (a == 1) return static_cast<u32>(u64{x} * y % p);
    const PrimeArith fp{p};
    Coeffs fx = unpack(x), fy = unpack(y);
    trim(fx);
    trim(fy);
    Coeffs prod = detail::mod(fp, detail::mul(fp, fx, fy), modulus);
    prod.resize(a, 0);
    return pack(prod);
  }

  u32 add(u32 x, u32 y) const { return has_tables() ? add_table[x * q + y] : add_slow(x, y); }
  u32 mul(u32 x, u32 y) const { return has_tables() ? mul_table[x * q + y] : mul_slow(x, y); }
  u32 neg(u32 x) const { return neg_slow(x); }
  u32 sub(u32 x, u32 y) const { return add(x, neg(y)); }

  u32 pow(u32 x, u64 e) const {
    u32 result = 1;
    while (e > 0) {
      if (e & 1U) result = mul(result, x);
      e >>= 1U;
      if (e > 0) x = mul(x, x);
    }
    return result;
  }

  u32 inv(u32 x) const {
    if (x == 0) throw Error(Errc::ZeroInverse, "0 has no multiplicative inverse");
    return pow(x, q - 2);
  }

  u64 order() const { return q; }
};

/// Smallest monic irreducible of degree a over F_p, scanning constant term first.
inline Coeffs smallest_irreducible(u64 p, u64 a) {
  const PrimeArith fp{p};
  if (a == 1) return Coeffs{0, 1};
  // counter digit k (most significant first) is coefficient of y^k, k < a
  std::vector<u32> lower(a, 0);
  for (;;) {
    Coeffs cand(lower.begin(), lower.end());
    cand.push_back(1);
    if (cand[0] != 0 && is_irreducible(fp, cand)) return cand;
    // advance: coefficient a-1 changes fastest, constant term slowest
    u64 k = a;
    while (k-- > 0) {
      if (++lower[k] < p) break;
      lower[k] = 0;
      if (k == 0) throw Error(Errc::OutOfRange, "no irreducible polynomial found");
    }
  }
}

}  // namespace detail

class Element;

/// Immutable handle to F_{p^a}; cheap to copy, safe to share across threads.
class Field {
 public:
  Field(u64 p, u64 a, u64 cap = kDefaultFieldCap) {
    require_prime(p);
    if (a == 0) throw Error(Errc::OutOfRange, "extension degree must be >= 1");
    const u64 limit = std::min(cap, kHardFieldLimit - 1);
    const u64 q = ipow_saturating(p, a, limit);
    if (q > limit) {
      throw Error(Errc::CapExceeded,
                  std::to_string(p) + "^" + std::to_string(a) + " exceeds the field size cap");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->a = a;
    data->q = q;
    data->modulus = detail::smallest_irreducible(p, a);
    if (q <= kTableLimit) {
      data->add_table.resize(q * q);
      data->mul_table.resize(q * q);
      for (u64 x = 0; x < q; ++x) {
        for (u64 y = 0; y < q; ++y) {
          data->add_table[x * q + y] = data->add_slow(static_cast<std::uint32_t>(x),
                                                      static_cast<std::uint32_t>(y));
          data->mul_table[x * q + y] = data->mul_slow(static_cast<std::uint32_t>(x),
                                                      static_cast<std::uint32_t>(y));
        }
      }
    }
    data_ = std::move(data);
  }

  u64 characteristic() const { return data_->p; }
  u64 degree() const { return data_->a; }
  u64 order() const { return data_->q; }

  /// Coefficients of the defining polynomial over F_p, little-endian, monic.
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  const detail::FieldData& raw() const { return *data_; }

  Element zero() const;
  Element one() const;
  Element from_index(u64 index) const;
  /// Image of an integer in the prime subfield; negative values wrap mod p.
  Element from_int(std::int64_t value) const;
  /// Little-endian base-p digits (at most a of them); each reduced mod p.
  Element from_digits(std::span<const std::int64_t> digits) const;
  /// All q elements, 0 first, in packed-index order.
  std::vector<Element> elements() const;
  /// Smallest-index generator of the multiplicative group.
  Element primitive_element() const;

  friend bool operator==(const Field& x, const Field& y) {
    return x.data_ == y.data_ ||
           (x.data_->p == y.data_->p && x.data_->a == y.data_->a &&
            x.data_->modulus == y.data_->modulus);
  }

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

class Element {
 public:
  Element(Field field, std::uint32_t index) : field_(std::move(field)), value_(index) {}

  const Field& field() const { return field_; }
  std::uint32_t index() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Base-p digits c_0..c_{a-1} (little-endian in y).
  std::vector<std::uint32_t> digits() const { return field_.raw().unpack(value_); }

  friend Element operator+(const Element& x, const Element& y) {
    check_same(x, y);
    return {x.field_, x.field_.raw().add(x.value_, y.value_)};
  }
  friend Element operator-(const Element& x, const Element& y) {
    check_same(x, y);
    return {x.field_, x.field_.raw().sub(x.value_, y.value_)};
  }
  friend Element operator*(const Element& x, const Element& y) {
    check_same(x, y);
    return {x.field_, x.field_.raw().mul(x.value_, y.value_)};
  }
  friend Element operator/(const Element& x, const Element& y) { return x * y.inv(); }
  Element operator-() const { return {field_, field_.raw().neg(value_)}; }

  Element& operator+=(const Element& y) { return *this = *this + y; }
  Element& operator-=(const Element& y) { return *this = *this - y; }
  Element& operator*=(const Element& y) { return *this = *this * y; }

  friend bool operator==(const Element& x, const Element& y) {
    return x.value_ == y.value_ && x.field_ == y.field_;
  }

  Element inv() const { return {field_, field_.raw().inv(value_)}; }

  /// x^e by repeated squaring, with 0^0 = 1.
  Element pow(u64 e) const { return {field_, field_.raw().pow(value_, e)}; }

  /// A square root when one exists; the lexicographically smaller of the two
  /// (digits compared from the constant term up). Exhaustive search.
  std::optional<Element> sqrt() const;

  /// Lexicographic order on digits, constant term first.
  static bool lex_less(const Element& x, const Element& y) {
    const auto dx = x.digits(), dy = y.digits();
    return dx < dy;
  }

 private:
  static void check_same(const Element& x, const Element& y) {
    if (!(x.field_ == y.field_)) {
      throw Error(Errc::ContextMismatch, "elements belong to different fields");
    }
  }

  Field field_;
  std::uint32_t value_;
};

inline Element Field::zero() const { return {*this, 0}; }
inline Element Field::one() const { return {*this, 1}; }

inline Element Field::from_index(u64 index) const {
  if (index >= order()) throw Error(Errc::OutOfRange, "element index out of range");
  return {*this, static_cast<std::uint32_t>(index)};
}

inline Element Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(characteristic());
  const std::int64_t r = ((value % p) + p) % p;
  return {*this, static_cast<std::uint32_t>(r)};
}

inline Element Field::from_digits(std::span<const std::int64_t> digits) const {
  if (digits.size() > degree()) {
    throw Error(Errc::OutOfRange, "element has more than a digits");
  }
  const auto p = static_cast<std::int64_t>(characteristic());
  std::vector<std::uint32_t> d(degree(), 0);
  for (std::size_t k = 0; k < digits.size(); ++k) {
    d[k] = static_cast<std::uint32_t>(((digits[k] % p) + p) % p);
  }
  return {*this, raw().pack(d)};
}

inline std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (u64 v = 0; v < order(); ++v) out.emplace_back(*this, static_cast<std::uint32_t>(v));
  return out;
}

inline Element Field::primitive_element() const {
  const u64 group = order() - 1;
  if (group == 1) return one();
  const auto primes = detail::prime_divisors(group);
  for (u64 v = 2; v < order(); ++v) {
    const auto g = static_cast<std::uint32_t>(v);
    const bool generates = std::all_of(primes.begin(), primes.end(), [&](u64 r) {
      return raw().pow(g, group / r) != 1;
    });
    if (generates) return {*this, g};
  }
  throw Error(Errc::OutOfRange, "no primitive element found");
}

inline std::optional<Element> Element::sqrt() const {
  std::optional<Element> best;
  const auto& f = field_.raw();
  for (u64 v = 0; v < f.q; ++v) {
    const auto r = static_cast<std::uint32_t>(v);
    if (f.mul(r, r) != value_) continue;
    Element cand{field_, r};
    if (!best || lex_less(cand, *best)) best = cand;
  }
  return best;
}

/// Canonical text: comma-separated base-p digits, little-endian ("2,1" is 2 + y in F_9).
inline std::string to_text(const Element& e) {
  std::string out;
  for (const auto d : e.digits()) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

namespace detail {

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw Error(Errc::ParseError, "empty element text");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token(text.substr(pos, comma - pos));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw Error(Errc::ParseError, "bad integer '" + token + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Inverse of to_text; accepts up to a digits (missing high digits are 0) and
/// negative digits, which are reduced mod p ("-1" is p - 1).
inline Element parse_element(const Field& field, std::string_view text) {
  const auto digits = detail::parse_int_list(text);
  if (digits.size() > field.degree()) {
    throw Error(Errc::ParseError, "'" + std::string(text) + "' has more than " +
                                      std::to_string(field.degree()) + " digits");
  }
  return field.from_digits(digits);
}

inline Element inv(const Element& x) { return x.inv(); }
inline Element pow(const Element& x, u64 e) { return x.pow(e); }
inline std::optional<Element> sqrt(const Element& x) { return x.sqrt(); }

}  // namespace constacyclic
