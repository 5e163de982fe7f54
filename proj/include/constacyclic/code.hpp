#pragma once

// Repeated-root constacyclic codes of length n p^s generated by
// (x^n + gamma)^i, and of length 2 n p^s generated by
// (x^n - xi)^i (x^n + xi)^j.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "constacyclic/field.hpp"
#include "constacyclic/padic.hpp"
#include "constacyclic/polynomial.hpp"

namespace constacyclic {

/// (x^n + c)^e, expanded through the base-p digits of e:
/// prod_t (x^{n p^t} + c^{p^t})^{b_t}.
inline Polynomial mul_power_of_binomial(Polynomial f, u64 n, const Element& c, u64 e) {
  const u64 p = c.field().characteristic();
  u64 shift = n;
  Element coeff = c;
  for (const auto digit : padic_expansion(e, p).digits) {
    for (u64 r = 0; r < digit; ++r) f = mul_binomial(f, shift, coeff);
    shift *= p;
    coeff = coeff.pow(p);
  }
  return f;
}

inline Polynomial power_of_binomial(u64 n, const Element& c, u64 e) {
  return mul_power_of_binomial(Polynomial::constant(c.field().one()), n, c, e);
}

/// f / (x^n + c)^e when exact.
inline std::optional<Polynomial> div_power_of_binomial(Polynomial f, u64 n, const Element& c,
                                                       u64 e) {
  const u64 p = c.field().characteristic();
  u64 shift = n;
  Element coeff = c;
  for (const auto digit : padic_expansion(e, p).digits) {
    for (u64 r = 0; r < digit; ++r) {
      auto q = div_binomial(f, shift, coeff);
      if (!q) return std::nullopt;
      f = std::move(*q);
    }
    shift *= p;
    coeff = coeff.pow(p);
  }
  return f;
}

/// x^2 + 1 is irreducible over F_{p^a} iff p = 3 mod 4 and a is odd
/// (p = 2 gives (x + 1)^2).
constexpr bool x2_plus_1_irreducible(u64 p, u64 a) { return p % 4 == 3 && a % 2 == 1; }

enum class Family { Single, Two };

inline std::string family_name(Family f) { return f == Family::Single ? "single" : "two"; }

struct SingleFactorSpec {
  Field field;
  u64 n;
  u64 s;
  Element gamma;
  u64 i;
};

struct TwoFactorSpec {
  Field field;
  u64 n;
  u64 s;
  Element xi;
  u64 i;
  u64 j;
};

class CodeInstance {
 public:
  using Spec = std::variant<SingleFactorSpec, TwoFactorSpec>;

  Family family() const {
    return std::holds_alternative<SingleFactorSpec>(spec_) ? Family::Single : Family::Two;
  }
  const Spec& spec() const { return spec_; }
  const Field& field() const { return generator_.field(); }

  u64 n() const { return std::visit([](const auto& sp) { return sp.n; }, spec_); }
  u64 s() const { return std::visit([](const auto& sp) { return sp.s; }, spec_); }
  u64 i() const { return std::visit([](const auto& sp) { return sp.i; }, spec_); }
  std::optional<u64> j() const {
    if (const auto* t = std::get_if<TwoFactorSpec>(&spec_)) return t->j;
    return std::nullopt;
  }
  /// gamma for the single-factor family, xi for the two-factor family.
  const Element& parameter() const {
    if (const auto* t = std::get_if<TwoFactorSpec>(&spec_)) return t->xi;
    return std::get<SingleFactorSpec>(spec_).gamma;
  }

  const Polynomial& generator() const { return generator_; }
  /// x^N - lambda
  const Polynomial& modulus() const { return modulus_; }
  const Element& lambda() const { return lambda_; }
  u64 length() const { return length_; }
  u64 dimension() const { return dimension_; }

  bool is_zero_code() const { return dimension_ == 0; }
  bool is_full_space() const { return dimension_ == length_; }

  /// g | c, tested by peeling the generator's binomial factors off c.
  bool divides_by_generator(const Polynomial& c) const {
    if (const auto* t = std::get_if<TwoFactorSpec>(&spec_)) {
      auto rest = div_power_of_binomial(c, t->n, -t->xi, t->i);
      return rest && div_power_of_binomial(*rest, t->n, t->xi, t->j).has_value();
    }
    const auto& sp = std::get<SingleFactorSpec>(spec_);
    return div_power_of_binomial(c, sp.n, sp.gamma, sp.i).has_value();
  }

 private:
  CodeInstance(Spec spec, Polynomial generator, Element lambda, u64 length)
      : spec_(std::move(spec)),
        generator_(std::move(generator)),
        modulus_(Polynomial::monomial(lambda.field().one(), length) -
                 Polynomial::constant(lambda)),
        lambda_(std::move(lambda)),
        length_(length),
        dimension_(length - *generator_.degree()) {
    if (!divides_by_generator(modulus_)) {
      throw Error(Errc::ReducibleFactor, "generator does not divide x^N - lambda");
    }
  }

  friend CodeInstance build_single(const Field&, u64, u64, const Element&, u64);
  friend CodeInstance build_two_factor(const Field&, u64, u64, const Element&, u64, u64);

  Spec spec_;
  Polynomial generator_;
  Polynomial modulus_;
  Element lambda_;
  u64 length_;
  u64 dimension_;
};

namespace detail {

inline void check_code_shape(const Field& field, u64 n, u64 s, const Element& param,
                             const char* name) {
  if (n == 0) throw Error(Errc::OutOfRange, "n must be >= 1");
  if (s == 0) throw Error(Errc::OutOfRange, "s must be >= 1");
  if (!(param.field() == field)) {
    throw Error(Errc::ContextMismatch, std::string(name) + " belongs to another field");
  }
  if (param.is_zero()) throw Error(Errc::OutOfRange, std::string(name) + " must be nonzero");
}

inline void check_exponent(u64 e, u64 ps, const char* name) {
  if (e > ps) {
    throw Error(Errc::OutOfRange, std::string(name) + " = " + std::to_string(e) +
                                      " exceeds p^s = " + std::to_string(ps));
  }
}

}  // namespace detail

/// <(x^n + gamma)^i> in F_q[x]/<x^{n p^s} - lambda>, lambda = -gamma^{p^s}.
inline CodeInstance build_single(const Field& field, u64 n, u64 s, const Element& gamma, u64 i) {
  detail::check_code_shape(field, n, s, gamma, "gamma");
  const u64 p = field.characteristic();
  const u64 ps = ipow(p, s);
  detail::check_exponent(i, ps, "i");
  const u64 length = n * ps;
  if (!is_irreducible(Polynomial::binomial(n, gamma))) {
    throw Error(Errc::ReducibleFactor, "x^" + std::to_string(n) + " + gamma is reducible");
  }
  Element lambda = -gamma.pow(ps);
  return {SingleFactorSpec{field, n, s, gamma, i}, power_of_binomial(n, gamma, i),
          std::move(lambda), length};
}

/// <(x^n - xi)^i (x^n + xi)^j> in F_q[x]/<x^{2 n p^s} - lambda>, lambda = (xi^2)^{p^s}.
inline CodeInstance build_two_factor(const Field& field, u64 n, u64 s, const Element& xi, u64 i,
                                     u64 j) {
  if (field.characteristic() == 2) {
    throw Error(Errc::EvenCharacteristic, "the two-factor family needs odd p");
  }
  detail::check_code_shape(field, n, s, xi, "xi");
  const u64 p = field.characteristic();
  const u64 ps = ipow(p, s);
  detail::check_exponent(i, ps, "i");
  detail::check_exponent(j, ps, "j");
  if (!is_irreducible(Polynomial::binomial(n, -xi))) {
    throw Error(Errc::ReducibleFactor, "x^" + std::to_string(n) + " - xi is reducible");
  }
  if (!is_irreducible(Polynomial::binomial(n, xi))) {
    throw Error(Errc::ReducibleFactor, "x^" + std::to_string(n) + " + xi is reducible");
  }
  const Element psi = xi * xi;
  Element lambda = psi.pow(ps);
  auto generator = mul_power_of_binomial(power_of_binomial(n, -xi, i), n, xi, j);
  return {TwoFactorSpec{field, n, s, xi, i, j}, std::move(generator), std::move(lambda),
          2 * n * ps};
}

/// Negacyclic code of length 2 p^s over F_{p^a}: <(x^2 + 1)^i> when x^2 + 1 is
/// irreducible, otherwise <(x - xi)^i (x + xi)^j> with xi^2 = -1.
inline CodeInstance build_negacyclic(const Field& field, u64 s, u64 i, std::optional<u64> j) {
  const u64 p = field.characteristic();
  if (p == 2) throw Error(Errc::EvenCharacteristic, "negacyclic routing needs odd p");
  if (x2_plus_1_irreducible(p, field.degree())) {
    if (j) throw Error(Errc::WrongArity, "x^2 + 1 is irreducible here; j must be omitted");
    return build_single(field, 2, s, field.one(), i);
  }
  if (!j) throw Error(Errc::WrongArity, "x^2 + 1 splits here; j is required");
  const auto xi = (-field.one()).sqrt();
  if (!xi) throw Error(Errc::ReducibleFactor, "-1 has no square root");
  return build_two_factor(field, 1, s, *xi, i, *j);
}

/// message * g mod (x^N - lambda); MessageTooLong unless deg message < dimension.
inline Polynomial encode(const CodeInstance& code, const Polynomial& message) {
  if (!(message.field() == code.field())) {
    throw Error(Errc::ContextMismatch, "message over another field");
  }
  if (!message.is_zero() && *message.degree() >= code.dimension()) {
    throw Error(Errc::MessageTooLong, "message degree must be < " +
                                          std::to_string(code.dimension()));
  }
  return (message * code.generator()) % code.modulus();
}

inline bool is_codeword(const CodeInstance& code, const Polynomial& c) {
  if (!(c.field() == code.field())) throw Error(Errc::ContextMismatch, "word over another field");
  if (c.size() > code.length()) throw Error(Errc::LengthMismatch, "word longer than the code");
  return code.divides_by_generator(c);
}

/// (lambda c_{N-1}, c_0, ..., c_{N-2})
inline std::vector<Element> lambda_shift(const CodeInstance& code, const std::vector<Element>& c) {
  if (c.size() != code.length()) {
    throw Error(Errc::LengthMismatch, "word length " + std::to_string(c.size()) + " != " +
                                          std::to_string(code.length()));
  }
  std::vector<Element> out;
  out.reserve(c.size());
  out.push_back(code.lambda() * c.back());
  for (std::size_t k = 0; k + 1 < c.size(); ++k) out.push_back(c[k]);
  return out;
}

}  // namespace constacyclic
