#pragma once

// Ground truth that does not consult the distance formulas: an exhaustive
// minimum-weight search over all nonzero codewords, and literal evaluations of
// the weight inequalities the formulas rest on.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "constacyclic/code.hpp"
#include "constacyclic/distance.hpp"
#include "constacyclic/polynomial.hpp"

namespace constacyclic {

inline constexpr u64 kDefaultSearchCap = u64{1} << 24;

struct ScanResult {
  std::optional<u64> min_weight;  // absent for the zero code
  u64 enumerated = 0;             // nonzero codewords examined
};

namespace detail {

struct TableAdd {
  const std::uint32_t* table;
  u64 q;
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const { return table[x * q + y]; }
};

struct SlowAdd {
  const FieldData* f;
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const { return f->add(x, y); }
};

// Scans message indices [lo, hi) in odometer order (coefficient of x^0
// fastest). The codeword is updated incrementally: bumping message digit d
// from v to v + 1 adds (v + 1 - v) x^d g.
template <class Add>
ScanResult scan_range(const FieldData& f, Add add, const Coeffs& g, u64 dim, u64 length, u64 lo,
                      u64 hi) {
  const u64 q = f.q;
  const std::size_t glen = g.size();
  std::vector<std::uint32_t> step(q * glen);
  for (u64 v = 0; v < q; ++v) {
    const auto next = static_cast<std::uint32_t>((v + 1) % q);
    const std::uint32_t delta = f.sub(next, static_cast<std::uint32_t>(v));
    for (std::size_t k = 0; k < glen; ++k) step[v * glen + k] = f.mul(delta, g[k]);
  }

  std::vector<std::uint32_t> m(dim, 0);
  std::vector<std::uint32_t> c(length, 0);
  {
    u64 rest = lo;
    for (u64 d = 0; d < dim; ++d) {
      m[d] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
      if (m[d] == 0) continue;
      for (std::size_t k = 0; k < glen; ++k) {
        c[d + k] = add(c[d + k], f.mul(m[d], g[k]));
      }
    }
  }
  std::int64_t w = 0;
  for (const auto v : c) w += v != 0 ? 1 : 0;

  u64 best = std::numeric_limits<u64>::max();
  u64 count = 0;
  for (u64 idx = lo; idx < hi;) {
    if (idx != 0) {
      best = std::min<u64>(best, static_cast<u64>(w));
      ++count;
    }
    if (++idx == hi) break;
    for (u64 d = 0;; ++d) {
      const std::uint32_t v = m[d];
      const std::uint32_t* row = &step[v * glen];
      std::uint32_t* cw = &c[d];
      for (std::size_t k = 0; k < glen; ++k) {
        const std::uint32_t old = cw[k];
        const std::uint32_t now = add(old, row[k]);
        cw[k] = now;
        w += static_cast<std::int64_t>(now != 0) - static_cast<std::int64_t>(old != 0);
      }
      if (v + 1 < q) {
        m[d] = v + 1;
        break;
      }
      m[d] = 0;
    }
  }
  ScanResult out;
  out.enumerated = count;
  if (count > 0) out.min_weight = best;
  return out;
}

}  // namespace detail

/// Exhaustive scan of all q^dimension - 1 nonzero codewords (no early exit).
/// SearchSpaceTooLarge when q^dimension > cap. `threads` = 0 uses the
/// hardware concurrency; the result does not depend on it.
inline ScanResult scan_min_weight(const CodeInstance& code, u64 cap = kDefaultSearchCap,
                                  unsigned threads = 1) {
  const auto& f = code.field().raw();
  const u64 dim = code.dimension();
  if (dim == 0) return {};
  const u64 total = ipow_saturating(f.q, dim, cap);
  if (total > cap) {
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(f.q) + "^" + std::to_string(dim) +
                                               " codewords exceed the search cap " +
                                               std::to_string(cap));
  }
  const auto& g = code.generator().raw();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, std::max<u64>(1, total / 4096)));

  auto run = [&](u64 lo, u64 hi) {
    if (f.has_tables()) {
      return detail::scan_range(f, detail::TableAdd{f.add_table.data(), f.q}, g, dim,
                                code.length(), lo, hi);
    }
    return detail::scan_range(f, detail::SlowAdd{&f}, g, dim, code.length(), lo, hi);
  };

  if (threads <= 1) return run(0, total);

  std::vector<ScanResult> parts(threads);
  std::vector<std::thread> pool;
  const u64 chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const u64 lo = std::min(total, t * chunk);
    const u64 hi = std::min(total, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { parts[t] = run(lo, hi); });
  }
  for (auto& th : pool) th.join();
  ScanResult out;
  for (const auto& part : parts) {
    out.enumerated += part.enumerated;
    if (part.min_weight && (!out.min_weight || *part.min_weight < *out.min_weight)) {
      out.min_weight = part.min_weight;
    }
  }
  return out;
}

inline std::optional<u64> brute_force_min_distance(const CodeInstance& code,
                                                   u64 cap = kDefaultSearchCap,
                                                   unsigned threads = 1) {
  return scan_min_weight(code, cap, threads).min_weight;
}

enum class VerifyMode { Full, Partial };
enum class Verdict { Agree, Disagree, Inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Disagree: return "disagree";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct OracleReport {
  Family family = Family::Single;
  u64 p = 0, a = 0, n = 0, s = 0, i = 0;
  std::optional<u64> j;
  u64 length = 0, dimension = 0;
  std::string parameter;  // gamma or xi, canonical text
  std::optional<u64> formula_distance;
  Case case_label = Case::ZeroCode;
  std::optional<u64> oracle_distance;
  VerifyMode mode = VerifyMode::Full;
  std::optional<u64> lower_bound;
  std::optional<u64> upper_bound;
  Verdict verdict = Verdict::Inconclusive;
  bool agree = false;
  u64 enumerated = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  u64 cap = kDefaultSearchCap;
  std::optional<u64> max_dimension;  // larger codes get a partial check
  unsigned threads = 1;
};

/// Formula vs brute force on one code. Codes too large to enumerate get a
/// partial check: the certificate gives the upper bound and the d >= 2 bound
/// for proper nonzero codes the lower one.
inline OracleReport verify_point(const CodeInstance& code, const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport rep;
  rep.family = code.family();
  rep.p = code.field().characteristic();
  rep.a = code.field().degree();
  rep.n = code.n();
  rep.s = code.s();
  rep.i = code.i();
  rep.j = code.j();
  rep.length = code.length();
  rep.dimension = code.dimension();
  rep.parameter = to_text(code.parameter());

  const DistanceResult formula = distance_of(code);
  rep.formula_distance = formula.value;
  rep.case_label = formula.label;

  const bool enumerable =
      (!opts.max_dimension || code.dimension() <= *opts.max_dimension) &&
      ipow_saturating(code.field().order(), code.dimension(), opts.cap) <= opts.cap;

  if (enumerable) {
    const auto scan = scan_min_weight(code, opts.cap, opts.threads);
    rep.mode = VerifyMode::Full;
    rep.oracle_distance = scan.min_weight;
    rep.lower_bound = scan.min_weight;
    rep.upper_bound = scan.min_weight;
    rep.enumerated = scan.enumerated;
    rep.agree = rep.oracle_distance == rep.formula_distance;
    rep.verdict = rep.agree ? Verdict::Agree : Verdict::Disagree;
  } else {
    rep.mode = VerifyMode::Partial;
    // a nonempty code too big to enumerate is never the zero code
    rep.lower_bound = code.is_full_space() ? 1 : 2;
    bool certificate_ok = false;
    if (formula.certificate) {
      const auto& cert = *formula.certificate;
      certificate_ok = !cert.is_zero() && is_codeword(code, cert);
      if (certificate_ok) rep.upper_bound = weight(cert);
    }
    if (!certificate_ok || rep.upper_bound != formula.value ||
        *rep.lower_bound > *formula.value) {
      rep.verdict = Verdict::Disagree;
    } else if (rep.lower_bound == rep.upper_bound) {
      rep.verdict = Verdict::Agree;
    } else {
      rep.verdict = Verdict::Inconclusive;
    }
    rep.agree = rep.verdict == Verdict::Agree;
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

/// w(g (x^n + gamma)^N) >= w(g mod x^n + gamma) * w((x^n + gamma)^N), both
/// sides expanded literally.
inline bool weight_retaining_check(const Polynomial& g, u64 n, const Element& gamma, u64 N) {
  const Polynomial b = Polynomial::binomial(n, gamma);
  const Polynomial bn = pow(b, N);
  const std::size_t lhs = weight(g * bn);
  const std::size_t rhs = weight(g % b) * weight(bn);
  return lhs >= rhs;
}

/// w((x^n + gamma1)^{p^s} (x^n + gamma2)^i) = 2 w((x^n + gamma2)^i), 0 < i < p^s.
inline bool product_weight_check(const Field& field, u64 n, const Element& gamma1,
                                 const Element& gamma2, u64 s, u64 i) {
  const u64 ps = ipow(field.characteristic(), s);
  if (i == 0 || i >= ps) throw Error(Errc::HypothesisViolated, "need 0 < i < p^s");
  if (gamma1.is_zero() || gamma2.is_zero()) {
    throw Error(Errc::HypothesisViolated, "gamma1 and gamma2 must be nonzero");
  }
  const Polynomial right = pow(Polynomial::binomial(n, gamma2), i);
  const Polynomial left = pow(Polynomial::binomial(n, gamma1), ps) * right;
  return weight(left) == 2 * weight(right);
}

struct TwoFactorLemmaInput {
  u64 n = 1;
  u64 s = 1;
  u64 i = 0, j = 0;
  u64 i0 = 0, j0 = 0;
};

/// c = (x^n - xi)^{i0+i} (x^n + xi)^{j0+j} g satisfies
/// w(c) >= 2 w((x^{2n} - xi^2)^{j0+j}) whenever i >= j, i0 >= p^s - i,
/// j0 < p^s - j and g is coprime to both x^n - xi and x^n + xi.
inline bool lemma_bound_check_two_factor(const Element& xi, const TwoFactorLemmaInput& in,
                                         const Polynomial& g) {
  const Field& field = xi.field();
  const u64 ps = ipow(field.characteristic(), in.s);
  const Polynomial minus = Polynomial::binomial(in.n, -xi);
  const Polynomial plus = Polynomial::binomial(in.n, xi);
  if (in.i < in.j || in.i > ps || in.j > ps) {
    throw Error(Errc::HypothesisViolated, "need p^s >= i >= j");
  }
  if (in.i0 + in.i < ps) throw Error(Errc::HypothesisViolated, "need i0 >= p^s - i");
  if (in.j0 + in.j >= ps) throw Error(Errc::HypothesisViolated, "need j0 < p^s - j");
  if (g.is_zero() || gcd(g, minus).size() != 1 || gcd(g, plus).size() != 1) {
    throw Error(Errc::HypothesisViolated, "g must be coprime to x^n - xi and x^n + xi");
  }
  const Polynomial c = pow(minus, in.i0 + in.i) * pow(plus, in.j0 + in.j) * g;
  const Polynomial square = Polynomial::binomial(2 * in.n, -(xi * xi));
  return weight(c) >= 2 * weight(pow(square, in.j0 + in.j));
}

struct SweepResult {
  std::string name;
  u64 samples = 0;
  u64 violations = 0;
};

namespace detail {

// Explicit modular reduction keeps sweeps identical across standard libraries.
inline u64 draw(std::mt19937_64& rng, u64 lo, u64 hi) { return lo + rng() % (hi - lo + 1); }

inline Element draw_nonzero(std::mt19937_64& rng, const Field& f) {
  return f.from_index(draw(rng, 1, f.order() - 1));
}

inline Polynomial draw_poly(std::mt19937_64& rng, const Field& f, u64 max_degree) {
  const u64 deg = draw(rng, 0, max_degree);
  Coeffs c(deg + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(draw(rng, 0, f.order() - 1));
  return {f, std::move(c)};
}

inline std::vector<Field> sweep_fields(std::initializer_list<std::pair<u64, u64>> shapes) {
  std::vector<Field> out;
  for (const auto& [p, a] : shapes) out.emplace_back(p, a);
  return out;
}

}  // namespace detail

/// Random (g, n, gamma, N) with n <= 3, N <= 100 over F_2, F_3, F_4, F_5, F_9.
inline SweepResult sweep_weight_retaining(u64 seed, u64 samples) {
  std::mt19937_64 rng(seed);
  const auto fields = detail::sweep_fields({{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}});
  SweepResult out{"weight_retaining", samples, 0};
  for (u64 t = 0; t < samples; ++t) {
    const Field& f = fields[detail::draw(rng, 0, fields.size() - 1)];
    const u64 n = detail::draw(rng, 1, 3);
    const Element gamma = detail::draw_nonzero(rng, f);
    const u64 N = detail::draw(rng, 0, 100);
    const Polynomial g = detail::draw_poly(rng, f, 8);
    if (!weight_retaining_check(g, n, gamma, N)) ++out.violations;
  }
  return out;
}

/// Random (n, gamma1, gamma2, s, i) with p^s <= 125.
inline SweepResult sweep_product_weight(u64 seed, u64 samples) {
  std::mt19937_64 rng(seed);
  const auto fields = detail::sweep_fields({{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}});
  SweepResult out{"product_weight", samples, 0};
  for (u64 t = 0; t < samples; ++t) {
    const Field& f = fields[detail::draw(rng, 0, fields.size() - 1)];
    const u64 p = f.characteristic();
    const u64 max_s = p == 2 ? 5 : (p == 3 ? 4 : 3);
    const u64 s = detail::draw(rng, 1, max_s);
    const u64 i = detail::draw(rng, 1, ipow(p, s) - 1);
    const u64 n = detail::draw(rng, 1, 3);
    if (!product_weight_check(f, n, detail::draw_nonzero(rng, f), detail::draw_nonzero(rng, f),
                              s, i)) {
      ++out.violations;
    }
  }
  return out;
}

/// Random instances of the two-factor weight lemma over F_3, F_5, F_7, F_9
/// with n <= 2, s <= 2, deg g <= 3.
inline SweepResult sweep_two_factor_lemma(u64 seed, u64 samples) {
  std::mt19937_64 rng(seed);
  const auto fields = detail::sweep_fields({{3, 1}, {5, 1}, {7, 1}, {3, 2}});
  SweepResult out{"two_factor_lemma", samples, 0};
  for (u64 t = 0; t < samples;) {
    const Field& f = fields[detail::draw(rng, 0, fields.size() - 1)];
    const u64 p = f.characteristic();
    TwoFactorLemmaInput in;
    in.n = detail::draw(rng, 1, 2);
    in.s = p == 7 ? 1 : detail::draw(rng, 1, 2);
    const u64 ps = ipow(p, in.s);
    in.j = detail::draw(rng, 0, ps - 1);
    in.i = detail::draw(rng, in.j, ps);
    in.i0 = ps - in.i + detail::draw(rng, 0, 2);
    in.j0 = detail::draw(rng, 0, ps - in.j - 1);
    const Element xi = detail::draw_nonzero(rng, f);
    const Polynomial g = detail::draw_poly(rng, f, 3);
    const Polynomial minus = Polynomial::binomial(in.n, -xi);
    const Polynomial plus = Polynomial::binomial(in.n, xi);
    if (g.is_zero() || gcd(g, minus).size() != 1 || gcd(g, plus).size() != 1) continue;
    if (!lemma_bound_check_two_factor(xi, in, g)) ++out.violations;
    ++t;
  }
  return out;
}

}  // namespace constacyclic
