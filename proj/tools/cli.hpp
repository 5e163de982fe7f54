#pragma once

// Command-line front end. `run` is separate from main() so tests can drive it
// with in-memory streams.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "constacyclic/code.hpp"
#include "constacyclic/distance.hpp"
#include "constacyclic/json.hpp"
#include "constacyclic/oracle.hpp"
#include "constacyclic/padic.hpp"

namespace constacyclic::cli {

enum class Exit : int { Ok = 0, Disagreement = 1, Invalid = 2 };

struct Config {
  u64 p = 0;
  u64 a = 1;
  u64 n = 1;
  u64 s = 1;
  std::optional<u64> i;
  std::optional<u64> j;
  std::optional<u64> N;
  std::optional<std::string> gamma;
  std::optional<std::string> xi;
  std::optional<std::string> psi;
  std::string family;
  bool negacyclic = false;
  bool certificate = false;
  u64 cap = kDefaultSearchCap;
  std::optional<u64> max_dim;
  unsigned threads = 1;
  bool timing = false;
  bool properties = false;
  u64 seed = 1;
  u64 samples = 0;
  std::string output = "json";
};

namespace detail {

using Json = json::Json;

inline void emit(std::ostream& out, const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.output == "json") {
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

inline std::string opt_text(const std::optional<u64>& v) { return v ? std::to_string(*v) : "-"; }

inline u64 require(const std::optional<u64>& v, const char* flag) {
  if (!v) throw Error(Errc::OutOfRange, std::string("missing required flag ") + flag);
  return *v;
}

inline Field make_field(const Config& cfg) { return Field(cfg.p, cfg.a); }

inline Family family_of(const Config& cfg) {
  if (cfg.family.empty() || cfg.family == "single") return Family::Single;
  if (cfg.family == "two") return Family::Two;
  throw Error(Errc::OutOfRange, "--family must be 'single' or 'two'");
}

inline Element gamma_of(const Config& cfg, const Field& f) {
  return cfg.gamma ? parse_element(f, *cfg.gamma) : -f.one();
}

inline Element xi_of(const Config& cfg, const Field& f) {
  return cfg.xi ? parse_element(f, *cfg.xi) : f.one();
}

/// Builds the code the flags describe; `--negacyclic` routes on x^2 + 1.
inline CodeInstance build_code(const Config& cfg, Family family, u64 i, std::optional<u64> j) {
  const Field f = make_field(cfg);
  if (cfg.negacyclic) return build_negacyclic(f, cfg.s, i, j);
  if (family == Family::Single) {
    if (j) throw Error(Errc::WrongArity, "--j is only meaningful for the two-factor family");
    return build_single(f, cfg.n, cfg.s, gamma_of(cfg, f), i);
  }
  if (!j) throw Error(Errc::WrongArity, "the two-factor family needs --j");
  return build_two_factor(f, cfg.n, cfg.s, xi_of(cfg, f), i, *j);
}

inline Family negacyclic_family(const Config& cfg) {
  return x2_plus_1_irreducible(cfg.p, cfg.a) ? Family::Single : Family::Two;
}

inline Exit cmd_distance(const Config& cfg, std::ostream& out) {
  const u64 i = require(cfg.i, "--i");
  DistanceResult r;
  Family family;
  if (cfg.negacyclic) {
    r = negacyclic_distance(cfg.p, cfg.a, cfg.s, i, cfg.j);
    family = negacyclic_family(cfg);
  } else if (cfg.j) {
    r = distance_two_factor(cfg.p, cfg.s, i, *cfg.j);
    family = Family::Two;
  } else {
    r = distance_single(cfg.p, cfg.s, i);
    family = Family::Single;
  }
  if (cfg.certificate && r.value) {
    r.certificate = certificate_for(build_code(cfg, family, i, cfg.j), r);
  }
  std::ostringstream text;
  text << "d = " << opt_text(r.value) << " (" << case_name(r.label)
       << (r.swapped ? ", swapped" : "") << ")";
  if (r.certificate) text << "\ncertificate: " << to_text(*r.certificate);
  emit(out, cfg, json::distance(family, cfg.p, cfg.s, i, cfg.j, r), text.str());
  return Exit::Ok;
}

inline Exit cmd_table(const Config& cfg, std::ostream& out) {
  const Family family = cfg.negacyclic ? negacyclic_family(cfg) : family_of(cfg);
  const u64 ps = ipow(cfg.p, cfg.s);
  if (family == Family::Two && cfg.p == 2) {
    throw Error(Errc::EvenCharacteristic, "the two-factor table needs odd p");
  }
  Json j;
  j["family"] = family_name(family);
  j["p"] = cfg.p;
  j["s"] = cfg.s;
  std::ostringstream text;
  if (family == Family::Single) {
    Json row = Json::array();
    for (u64 i = 0; i <= ps; ++i) {
      const auto d = distance_single(cfg.p, cfg.s, i).value;
      row.push_back(json::optional_value(d));
      text << (i ? " " : "") << opt_text(d);
    }
    j["distances"] = row;
  } else {
    Json grid = Json::array();
    for (u64 i = 0; i <= ps; ++i) {
      Json row = Json::array();
      for (u64 jj = 0; jj <= ps; ++jj) {
        const auto d = distance_two_factor(cfg.p, cfg.s, i, jj).value;
        row.push_back(json::optional_value(d));
        text << (jj ? " " : "") << opt_text(d);
      }
      if (i < ps) text << '\n';
      grid.push_back(row);
    }
    j["distances"] = grid;
  }
  emit(out, cfg, j, text.str());
  return Exit::Ok;
}

inline std::string report_text(const OracleReport& r) {
  std::ostringstream t;
  t << "i=" << r.i;
  if (r.j) t << " j=" << *r.j;
  t << " dim=" << r.dimension << " formula=" << opt_text(r.formula_distance)
    << " oracle=" << opt_text(r.oracle_distance)
    << (r.mode == VerifyMode::Full ? " full " : " partial ") << verdict_name(r.verdict);
  return t.str();
}

inline Exit cmd_verify(const Config& cfg, std::ostream& out) {
  const Family family = cfg.negacyclic ? negacyclic_family(cfg) : family_of(cfg);
  const u64 ps = ipow(cfg.p, cfg.s);
  VerifyOptions opts{cfg.cap, cfg.max_dim, cfg.threads};
  bool any_disagreement = false;

  std::vector<std::pair<u64, std::optional<u64>>> points;
  for (u64 i = 0; i <= ps; ++i) {
    if (cfg.i && *cfg.i != i) continue;
    if (family == Family::Single) {
      points.emplace_back(i, std::nullopt);
      continue;
    }
    for (u64 j = 0; j <= ps; ++j) {
      if (cfg.j && *cfg.j != j) continue;
      points.emplace_back(i, j);
    }
  }
  for (const auto& [i, j] : points) {
    const auto rep = verify_point(build_code(cfg, family, i, j), opts);
    any_disagreement = any_disagreement || rep.verdict == Verdict::Disagree;
    emit(out, cfg, json::report(rep, cfg.timing), report_text(rep));
  }
  if (cfg.properties) {
    const u64 base = cfg.samples;
    const SweepResult sweeps[] = {
        sweep_weight_retaining(cfg.seed, base ? base : 500),
        sweep_product_weight(cfg.seed, base ? base : 200),
        sweep_two_factor_lemma(cfg.seed, base ? base : 200),
    };
    for (const auto& sw : sweeps) {
      any_disagreement = any_disagreement || sw.violations > 0;
      emit(out, cfg, json::sweep(sw, cfg.seed),
           sw.name + ": " + std::to_string(sw.violations) + " violations in " +
               std::to_string(sw.samples) + " samples");
    }
  }
  return any_disagreement ? Exit::Disagreement : Exit::Ok;
}

inline Exit cmd_classify(const Config& cfg, std::ostream& out) {
  const u64 i = require(cfg.i, "--i");
  const auto c = classify_exponent(i, cfg.p, cfg.s);
  std::string text = class_name(c);
  if (const auto* b = std::get_if<partition::Beta>(&c)) {
    text += " beta=" + std::to_string(b->beta);
  }
  if (const auto* t = std::get_if<partition::TauK>(&c)) {
    text += " k=" + std::to_string(t->k) + " tau=" + std::to_string(t->tau);
  }
  emit(out, cfg, json::classification(i, cfg.p, cfg.s, c), text);
  return Exit::Ok;
}

inline Exit cmd_weight(const Config& cfg, std::ostream& out) {
  const u64 N = require(cfg.N, "--N");
  const auto digits = padic_expansion(N, cfg.p).digits;
  const u64 w = weight_of_power(N, cfg.p);
  Json j;
  j["N"] = N;
  j["p"] = cfg.p;
  j["digits"] = digits;
  j["weight"] = w;
  emit(out, cfg, j, std::to_string(w));
  return Exit::Ok;
}

inline Exit cmd_factor(const Config& cfg, std::ostream& out) {
  const Field f = make_field(cfg);
  if (f.characteristic() == 2) {
    throw Error(Errc::EvenCharacteristic, "x^n - xi and x^n + xi coincide when p = 2");
  }
  Element psi = f.zero();
  if (cfg.negacyclic) {
    psi = -f.one();
  } else if (cfg.psi) {
    psi = parse_element(f, *cfg.psi);
  } else if (cfg.xi) {
    const Element xi = parse_element(f, *cfg.xi);
    psi = xi * xi;
  } else {
    throw Error(Errc::OutOfRange, "factor needs --psi, --xi or --negacyclic");
  }
  if (psi.is_zero()) throw Error(Errc::OutOfRange, "psi must be nonzero");
  const auto root = psi.sqrt();
  if (!root) {
    throw Error(Errc::ReducibleFactor,
                "psi = " + to_text(psi) + " is not a square; x^{2n} - psi has no such split");
  }
  const Element xi = cfg.xi ? parse_element(f, *cfg.xi) : *root;
  const Polynomial minus = Polynomial::binomial(cfg.n, -xi);
  const Polynomial plus = Polynomial::binomial(cfg.n, xi);
  const bool irr_minus = is_irreducible(minus);
  const bool irr_plus = is_irreducible(plus);
  Json j;
  j["p"] = cfg.p;
  j["a"] = cfg.a;
  j["n"] = cfg.n;
  j["psi"] = to_text(psi);
  j["xi"] = to_text(xi);
  j["factors"] = Json::array({json::polynomial(minus), json::polynomial(plus)});
  j["irreducible"] = Json::array({irr_minus, irr_plus});
  std::ostringstream text;
  text << "x^" << 2 * cfg.n << " - (" << to_text(psi) << ") = (x^" << cfg.n << " - (" << to_text(xi)
       << "))(x^" << cfg.n << " + (" << to_text(xi) << "))"
       << "  irreducible: " << (irr_minus ? "yes" : "no") << ", " << (irr_plus ? "yes" : "no");
  emit(out, cfg, j, text.str());
  return Exit::Ok;
}

inline Exit cmd_build(const Config& cfg, std::ostream& out) {
  const u64 i = require(cfg.i, "--i");
  Family family = Family::Single;
  if (cfg.negacyclic) {
    family = negacyclic_family(cfg);
  } else if (!cfg.family.empty()) {
    family = family_of(cfg);
  } else if (cfg.j) {
    family = Family::Two;
  }
  const auto code = build_code(cfg, family, i, cfg.j);
  Json j = json::code_descriptor(code);
  j["field_modulus"] = code.field().modulus();
  std::ostringstream text;
  text << family_name(code.family()) << " code over F_" << code.field().order() << ": length "
       << code.length() << ", dimension " << code.dimension() << ", lambda "
       << to_text(code.lambda()) << "\ngenerator: " << to_text(code.generator());
  emit(out, cfg, j, text.str());
  return Exit::Ok;
}

}  // namespace detail

/// Runs one command line (args[0] is the program name).
inline int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repeated-root constacyclic codes: closed-form distances and brute-force checks"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
    sub->add_option("--s", cfg.s, "exponent s >= 1 (length n p^s or 2 n p^s)");
    sub->add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto code_flags = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "extension degree (field F_{p^a})");
    sub->add_option("--n", cfg.n, "degree of the binomial factors x^n +- c");
    sub->add_option("--gamma", cfg.gamma, "gamma as base-p digits, e.g. 2,1 (default -1)");
    sub->add_option("--xi", cfg.xi, "xi as base-p digits (default 1)");
    sub->add_flag("--negacyclic", cfg.negacyclic, "negacyclic code of length 2 p^s");
  };

  auto* distance = app.add_subcommand("distance", "closed-form minimum distance");
  common(distance);
  code_flags(distance);
  distance->add_option("--i", cfg.i, "exponent of (x^n + gamma) or (x^n - xi)")->required();
  distance->add_option("--j", cfg.j, "exponent of (x^n + xi); selects the two-factor family");
  distance->add_flag("--certificate", cfg.certificate, "attach a minimum-weight codeword");

  auto* table = app.add_subcommand("table", "distance for every exponent (pair)");
  common(table);
  table->add_option("--family", cfg.family, "single (default) or two");
  table->add_option("--a", cfg.a, "extension degree (used with --negacyclic)");
  table->add_flag("--negacyclic", cfg.negacyclic, "route on x^2 + 1 over F_{p^a}");

  auto* verify = app.add_subcommand("verify", "formula vs exhaustive search, JSON lines");
  common(verify);
  code_flags(verify);
  verify->add_option("--family", cfg.family, "single or two");
  verify->add_option("--i", cfg.i, "only this i");
  verify->add_option("--j", cfg.j, "only this j");
  verify->add_option("--cap", cfg.cap, "largest codeword count to enumerate");
  verify->add_option("--max-dim", cfg.max_dim, "partial check above this dimension");
  verify->add_option("--threads", cfg.threads, "scan threads (0 = all cores)");
  verify->add_flag("--timing", cfg.timing, "include elapsed_ms (output no longer reproducible)");
  verify->add_flag("--properties", cfg.properties, "also run the seeded property sweeps");
  verify->add_option("--seed", cfg.seed, "property sweep seed");
  verify->add_option("--samples", cfg.samples, "samples per sweep (default 500/200/200)");

  auto* classify = app.add_subcommand("classify", "partition class of an exponent");
  common(classify);
  classify->add_option("--i", cfg.i, "exponent in [1, p^s - 1]")->required();

  auto* weight_cmd = app.add_subcommand("weight", "weight of (x^n + gamma)^N");
  weight_cmd->add_option("--p", cfg.p, "characteristic (prime)")->required();
  weight_cmd->add_option("--N", cfg.N, "exponent N >= 0")->required();
  weight_cmd->add_option("--output", cfg.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* factor = app.add_subcommand("factor", "x^{2n} - psi = (x^n - xi)(x^n + xi)");
  factor->add_option("--p", cfg.p, "characteristic (prime)")->required();
  factor->add_option("--a", cfg.a, "extension degree");
  factor->add_option("--n", cfg.n, "n");
  factor->add_option("--psi", cfg.psi, "psi as base-p digits");
  factor->add_option("--xi", cfg.xi, "xi as base-p digits (psi = xi^2)");
  factor->add_flag("--negacyclic", cfg.negacyclic, "psi = -1");
  factor->add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* build = app.add_subcommand("build", "code descriptor");
  common(build);
  code_flags(build);
  build->add_option("--family", cfg.family, "single or two (default: two iff --j given)");
  build->add_option("--i", cfg.i, "exponent i")->required();
  build->add_option("--j", cfg.j, "exponent j");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::Invalid);
  }

  try {
    require_prime(cfg.p);
    Exit code = Exit::Ok;
    if (distance->parsed()) code = detail::cmd_distance(cfg, out);
    if (table->parsed()) code = detail::cmd_table(cfg, out);
    if (verify->parsed()) code = detail::cmd_verify(cfg, out);
    if (classify->parsed()) code = detail::cmd_classify(cfg, out);
    if (weight_cmd->parsed()) code = detail::cmd_weight(cfg, out);
    if (factor->parsed()) code = detail::cmd_factor(cfg, out);
    if (build->parsed()) code = detail::cmd_build(cfg, out);
    return static_cast<int>(code);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::Invalid);
  }
}

}  // namespace constacyclic::cli
