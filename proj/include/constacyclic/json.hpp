#pragma once

// JSON views of the library's values (code descriptors, distance results,
// oracle reports). Requires nlohmann/json.

#include <nlohmann/json.hpp>

#include "constacyclic/code.hpp"
#include "constacyclic/distance.hpp"
#include "constacyclic/oracle.hpp"
#include "constacyclic/padic.hpp"

namespace constacyclic::json {

using Json = nlohmann::ordered_json;

template <class T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json polynomial(const Polynomial& f) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < f.size(); ++k) arr.push_back(to_text(f.coefficient(k)));
  return arr;
}

inline Json code_descriptor(const CodeInstance& code) {
  Json j;
  j["p"] = code.field().characteristic();
  j["a"] = code.field().degree();
  j["n"] = code.n();
  j["s"] = code.s();
  j["family"] = family_name(code.family());
  j[code.family() == Family::Single ? "gamma" : "xi"] = to_text(code.parameter());
  j["i"] = code.i();
  j["j"] = optional_value(code.j());
  j["lambda"] = to_text(code.lambda());
  j["length"] = code.length();
  j["dimension"] = code.dimension();
  j["generator"] = polynomial(code.generator());
  return j;
}

inline Json distance(Family family, u64 p, u64 s, u64 i, std::optional<u64> jexp,
                     const DistanceResult& r) {
  Json j;
  j["family"] = family_name(family);
  j["p"] = p;
  j["s"] = s;
  j["i"] = i;
  j["j"] = optional_value(jexp);
  j["distance"] = optional_value(r.value);
  j["case"] = case_name(r.label);
  j["swapped"] = r.swapped;
  if (r.certificate) j["certificate"] = polynomial(*r.certificate);
  return j;
}

inline Json classification(u64 i, u64 p, u64 s, const PartitionClass& c) {
  Json j;
  j["i"] = i;
  j["p"] = p;
  j["s"] = s;
  j["class"] = class_name(c);
  j["beta"] = nullptr;
  j["tau"] = nullptr;
  j["k"] = nullptr;
  if (const auto* b = std::get_if<partition::Beta>(&c)) j["beta"] = b->beta;
  if (const auto* t = std::get_if<partition::TauK>(&c)) {
    j["tau"] = t->tau;
    j["k"] = t->k;
  }
  return j;
}

inline Json report(const OracleReport& r, bool with_timing) {
  Json j;
  j["family"] = family_name(r.family);
  j["p"] = r.p;
  j["a"] = r.a;
  j["n"] = r.n;
  j["s"] = r.s;
  j[r.family == Family::Single ? "gamma" : "xi"] = r.parameter;
  j["i"] = r.i;
  j["j"] = optional_value(r.j);
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["formula"] = optional_value(r.formula_distance);
  j["case"] = case_name(r.case_label);
  j["oracle"] = optional_value(r.oracle_distance);
  j["mode"] = r.mode == VerifyMode::Full ? "full" : "partial";
  j["lower"] = optional_value(r.lower_bound);
  j["upper"] = optional_value(r.upper_bound);
  j["status"] = verdict_name(r.verdict);
  j["agree"] = r.agree;
  j["enumerated"] = r.enumerated;
  if (with_timing) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  }
  return j;
}

inline Json sweep(const SweepResult& r, u64 seed) {
  Json j;
  j["property"] = r.name;
  j["seed"] = seed;
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  return j;
}

}  // namespace constacyclic::json
