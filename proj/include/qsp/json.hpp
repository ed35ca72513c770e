#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsp/gfq.hpp"
#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/setpart.hpp"
#include "qsp/tableaux.hpp"
#include "qsp/verify.hpp"

// JSON forms. Polynomial coefficients are decimal strings so nothing is lost
// to double rounding; counts that fit in 64 bits are plain numbers.

namespace qsp::json {

using nlohmann::json;

inline json count(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return json(x.convert_to<std::uint64_t>());
  return json(x.str());
}

inline json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return Polynomial(std::move(coeffs));
}

inline json to_json(const IntegerPartition& lambda) { return json(lambda.parts()); }

inline json to_json(const Tableau& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

inline Tableau tableau_from_json(const json& j) {
  Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
  if (t.shape().parts() != j.at("shape").get<std::vector<int>>()) throw std::invalid_argument("tableau JSON shape does not match rows");
  return t;
}

inline json to_json(const SetPartition& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks()) blocks.push_back(b.elements());
  return blocks;
}

inline json to_json(const Comparison& c) {
  return {{"category", c.category}, {"key", c.key}, {"observed", count(c.observed)}, {"expected", count(c.expected)}};
}

inline json to_json(const CensusReport& rep, bool with_comparisons) {
  json profiles = json::object();
  for (const auto& [mu, n] : rep.by_profile) profiles[mu.to_string()] = count(n);
  json partial = json::object();
  for (const auto& [mu, n] : rep.by_partial) partial[mu.to_string()] = count(n);
  json dims = json::object();
  for (const auto& [m, n] : rep.by_dimension) dims[std::to_string(m)] = count(n);
  json out = {{"p", rep.p},
              {"n", rep.n},
              {"diagonal", rep.diagonal},
              {"total", count(rep.total)},
              {"dimensions", dims},
              {"profiles", profiles},
              {"partial_profiles", partial}};
  json mism = json::array();
  for (const auto& c : rep.mismatches()) mism.push_back(to_json(c));
  out["mismatches"] = mism;
  if (with_comparisons) out["checks"] = rep.comparisons.size();
  return out;
}

inline json to_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"checks", r.checks}, {"failures", r.failure_count}, {"messages", r.failures}};
}

}  // namespace qsp::json
