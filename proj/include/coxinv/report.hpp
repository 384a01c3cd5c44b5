#ifndef COXINV_REPORT_HPP
#define COXINV_REPORT_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxinv/characters.hpp"
#include "coxinv/rational.hpp"
#include "coxinv/ringanalysis.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

inline Json to_json(const IntVec& v) { return Json(v); }
inline Json to_json(const Weight& w) { return Json(w.coords); }
inline Json to_json(const RootVec& r) { return Json(r.coeffs); }
inline Json to_json(const RootCoords& r) {
  Json out = Json::array();
  for (const auto& q : r.coeffs) out.push_back(to_string(q));
  return out;
}
inline Json to_json(const RootSystemSpec& s) { return {{"family", std::string(1, s.letter())}, {"rank", s.rank}}; }

/// Exact integer: a JSON number when it fits in 64 bits, else a decimal string.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json witness_json(const RootSystem& rs, const CoxeterElement& w) {
  return {{"word", word_string(w.word())}, {"right_descents", right_descents(rs, w.element)}};
}

inline Json witnesses_json(const RootSystem& rs, const std::vector<CoxeterElement>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(witness_json(rs, w));
  return out;
}

inline Json character_fields(const DominantCharacter& chi) {
  return {{"weight", to_json(chi.weight)}, {"root_coords", to_json(chi.root_coords)}, {"height", chi.height()}};
}

/// One row of `enumerate`.
inline Json enumeration_row(const RootSystem& rs, const SemistabilityWitness& found) {
  Json row = character_fields(found.chi);
  row["indecomposable"] = true;
  row["witness_count"] = found.witnesses.size();
  row["witnesses"] = witnesses_json(rs, found.witnesses);
  return row;
}

/// One CharacterReport row of `classify`.
inline Json verdict_row(const RootSystem& rs, const RingVerdict& v) {
  Json row = character_fields(v.chi);
  row["indecomposable"] = true;
  row["witness_count"] = v.witnesses.size();
  row["witnesses"] = witnesses_json(rs, v.witnesses);
  row["rank"] = v.rank;
  row["parabolic_support"] = ParabolicSupport::of(v.chi.weight).indices;
  row["zero_weight_dim"] = v.zero_weight_dim;
  row["krull_dim"] = v.krull_dim;
  row["hilbert_prefix"] = v.hilbert.values;
  if (v.generators.consistent)
    row["inferred_generator_degrees"] = v.generators.degrees;
  else
    row["inferred_generator_degrees"] = "inconsistent at degree " + std::to_string(v.generators.failed_degree);
  row["polynomial_by_theorem"] = v.polynomial_by_theorem;
  row["hilbert_consistent"] = v.hilbert_consistent;
  row["theorem_coherent"] = theorem_coherent(v);
  return row;
}

/// Named pass/fail item. `anchor` states the mathematical claim being checked.
struct Check {
  std::string name;
  std::string anchor;
  Json expected;
  Json actual;
  bool passed = false;

  static Check equal(std::string name, std::string anchor, Json expected, Json actual) {
    const bool ok = expected == actual;
    return {std::move(name), std::move(anchor), std::move(expected), std::move(actual), ok};
  }

  Json to_json() const {
    return {{"name", name}, {"anchor", anchor}, {"expected", expected}, {"actual", actual}, {"passed", passed}};
  }
};

struct Report {
  std::optional<RootSystemSpec> spec;
  Json parameters = Json::object();
  Json rows = Json::array();
  std::vector<Check> checks;
  Json extra = Json::object();  // command-specific top-level keys
  std::optional<std::string> timestamp;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  /// Canonical body: everything except the optional header.
  Json body() const {
    Json out = extra;
    out["tool_version"] = kToolVersion;
    out["spec"] = spec ? coxinv::to_json(*spec) : Json(nullptr);
    out["parameters"] = parameters;
    out["rows"] = rows;
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    out["checks"] = std::move(cs);
    return out;
  }

  Json to_json() const {
    Json out = body();
    if (timestamp) out["header"] = {{"timestamp", *timestamp}};
    return out;
  }
};

// nlohmann::json objects are std::map-backed, so dump() is already key-sorted.
inline std::string to_json_text(const Report& r) { return r.to_json().dump(2) + "\n"; }

namespace detail {

inline std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void tsv_table(std::ostream& os, const Json& rows) {
  std::set<std::string> columns;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it) columns.insert(it.key());
  bool first = true;
  for (const auto& c : columns) {
    os << (first ? "" : "\t") << c;
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& c : columns) {
      os << (first ? "" : "\t") << (row.contains(c) ? tsv_cell(row[c]) : "");
      first = false;
    }
    os << "\n";
  }
}

}  // namespace detail

inline std::string to_tsv(const Report& r) {
  std::ostringstream os;
  const Json body = r.to_json();
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() == "rows" || it.key() == "checks") continue;
    os << "# " << it.key() << "\t" << it.value().dump() << "\n";
  }
  os << "[rows]\n";
  detail::tsv_table(os, body.at("rows"));
  os << "[checks]\n";
  detail::tsv_table(os, body.at("checks"));
  return os.str();
}

}  // namespace coxinv

#endif  // COXINV_REPORT_HPP
