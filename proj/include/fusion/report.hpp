#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/nilpotency.hpp"

namespace fusion {

struct OracleRecord {
  bool p_nilpotent = false;
  long p_prime_subgroup_order = 0;
  std::optional<std::vector<int>> complement;

  friend bool operator==(const OracleRecord &, const OracleRecord &) = default;
};

struct PairEntry {
  std::string group;
  int prime = 0;
  long group_order = 0;
  long sylow_order = 0;
  bool degenerate = false; // prime does not divide the group order
  std::vector<CriterionVerdict> criteria; // sorted by criterion id
  std::optional<OracleRecord> oracle;
  bool agreement = true;
  std::optional<bool> nilpotent;
  std::vector<std::string> notes;
  std::optional<std::string> error;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<PairEntry> entries; // sorted by (group, prime)
  long pairs = 0;
  long agreements = 0;
  long disagreements = 0;
  std::vector<std::string> disagreement_keys;
};

bool operator==(const CriterionVerdict &a, const CriterionVerdict &b);
bool operator==(const PairEntry &a, const PairEntry &b);
bool operator==(const Report &a, const Report &b);

nlohmann::json to_json(const Report &report);
Report report_from_json(const nlohmann::json &doc);

std::string render_text(const Report &report);
std::string render_text(const PairEntry &entry);

} // namespace fusion
