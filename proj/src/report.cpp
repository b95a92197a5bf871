#include "fusion/report.hpp"

#include <sstream>

namespace fusion {

namespace {

using nlohmann::json;

json optional_ints(const std::optional<std::vector<int>> &v) {
  if (!v)
    return nullptr;
  return *v;
}

std::optional<std::vector<int>> ints_optional(const json &j) {
  if (j.is_null())
    return std::nullopt;
  return j.get<std::vector<int>>();
}

json morphism_to_json(const FMorphism &m) {
  return json{{"dom", m.dom}, {"img", m.img}};
}

FMorphism morphism_from_json(const json &j) {
  return FMorphism{j.at("dom").get<std::vector<int>>(),
                   j.at("img").get<std::vector<int>>()};
}

json witness_to_json(const Witness &w) {
  json j{{"kind", w.kind}, {"text", w.text}};
  j["subgroup"] = optional_ints(w.subgroup);
  j["subgroup2"] = optional_ints(w.subgroup2);
  j["morphism"] = w.morphism ? morphism_to_json(*w.morphism) : json(nullptr);
  j["elements"] = optional_ints(w.elements);
  j["elements2"] = optional_ints(w.elements2);
  return j;
}

Witness witness_from_json(const json &j) {
  Witness w;
  w.kind = j.at("kind").get<std::string>();
  w.text = j.at("text").get<std::string>();
  w.subgroup = ints_optional(j.at("subgroup"));
  w.subgroup2 = ints_optional(j.at("subgroup2"));
  if (!j.at("morphism").is_null())
    w.morphism = morphism_from_json(j.at("morphism"));
  w.elements = ints_optional(j.at("elements"));
  w.elements2 = ints_optional(j.at("elements2"));
  return w;
}

Verdict verdict_from_string(const std::string &s) {
  if (s == "true")
    return Verdict::True;
  if (s == "false")
    return Verdict::False;
  if (s == "inconclusive")
    return Verdict::Inconclusive;
  if (s == "not-computed")
    return Verdict::NotComputed;
  throw std::invalid_argument("unknown verdict string: " + s);
}

json criterion_to_json(const CriterionVerdict &v) {
  json j{{"id", v.criterion_id},
         {"applicable", v.applicable},
         {"reason", v.reason},
         {"verdict", to_string(v.verdict)},
         {"hypothesis_only", v.hypothesis_only},
         {"cost", json{{"ms", v.cost.milliseconds}, {"hom_queries", v.cost.hom_queries}}}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  return j;
}

CriterionVerdict criterion_from_json(const json &j) {
  CriterionVerdict v;
  v.criterion_id = j.at("id").get<std::string>();
  v.applicable = j.at("applicable").get<bool>();
  v.reason = j.at("reason").get<std::string>();
  v.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  v.hypothesis_only = j.at("hypothesis_only").get<bool>();
  v.cost.milliseconds = j.at("cost").at("ms").get<double>();
  v.cost.hom_queries = j.at("cost").at("hom_queries").get<long>();
  if (!j.at("witness").is_null())
    v.witness = witness_from_json(j.at("witness"));
  return v;
}

json oracle_to_json(const OracleRecord &o) {
  json j{{"p_nilpotent", o.p_nilpotent},
         {"p_prime_subgroup_order", o.p_prime_subgroup_order}};
  j["complement"] = optional_ints(o.complement);
  return j;
}

OracleRecord oracle_from_json(const json &j) {
  OracleRecord o;
  o.p_nilpotent = j.at("p_nilpotent").get<bool>();
  o.p_prime_subgroup_order = j.at("p_prime_subgroup_order").get<long>();
  o.complement = ints_optional(j.at("complement"));
  return o;
}

json entry_to_json(const PairEntry &e) {
  json criteria = json::array();
  for (const CriterionVerdict &v : e.criteria)
    criteria.push_back(criterion_to_json(v));
  json j{{"group", e.group},
         {"prime", e.prime},
         {"group_order", e.group_order},
         {"sylow_order", e.sylow_order},
         {"degenerate", e.degenerate},
         {"criteria", criteria},
         {"agreement", e.agreement},
         {"notes", e.notes},
         {"elapsed_ms", e.elapsed_ms}};
  j["oracle"] = e.oracle ? oracle_to_json(*e.oracle) : json(nullptr);
  j["nilpotent"] = e.nilpotent ? json(*e.nilpotent) : json(nullptr);
  j["error"] = e.error ? json(*e.error) : json(nullptr);
  return j;
}

PairEntry entry_from_json(const json &j) {
  PairEntry e;
  e.group = j.at("group").get<std::string>();
  e.prime = j.at("prime").get<int>();
  e.group_order = j.at("group_order").get<long>();
  e.sylow_order = j.at("sylow_order").get<long>();
  e.degenerate = j.at("degenerate").get<bool>();
  for (const json &c : j.at("criteria"))
    e.criteria.push_back(criterion_from_json(c));
  if (!j.at("oracle").is_null())
    e.oracle = oracle_from_json(j.at("oracle"));
  e.agreement = j.at("agreement").get<bool>();
  if (!j.at("nilpotent").is_null())
    e.nilpotent = j.at("nilpotent").get<bool>();
  e.notes = j.at("notes").get<std::vector<std::string>>();
  if (!j.at("error").is_null())
    e.error = j.at("error").get<std::string>();
  e.elapsed_ms = j.at("elapsed_ms").get<double>();
  return e;
}

} // namespace

bool operator==(const CriterionVerdict &a, const CriterionVerdict &b) {
  return a.criterion_id == b.criterion_id && a.applicable == b.applicable &&
         a.reason == b.reason && a.verdict == b.verdict &&
         a.hypothesis_only == b.hypothesis_only && a.witness == b.witness &&
         a.cost.milliseconds == b.cost.milliseconds &&
         a.cost.hom_queries == b.cost.hom_queries;
}

bool operator==(const PairEntry &a, const PairEntry &b) {
  return a.group == b.group && a.prime == b.prime &&
         a.group_order == b.group_order && a.sylow_order == b.sylow_order &&
         a.degenerate == b.degenerate && a.criteria == b.criteria &&
         a.oracle == b.oracle && a.agreement == b.agreement &&
         a.nilpotent == b.nilpotent && a.notes == b.notes && a.error == b.error &&
         a.elapsed_ms == b.elapsed_ms;
}

bool operator==(const Report &a, const Report &b) {
  return a.entries == b.entries && a.pairs == b.pairs &&
         a.agreements == b.agreements && a.disagreements == b.disagreements &&
         a.disagreement_keys == b.disagreement_keys;
}

json to_json(const Report &report) {
  json entries = json::array();
  for (const PairEntry &e : report.entries)
    entries.push_back(entry_to_json(e));
  return json{{"entries", entries},
              {"totals",
               json{{"pairs", report.pairs},
                    {"agreements", report.agreements},
                    {"disagreements", report.disagreements}}},
              {"disagreements", report.disagreement_keys}};
}

Report report_from_json(const json &doc) {
  Report report;
  for (const json &e : doc.at("entries"))
    report.entries.push_back(entry_from_json(e));
  report.pairs = doc.at("totals").at("pairs").get<long>();
  report.agreements = doc.at("totals").at("agreements").get<long>();
  report.disagreements = doc.at("totals").at("disagreements").get<long>();
  report.disagreement_keys =
      doc.at("disagreements").get<std::vector<std::string>>();
  return report;
}

std::string render_text(const PairEntry &e) {
  std::ostringstream os;
  os << e.group << " p=" << e.prime << " (|G|=" << e.group_order
     << ", |S|=" << e.sylow_order << ")";
  if (e.degenerate)
    os << " [degenerate: trivial Sylow]";
  os << "\n";
  if (e.error) {
    os << "  error: " << *e.error << "\n";
    return os.str();
  }
  for (const CriterionVerdict &v : e.criteria) {
    os << "  " << v.criterion_id << ": " << to_string(v.verdict);
    if (!v.applicable)
      os << (v.hypothesis_only ? " [hypothesis only]" : " [not applicable]");
    if (!v.reason.empty())
      os << " (" << v.reason << ")";
    os << "\n";
    if (v.witness)
      os << "      witness: " << v.witness->text << "\n";
  }
  if (e.oracle) {
    os << "  oracle: " << (e.oracle->p_nilpotent ? "p-nilpotent" : "not p-nilpotent")
       << " (|<p'-elements>| = " << e.oracle->p_prime_subgroup_order << ")\n";
  }
  os << "  agreement: " << (e.agreement ? "yes" : "NO");
  if (e.nilpotent)
    os << ", nilpotent: " << (*e.nilpotent ? "yes" : "no");
  os << "\n";
  for (const std::string &note : e.notes)
    os << "  note: " << note << "\n";
  return os.str();
}

std::string render_text(const Report &report) {
  std::ostringstream os;
  for (const PairEntry &e : report.entries)
    os << render_text(e);
  os << "----\n";
  os << report.pairs << " pair(s), " << report.agreements << " agreement(s), "
     << report.disagreements << " disagreement(s)\n";
  for (const std::string &key : report.disagreement_keys)
    os << "  disagreement: " << key << "\n";
  return os.str();
}

} // namespace fusion
