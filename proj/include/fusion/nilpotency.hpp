#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/fusion_system.hpp"

namespace fusion {

enum class Verdict { True, False, Inconclusive, NotComputed };

std::string to_string(Verdict v);

// Structured counterexample carried by a false verdict.  Every witness
// re-verifies: feeding it back to the criterion's defining predicate
// reproduces the failure.
struct Witness {
  std::string kind;
  std::string text;
  std::optional<std::vector<int>> subgroup;
  std::optional<std::vector<int>> subgroup2;
  std::optional<FMorphism> morphism;
  std::optional<std::vector<int>> elements;
  std::optional<std::vector<int>> elements2;

  friend bool operator==(const Witness &, const Witness &) = default;
};

struct Cost {
  double milliseconds = 0.0;
  long hom_queries = 0;
};

struct CriterionVerdict {
  std::string criterion_id;
  bool applicable = true;
  std::string reason; // applicability gate or not-computed cause
  Verdict verdict = Verdict::NotComputed;
  // True when the criterion's hypothesis was evaluated outside the theorem's
  // stated range (Quillen-style criteria at p = 2); such verdicts are
  // excluded from agreement.
  bool hypothesis_only = false;
  std::optional<Witness> witness;
  Cost cost;
};

// Necessary-and-sufficient criteria.
CriterionVerdict crit_definition(const FusionSystem &F);
CriterionVerdict crit_element_fusion(const FusionSystem &F);
CriterionVerdict crit_tuple_fusion(const FusionSystem &F, int n);
enum class FrobeniusScope { all, centric };
CriterionVerdict crit_frobenius(const FusionSystem &F, FrobeniusScope scope);
CriterionVerdict crit_focal(const FusionSystem &F);
CriterionVerdict crit_abelian(const FusionSystem &F);
CriterionVerdict crit_quillen(const FusionSystem &F);
CriterionVerdict crit_quillen_category(const FusionSystem &F);
CriterionVerdict crit_control_fusion(const FusionSystem &F);

// Sufficient-only checks: the verdict is True or Inconclusive, never False.
CriterionVerdict suff_central_elements(const FusionSystem &F);
CriterionVerdict suff_omega_center(const FusionSystem &F);

// Re-runs the defining predicate on the witness alone.
bool reverify_witness(const FusionSystem &F, const CriterionVerdict &verdict);

struct RunResult {
  std::vector<CriterionVerdict> verdicts;
  bool agreement = true;
  std::optional<bool> agreed_verdict; // nilpotent?
  std::vector<std::string> notes;     // disagreement diagnostics
};

// All criterion ids in canonical (sorted emission) order.
const std::vector<std::string> &criterion_ids();

// Runs one criterion by id (tuple criterion reads n from F's config).
CriterionVerdict run_criterion(const FusionSystem &F, const std::string &id);

// Runs every criterion and checks that all applicable iff-criteria agree and
// no sufficient-only check contradicts them.
RunResult run_all(const FusionSystem &F);

} // namespace fusion
