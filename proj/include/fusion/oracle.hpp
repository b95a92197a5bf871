#pragma once

#include <optional>

#include "fusion/group.hpp"

namespace fusion {

// Fusion-free ground truth: classical p-nilpotency of an ambient group,
// computed without touching the fusion-system layer.
struct OracleVerdict {
  bool p_nilpotent = false;
  long p_prime_subgroup_order = 0; // |< elements of order prime to p >|
  std::optional<Subgroup> complement;
};

// K = < elements of order prime to p >.  G is p-nilpotent exactly when
// p does not divide |K|, and then K is the normal complement of a Sylow
// p-subgroup.
OracleVerdict is_p_nilpotent(const GroupPtr &G, int p);

// S intersected with [G, G] (the classical focal subgroup).
Subgroup focal_via_derived(const GroupPtr &G, const Subgroup &S);

// Raw transporter sweep comparing the conjugation maps P -> Q induced by G
// with those induced by S.  Deliberately bypasses the fusion-system layer.
bool hom_equality_bruteforce(const GroupPtr &G, const Subgroup &S,
                             const Subgroup &P, const Subgroup &Q);

} // namespace fusion
