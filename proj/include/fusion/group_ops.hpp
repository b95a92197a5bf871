#pragma once

#include <utility>
#include <vector>

#include "fusion/config.hpp"
#include "fusion/group.hpp"

namespace fusion {

// All operations are pure.  `ambient` arguments are subgroups of the parent
// group; results live in the same handle space.

Subgroup centralizer(const Subgroup &ambient, const Subgroup &target);
Subgroup normalizer(const Subgroup &ambient, const Subgroup &target);

// { g in ambient : g P g^-1 <= Q }
std::vector<int> transporter(const Subgroup &ambient, const Subgroup &P,
                             const Subgroup &Q);

// A Sylow p-subgroup, grown by repeatedly adjoining an element of order p of
// the normalizer modulo the current subgroup.  Returns the trivial subgroup
// when p does not divide the order.
Subgroup sylow_subgroup(const GroupPtr &G, int p);
Subgroup sylow_subgroup(const Subgroup &ambient, int p);

// Every subgroup of the p-group S, by layered extension: each order-p^(k+1)
// subgroup arises from an order-p^k subgroup P and an element of N_S(P) \ P
// whose p-th power lies in P.  Requires |S| <= cap.
std::vector<Subgroup> all_subgroups(const Subgroup &S, int cap = Config{}.max_sylow);

Subgroup derived_subgroup(const Subgroup &H);
Subgroup center(const Subgroup &H);

// 1 = Z_0 <= Z_1 <= ... up to the hypercenter (the full group for p-groups).
std::vector<Subgroup> upper_central_series(const Subgroup &H);

// Omega_i(S) = < x : x^(p^i) = 1 >
Subgroup omega(const Subgroup &S, int p, int i);

// Invariants of a finite abelian group as a sorted multiset of prime powers,
// via repeated extraction of a maximal-order cyclic factor.
std::vector<long> abelian_invariants(const GroupPtr &A);
std::vector<long> abelian_invariants(const Subgroup &A);

// Coset group H/N together with the projection homomorphism.  N must be
// normal in H.
std::pair<GroupPtr, GroupMap> quotient(const Subgroup &H, const Subgroup &N);

// Standalone table-backed copy of a subgroup; handle i corresponds to
// H.members()[i].
GroupPtr group_from_subgroup(const Subgroup &H);

} // namespace fusion
