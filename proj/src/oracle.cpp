#include "fusion/oracle.hpp"

#include <set>

#include "fusion/group_ops.hpp"

namespace fusion {

OracleVerdict is_p_nilpotent(const GroupPtr &G, int p) {
  std::vector<int> seeds;
  for (int x = 0; x < G->order(); ++x)
    if (G->element_order(x) % p != 0)
      seeds.push_back(x);
  Subgroup K = Subgroup::closure(G, seeds);

  OracleVerdict verdict;
  verdict.p_prime_subgroup_order = K.order();
  verdict.p_nilpotent = K.order() % p != 0;
  if (verdict.p_nilpotent)
    verdict.complement = std::move(K);
  return verdict;
}

Subgroup focal_via_derived(const GroupPtr &G, const Subgroup &S) {
  Subgroup derived = derived_subgroup(Subgroup::full(G));
  std::vector<int> meet;
  for (int x : S.members())
    if (derived.contains(x))
      meet.push_back(x);
  return Subgroup(G, std::move(meet));
}

bool hom_equality_bruteforce(const GroupPtr &G, const Subgroup &S,
                             const Subgroup &P, const Subgroup &Q) {
  // maps are recorded as flat image vectors over P's sorted members
  auto maps_from = [&](const std::vector<int> &conjugators) {
    std::set<std::vector<int>> maps;
    for (int g : conjugators) {
      std::vector<int> images;
      images.reserve(P.members().size());
      bool inside = true;
      for (int x : P.members()) {
        int y = G->conj(g, x);
        if (!Q.contains(y)) {
          inside = false;
          break;
        }
        images.push_back(y);
      }
      if (inside)
        maps.insert(std::move(images));
    }
    return maps;
  };

  std::vector<int> everyone(G->order());
  for (int i = 0; i < G->order(); ++i)
    everyone[i] = i;
  return maps_from(everyone) == maps_from(S.members());
}

} // namespace fusion
