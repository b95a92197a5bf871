#include "fusion/group_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fusion {

Subgroup centralizer(const Subgroup &ambient, const Subgroup &target) {
  const Group &G = ambient.group();
  std::vector<int> result;
  for (int g : ambient.members()) {
    bool central = true;
    for (int x : target.members()) {
      if (G.mul(g, x) != G.mul(x, g)) {
        central = false;
        break;
      }
    }
    if (central)
      result.push_back(g);
  }
  return Subgroup::unchecked(ambient.parent(), std::move(result));
}

Subgroup normalizer(const Subgroup &ambient, const Subgroup &target) {
  const Group &G = ambient.group();
  std::vector<int> result;
  for (int g : ambient.members()) {
    bool normalizes = true;
    for (int x : target.members()) {
      if (!target.contains(G.conj(g, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes)
      result.push_back(g);
  }
  return Subgroup::unchecked(ambient.parent(), std::move(result));
}

std::vector<int> transporter(const Subgroup &ambient, const Subgroup &P,
                             const Subgroup &Q) {
  const Group &G = ambient.group();
  std::vector<int> result;
  for (int g : ambient.members()) {
    bool maps_in = true;
    for (int x : P.members()) {
      if (!Q.contains(G.conj(g, x))) {
        maps_in = false;
        break;
      }
    }
    if (maps_in)
      result.push_back(g);
  }
  return result;
}

Subgroup sylow_subgroup(const Subgroup &ambient, int p) {
  if (!is_prime(p))
    throw std::invalid_argument("sylow_subgroup: p must be prime");
  const Group &G = ambient.group();
  long target = p_part(ambient.order(), p);
  Subgroup P = Subgroup::trivial(ambient.parent());
  while (P.order() < target) {
    Subgroup N = normalizer(ambient, P);
    // some coset of P in N_S(P) has order p; find a representative
    int extender = -1;
    for (int g : N.members()) {
      if (P.contains(g))
        continue;
      // order of the coset gP: least m with g^m in P
      int m = 1;
      int x = g;
      while (!P.contains(x)) {
        x = G.mul(x, g);
        ++m;
      }
      if (m % p == 0) {
        extender = G.power(g, m / p);
        break;
      }
    }
    if (extender < 0)
      throw std::logic_error("sylow growth failed"); // unreachable for correct input
    std::vector<int> seed = P.members();
    seed.push_back(extender);
    P = Subgroup::closure(ambient.parent(), seed);
  }
  return P;
}

Subgroup sylow_subgroup(const GroupPtr &G, int p) {
  return sylow_subgroup(Subgroup::full(G), p);
}

std::vector<Subgroup> all_subgroups(const Subgroup &S, int cap) {
  if (S.order() > cap)
    throw cap_exceeded(cap_exceeded::Kind::subgroups,
                       "subgroup enumeration cap exceeded: |S| = " +
                           std::to_string(S.order()) + " > " + std::to_string(cap));
  long n = S.order();
  if (n == 1)
    return {S};
  // S must be a p-group
  int p = 2;
  while (n % p != 0)
    ++p;
  if (p_part(n, p) != n)
    throw std::invalid_argument("all_subgroups requires a p-group");

  const Group &G = S.group();
  std::vector<Subgroup> result;
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> layer{Subgroup::trivial(S.parent())};
  result.push_back(layer[0]);
  seen.insert(layer[0].members());

  while (!layer.empty() && layer[0].order() < S.order()) {
    std::vector<Subgroup> next;
    for (const Subgroup &P : layer) {
      Subgroup N = normalizer(S, P);
      for (int x : N.members()) {
        if (P.contains(x) || !P.contains(G.power(x, p)))
          continue;
        std::vector<int> seed = P.members();
        seed.push_back(x);
        Subgroup Q = Subgroup::closure(S.parent(), seed);
        if (seen.insert(Q.members()).second) {
          result.push_back(Q);
          next.push_back(Q);
        }
      }
    }
    layer = std::move(next);
  }

  std::sort(result.begin(), result.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });
  return result;
}

Subgroup derived_subgroup(const Subgroup &H) {
  const Group &G = H.group();
  std::vector<int> commutators;
  for (int a : H.members())
    for (int b : H.members())
      commutators.push_back(G.commutator(a, b));
  return Subgroup::closure(H.parent(), commutators);
}

Subgroup center(const Subgroup &H) { return centralizer(H, H); }

std::vector<Subgroup> upper_central_series(const Subgroup &H) {
  const Group &G = H.group();
  std::vector<Subgroup> series{Subgroup::trivial(H.parent())};
  for (;;) {
    const Subgroup &Z = series.back();
    std::vector<int> next;
    for (int x : H.members()) {
      bool in_next = true;
      for (int g : H.members()) {
        if (!Z.contains(G.commutator(x, g))) {
          in_next = false;
          break;
        }
      }
      if (in_next)
        next.push_back(x);
    }
    Subgroup Znext = Subgroup::unchecked(H.parent(), std::move(next));
    if (Znext.order() == Z.order())
      break;
    series.push_back(std::move(Znext));
    if (series.back().order() == H.order())
      break;
  }
  return series;
}

Subgroup omega(const Subgroup &S, int p, int i) {
  const Group &G = S.group();
  long bound = 1;
  for (int k = 0; k < i; ++k)
    bound *= p;
  std::vector<int> gens;
  for (int x : S.members())
    if (G.power(x, bound) == G.identity())
      gens.push_back(x);
  return Subgroup::closure(S.parent(), gens);
}

std::vector<long> abelian_invariants(const GroupPtr &A) {
  if (!A->is_abelian())
    throw std::invalid_argument("abelian_invariants requires an abelian group");
  std::vector<long> factors;
  GroupPtr current = A;
  while (current->order() > 1) {
    int best = 0;
    int best_order = 1;
    for (int x = 0; x < current->order(); ++x) {
      int o = current->element_order(x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    factors.push_back(best_order);
    Subgroup cyclic = Subgroup::closure(current, {best});
    current = quotient(Subgroup::full(current), cyclic).first;
  }
  // split invariant factors into prime powers
  std::vector<long> result;
  for (long f : factors) {
    for (long q = 2; f > 1; ++q) {
      if (f % q != 0)
        continue;
      long power = 1;
      while (f % q == 0) {
        power *= q;
        f /= q;
      }
      result.push_back(power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<long> abelian_invariants(const Subgroup &A) {
  return abelian_invariants(group_from_subgroup(A));
}

std::pair<GroupPtr, GroupMap> quotient(const Subgroup &H, const Subgroup &N) {
  if (!H.contains_subgroup(N))
    throw std::invalid_argument("quotient: N is not contained in H");
  if (!N.is_normal_in(H))
    throw std::invalid_argument("quotient: N is not normal in H");

  const Group &G = H.group();
  std::map<int, int> coset_of; // element -> coset index
  std::vector<int> reps;       // coset index -> minimal representative
  for (int h : H.members()) {  // ascending, so reps are minimal
    if (coset_of.count(h))
      continue;
    int index = static_cast<int>(reps.size());
    reps.push_back(h);
    for (int n : N.members())
      coset_of[G.mul(h, n)] = index;
  }

  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] = coset_of.at(G.mul(reps[a], reps[b]));
  GroupPtr Q = Group::from_table(std::move(table), q);

  std::vector<int> images;
  images.reserve(H.members().size());
  for (int h : H.members())
    images.push_back(coset_of.at(h));
  GroupMap projection{H, Subgroup::full(Q), std::move(images)};
  return {Q, std::move(projection)};
}

GroupPtr group_from_subgroup(const Subgroup &H) {
  const Group &G = H.group();
  const std::vector<int> &mem = H.members();
  int n = H.order();
  auto index_of = [&](int x) {
    return static_cast<int>(std::lower_bound(mem.begin(), mem.end(), x) - mem.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index_of(G.mul(mem[a], mem[b]));
  return Group::from_table(std::move(table), n);
}

} // namespace fusion
