#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusion/config.hpp"
#include "fusion/perm.hpp"

namespace fusion {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group on element handles 0..order-1.  Handle 0 is the identity.
// Backed either by explicit permutations (generated groups) or by a full
// multiplication table (quotients, automorphism groups).  Immutable after
// construction.
class Group {
public:
  // Closure of the generators under composition.  With no generators the
  // result is the trivial group acting on `degree` points.
  static GroupPtr from_generators(const std::vector<Perm> &generators,
                                  int degree, long max_order = Config{}.max_order);

  // Table backing.  `table` is row-major order*order, handle 0 must be the
  // identity.  Used by quotient construction and automorphism groups.
  static GroupPtr from_table(std::vector<int> table, int order);

  int order() const { return order_; }
  int identity() const { return 0; }

  int mul(int a, int b) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_slow(a, b);
  }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int commutator(int a, int b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  int power(int a, long e) const;
  int element_order(int a) const;
  bool is_abelian() const;

  bool perm_backed() const { return !perms_.empty(); }
  const Perm &perm(int a) const { return perms_[a]; }
  int degree() const { return perms_.empty() ? 0 : perms_[0].degree(); }

  // Printable element name: cycle notation when permutation-backed,
  // "#handle" otherwise.
  std::string element_name(int a) const;

private:
  Group() = default;
  int mul_slow(int a, int b) const;
  void build_inverses();

  int order_ = 0;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> table_; // empty unless table-backed or small enough to memoize
  std::vector<int> inverse_;
};

// A subset of a parent group's handles that is closed under the group
// operations.  Members are kept sorted.
class Subgroup {
public:
  // Validates closure under product and inverse, and membership of 0.
  Subgroup(GroupPtr parent, std::vector<int> members);

  // Caller guarantees closure (used on hot paths such as conjugation images).
  static Subgroup unchecked(GroupPtr parent, std::vector<int> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);

  // Smallest subgroup of `parent` containing `seed`.
  static Subgroup closure(GroupPtr parent, const std::vector<int> &seed);

  const GroupPtr &parent() const { return parent_; }
  const Group &group() const { return *parent_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<int> &members() const { return members_; }

  bool contains(int x) const;
  bool contains_all(const std::vector<int> &xs) const;
  bool contains_subgroup(const Subgroup &other) const {
    return contains_all(other.members());
  }

  Subgroup conjugate(int g) const; // g H g^-1
  bool is_normal_in(const Subgroup &ambient) const;
  bool is_abelian() const;
  bool is_elementary_abelian(int p) const;
  int exponent() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  friend class FusionSystem; // placeholder construction during assembly
  Subgroup() = default;
  GroupPtr parent_;
  std::vector<int> members_;
};

// A total map between subgroups, possibly of different parent groups.
// images[i] is the image of domain.members()[i].
struct GroupMap {
  Subgroup domain;
  Subgroup codomain;
  std::vector<int> images;

  int apply(int x) const;
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
};

// Small arithmetic helpers used throughout.
bool is_prime(long n);
long p_part(long n, long p);

} // namespace fusion
