#include "fusion/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusion {

namespace {

// Groups at or below this order get an eager multiplication table; larger
// permutation groups multiply by composing and hashing.
constexpr int kTableLimit = 2048;

} // namespace

GroupPtr Group::from_generators(const std::vector<Perm> &generators, int degree,
                                long max_order) {
  for (const Perm &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  }

  auto group = std::shared_ptr<Group>(new Group());
  Group &G = *group;

  G.perms_.push_back(Perm(degree));
  G.index_.emplace(G.perms_[0], 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (const Perm &g : generators) {
      Perm product = g * G.perms_[a];
      auto [it, inserted] = G.index_.emplace(product, static_cast<int>(G.perms_.size()));
      if (inserted) {
        if (static_cast<long>(G.perms_.size()) + 1 > max_order)
          throw cap_exceeded(cap_exceeded::Kind::order,
                             "group closure exceeds the configured maximum order " +
                                 std::to_string(max_order));
        G.perms_.push_back(std::move(product));
        queue.push_back(it->second);
      }
    }
  }

  G.order_ = static_cast<int>(G.perms_.size());
  if (G.order_ <= kTableLimit) {
    G.table_.resize(static_cast<std::size_t>(G.order_) * G.order_);
    for (int a = 0; a < G.order_; ++a)
      for (int b = 0; b < G.order_; ++b)
        G.table_[static_cast<std::size_t>(a) * G.order_ + b] =
            G.index_.at(G.perms_[a] * G.perms_[b]);
  }
  G.build_inverses();
  return group;
}

GroupPtr Group::from_table(std::vector<int> table, int order) {
  if (order <= 0 || static_cast<long>(table.size()) != static_cast<long>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  auto group = std::shared_ptr<Group>(new Group());
  Group &G = *group;
  G.order_ = order;
  G.table_ = std::move(table);
  for (int b = 0; b < order; ++b) {
    if (G.table_[b] != b || G.table_[static_cast<std::size_t>(b) * order] != b)
      throw std::invalid_argument("table handle 0 is not an identity");
  }
  G.build_inverses();
  return group;
}

void Group::build_inverses() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw std::invalid_argument("element without inverse");
  }
}

int Group::mul_slow(int a, int b) const {
  auto it = index_.find(perms_[a] * perms_[b]);
  assert(it != index_.end() && "closure invariant violated");
  return it->second;
}

int Group::power(int a, long e) const {
  if (e < 0)
    return power(inv(a), -e);
  int result = 0;
  int base = a;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int Group::element_order(int a) const {
  int n = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::string Group::element_name(int a) const {
  if (perm_backed())
    return perms_[a].to_cycle_string();
  return "#" + std::to_string(a);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != parent->identity()) {
    if (!std::binary_search(members.begin(), members.end(), parent->identity()))
      throw std::invalid_argument("subgroup must contain the identity");
  }
  Subgroup s = unchecked(parent, members);
  for (int a : members) {
    if (!s.contains(parent->inv(a)))
      throw std::invalid_argument("subgroup not closed under inverses");
    for (int b : members)
      if (!s.contains(parent->mul(a, b)))
        throw std::invalid_argument("subgroup not closed under products");
  }
  *this = std::move(s);
}

Subgroup Subgroup::unchecked(GroupPtr parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  int id = parent->identity();
  return unchecked(std::move(parent), {id});
}

Subgroup Subgroup::full(GroupPtr parent) {
  std::vector<int> all(parent->order());
  for (int i = 0; i < parent->order(); ++i)
    all[i] = i;
  return unchecked(std::move(parent), std::move(all));
}

Subgroup Subgroup::closure(GroupPtr parent, const std::vector<int> &seed) {
  const Group &G = *parent;
  for (int x : seed)
    if (x < 0 || x >= G.order())
      throw std::invalid_argument("closure seed outside the parent group");

  std::vector<char> in(G.order(), 0);
  std::vector<int> members{G.identity()};
  in[G.identity()] = 1;
  std::deque<int> queue{G.identity()};
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (int x : seed)
    add(x);
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    add(G.inv(a));
    for (std::size_t i = 0; i < members.size(); ++i) {
      // members may grow while iterating; products with new members are
      // handled when those members are dequeued
      add(G.mul(a, members[i]));
      add(G.mul(members[i], a));
    }
  }
  return unchecked(std::move(parent), std::move(members));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::contains_all(const std::vector<int> &xs) const {
  for (int x : xs)
    if (!contains(x))
      return false;
  return true;
}

Subgroup Subgroup::conjugate(int g) const {
  const Group &G = *parent_;
  std::vector<int> image;
  image.reserve(members_.size());
  for (int x : members_)
    image.push_back(G.conj(g, x));
  return unchecked(parent_, std::move(image));
}

bool Subgroup::is_normal_in(const Subgroup &ambient) const {
  const Group &G = *parent_;
  for (int g : ambient.members())
    for (int x : members_)
      if (!contains(G.conj(g, x)))
        return false;
  return true;
}

bool Subgroup::is_abelian() const {
  const Group &G = *parent_;
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (G.mul(members_[i], members_[j]) != G.mul(members_[j], members_[i]))
        return false;
  return true;
}

bool Subgroup::is_elementary_abelian(int p) const {
  if (!is_abelian())
    return false;
  const Group &G = *parent_;
  for (int x : members_)
    if (x != G.identity() && G.element_order(x) != p)
      return false;
  return true;
}

int Subgroup::exponent() const {
  const Group &G = *parent_;
  long e = 1;
  for (int x : members_)
    e = std::lcm(e, static_cast<long>(G.element_order(x)));
  return static_cast<int>(e);
}

int GroupMap::apply(int x) const {
  const auto &mem = domain.members();
  auto it = std::lower_bound(mem.begin(), mem.end(), x);
  if (it == mem.end() || *it != x)
    throw std::out_of_range("element outside the map's domain");
  return images[static_cast<std::size_t>(it - mem.begin())];
}

bool GroupMap::is_homomorphism() const {
  const Group &D = domain.group();
  const Group &C = codomain.group();
  for (int a : domain.members())
    for (int b : domain.members())
      if (apply(D.mul(a, b)) != C.mul(apply(a), apply(b)))
        return false;
  return true;
}

bool GroupMap::is_injective() const {
  std::set<int> seen(images.begin(), images.end());
  return seen.size() == images.size();
}

bool GroupMap::is_surjective() const {
  std::set<int> seen(images.begin(), images.end());
  for (int y : codomain.members())
    if (!seen.count(y))
      return false;
  return true;
}

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

long p_part(long n, long p) {
  long result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

} // namespace fusion
