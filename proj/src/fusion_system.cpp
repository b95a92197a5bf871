#include "fusion/fusion_system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

namespace fusion {

namespace {

bool sorted_subset(const std::vector<int> &small, const std::vector<int> &big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

int FMorphism::apply(int x) const {
  auto it = std::lower_bound(dom.begin(), dom.end(), x);
  if (it == dom.end() || *it != x)
    throw std::out_of_range("element outside the morphism's domain");
  return img[static_cast<std::size_t>(it - dom.begin())];
}

std::vector<int> FMorphism::image_sorted() const {
  std::vector<int> s = img;
  std::sort(s.begin(), s.end());
  return s;
}

FMorphism FMorphism::restricted_to(const std::vector<int> &sub_members) const {
  FMorphism r;
  r.dom = sub_members;
  r.img.reserve(sub_members.size());
  for (int x : sub_members)
    r.img.push_back(apply(x));
  return r;
}

FMorphism FMorphism::inverse() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    pairs.emplace_back(img[i], dom[i]);
  std::sort(pairs.begin(), pairs.end());
  FMorphism r;
  r.dom.reserve(pairs.size());
  r.img.reserve(pairs.size());
  for (auto &[y, x] : pairs) {
    r.dom.push_back(y);
    r.img.push_back(x);
  }
  return r;
}

FMorphism FMorphism::compose(const FMorphism &outer, const FMorphism &inner) {
  FMorphism r;
  r.dom = inner.dom;
  r.img.reserve(inner.img.size());
  for (int y : inner.img)
    r.img.push_back(outer.apply(y));
  return r;
}

FMorphism FMorphism::identity_on(const std::vector<int> &members) {
  return FMorphism{members, members};
}

FMorphism FMorphism::conjugation(const Group &G, const std::vector<int> &members,
                                 int g) {
  FMorphism r;
  r.dom = members;
  r.img.reserve(members.size());
  for (int x : members)
    r.img.push_back(G.conj(g, x));
  return r;
}

GroupMap FMorphism::as_group_map(const GroupPtr &parent, const Subgroup &codomain) const {
  return GroupMap{Subgroup(parent, dom), codomain, img};
}

bool is_valid_morphism(const Group &G, const Subgroup &S, const FMorphism &m) {
  if (m.dom.size() != m.img.size() || m.dom.empty())
    return false;
  if (!std::is_sorted(m.dom.begin(), m.dom.end()))
    return false;
  for (int x : m.dom)
    if (!S.contains(x))
      return false;
  for (int y : m.img)
    if (!S.contains(y))
      return false;
  std::set<int> image(m.img.begin(), m.img.end());
  if (image.size() != m.img.size())
    return false;
  for (int a : m.dom)
    for (int b : m.dom) {
      int ab = G.mul(a, b);
      auto it = std::lower_bound(m.dom.begin(), m.dom.end(), ab);
      if (it == m.dom.end() || *it != ab)
        return false; // domain not closed
      if (m.apply(ab) != G.mul(m.apply(a), m.apply(b)))
        return false;
    }
  return true;
}

std::vector<FMorphism> conjugation_homs(const Subgroup &ambient, const Subgroup &P,
                                        const Subgroup &Q) {
  const Group &G = ambient.group();
  std::set<FMorphism> seen;
  for (int g : ambient.members()) {
    FMorphism m = FMorphism::conjugation(G, P.members(), g);
    bool inside = true;
    for (int y : m.img) {
      if (!Q.contains(y)) {
        inside = false;
        break;
      }
    }
    if (inside)
      seen.insert(std::move(m));
  }
  return {seen.begin(), seen.end()};
}

std::map<std::vector<int>, std::vector<FMorphism>>
close_morphism_set(const std::vector<Subgroup> &subgroups,
                   const std::vector<FMorphism> &seeds, long budget) {
  struct Entry {
    FMorphism m;
    std::vector<int> img_sorted;
  };
  std::vector<Entry> stored;
  std::set<FMorphism> index;
  std::deque<std::size_t> worklist;

  auto add = [&](FMorphism m) {
    auto [it, inserted] = index.insert(std::move(m));
    if (!inserted)
      return;
    if (static_cast<long>(index.size()) > budget)
      throw cap_exceeded(cap_exceeded::Kind::morphisms,
                         "generated fusion closure exceeds the morphism budget " +
                             std::to_string(budget));
    stored.push_back(Entry{*it, it->image_sorted()});
    worklist.push_back(stored.size() - 1);
  };

  for (const FMorphism &m : seeds)
    add(m);

  while (!worklist.empty()) {
    // `stored` may reallocate while pairing, so work on a copy
    Entry current = stored[worklist.front()];
    worklist.pop_front();

    add(current.m.inverse());

    for (const Subgroup &R : subgroups) {
      if (R.order() >= static_cast<int>(current.m.dom.size()))
        continue;
      if (sorted_subset(R.members(), current.m.dom))
        add(current.m.restricted_to(R.members()));
    }

    // pair against everything stored so far (including this morphism)
    for (std::size_t j = 0; j < stored.size(); ++j) {
      if (sorted_subset(stored[j].img_sorted, current.m.dom))
        add(FMorphism::compose(current.m, stored[j].m));
      if (sorted_subset(current.img_sorted, stored[j].m.dom))
        add(FMorphism::compose(stored[j].m, current.m));
    }
  }

  std::map<std::vector<int>, std::vector<FMorphism>> result;
  for (const FMorphism &m : index)
    result[m.dom].push_back(m); // std::set iteration is already sorted
  return result;
}

// ---------------------------------------------------------------------------

struct FusionSystem::Memo {
  mutable std::mutex mutex;
  std::map<std::vector<int>, std::vector<FMorphism>> homs;
  std::map<std::vector<int>, std::vector<FMorphism>> s_homs;
  std::map<std::vector<int>, std::vector<std::vector<int>>> classes;
  std::map<std::vector<int>, bool> centric;
  std::map<std::vector<int>, bool> radical;
  std::optional<std::vector<Subgroup>> subgroups;
  std::atomic<long> queries{0};
};

FusionSystem::FusionSystem(FusionSystem &&) noexcept = default;
FusionSystem &FusionSystem::operator=(FusionSystem &&) noexcept = default;
FusionSystem::~FusionSystem() = default;

FusionSystem FusionSystem::group_fusion(GroupPtr G, int p, Config config) {
  Subgroup S = sylow_subgroup(G, p);
  return group_fusion_over(std::move(G), std::move(S), p, config);
}

FusionSystem FusionSystem::group_fusion_over(GroupPtr G, Subgroup S, int p,
                                             Config config) {
  if (!is_prime(p))
    throw std::invalid_argument("fusion system: p must be prime");
  if (S.parent() != G)
    throw std::invalid_argument("fusion system: S must be a subgroup of G");
  if (static_cast<long>(S.order()) != p_part(G->order(), p))
    throw std::invalid_argument("fusion system: S is not a Sylow p-subgroup");
  FusionSystem F;
  F.ambient_ = std::move(G);
  F.sylow_ = std::move(S);
  F.p_ = p;
  F.config_ = config;
  F.memo_ = std::make_unique<Memo>();
  return F;
}

FusionSystem FusionSystem::generated(GroupPtr S, int p,
                                     const std::vector<FMorphism> &generators,
                                     Config config) {
  if (!is_prime(p))
    throw std::invalid_argument("fusion system: p must be prime");
  if (p_part(S->order(), p) != S->order())
    throw std::invalid_argument("generated fusion system requires a p-group");

  Subgroup full = Subgroup::full(S);
  for (const FMorphism &m : generators) {
    if (!is_valid_morphism(*S, full, m))
      throw std::invalid_argument("generator is not an injective homomorphism "
                                  "between subgroups of S");
  }

  std::vector<Subgroup> subs = all_subgroups(full, config.max_sylow);
  std::vector<FMorphism> seeds = generators;
  for (const Subgroup &P : subs)
    for (int s = 0; s < S->order(); ++s)
      seeds.push_back(FMorphism::conjugation(*S, P.members(), s));

  FusionSystem F;
  F.ambient_ = S;
  F.sylow_ = full;
  F.p_ = p;
  F.config_ = config;
  F.explicit_source_ = true;
  F.explicit_homs_ = close_morphism_set(subs, seeds, config.morphism_budget);
  F.memo_ = std::make_unique<Memo>();
  F.memo_->subgroups = std::move(subs);
  return F;
}

const std::vector<Subgroup> &FusionSystem::subgroups() const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  if (!memo_->subgroups)
    memo_->subgroups = all_subgroups(sylow_, config_.max_sylow);
  return *memo_->subgroups;
}

long FusionSystem::hom_queries() const { return memo_->queries.load(); }

std::vector<FMorphism> FusionSystem::compute_homs_to_sylow(const Subgroup &P) const {
  if (explicit_source_) {
    auto it = explicit_homs_.find(P.members());
    if (it == explicit_homs_.end())
      throw std::invalid_argument("hom_set: P is not a subgroup of this system's S");
    return it->second;
  }
  return conjugation_homs(Subgroup::full(ambient_), P, sylow_);
}

std::vector<FMorphism> FusionSystem::homs_to_sylow(const Subgroup &P) const {
  memo_->queries.fetch_add(1, std::memory_order_relaxed);
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->homs.find(P.members());
    if (it != memo_->homs.end())
      return it->second;
  }
  std::vector<FMorphism> homs = compute_homs_to_sylow(P);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->homs.emplace(P.members(), std::move(homs)).first->second;
}

std::vector<FMorphism> FusionSystem::hom_set(const Subgroup &P, const Subgroup &Q) const {
  std::vector<FMorphism> result;
  for (const FMorphism &m : homs_to_sylow(P)) {
    bool inside = true;
    for (int y : m.img) {
      if (!Q.contains(y)) {
        inside = false;
        break;
      }
    }
    if (inside)
      result.push_back(m);
  }
  return result;
}

std::vector<FMorphism> FusionSystem::sylow_homs(const Subgroup &P, const Subgroup &Q) const {
  std::vector<FMorphism> all;
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->s_homs.find(P.members());
    if (it != memo_->s_homs.end())
      all = it->second;
  }
  if (all.empty()) {
    all = conjugation_homs(sylow_, P, sylow_);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->s_homs.emplace(P.members(), all);
  }
  if (Q == sylow_)
    return all;
  std::vector<FMorphism> result;
  for (const FMorphism &m : all) {
    bool inside = true;
    for (int y : m.img)
      if (!Q.contains(y)) {
        inside = false;
        break;
      }
    if (inside)
      result.push_back(m);
  }
  return result;
}

AutGroup FusionSystem::aut(const Subgroup &P) const {
  std::vector<FMorphism> morphs = hom_set(P, P);
  // identity first, the rest in canonical order
  std::sort(morphs.begin(), morphs.end(),
            [](const FMorphism &a, const FMorphism &b) {
              if (a.is_identity() != b.is_identity())
                return a.is_identity();
              return a.img < b.img;
            });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < morphs.size(); ++i)
    index[morphs[i].img] = static_cast<int>(i);

  int n = static_cast<int>(morphs.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FMorphism c = FMorphism::compose(morphs[i], morphs[j]);
      table[static_cast<std::size_t>(i) * n + j] = index.at(c.img);
    }
  return AutGroup{Group::from_table(std::move(table), n), std::move(morphs)};
}

GroupPtr FusionSystem::out(const Subgroup &P) const {
  AutGroup A = aut(P);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < A.morphisms.size(); ++i)
    index[A.morphisms[i].img] = static_cast<int>(i);
  std::vector<int> inner;
  for (int x : P.members())
    inner.push_back(index.at(FMorphism::conjugation(*ambient_, P.members(), x).img));
  Subgroup inn = Subgroup::unchecked(A.group, std::move(inner));
  return quotient(Subgroup::full(A.group), inn).first;
}

const std::vector<std::vector<int>> &FusionSystem::class_members(const Subgroup &P) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->classes.find(P.members());
    if (it != memo_->classes.end())
      return it->second;
  }
  std::set<std::vector<int>> images;
  for (const FMorphism &m : homs_to_sylow(P))
    images.insert(m.image_sorted());
  std::vector<std::vector<int>> cls(images.begin(), images.end());
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->classes.emplace(P.members(), std::move(cls)).first->second;
}

std::vector<Subgroup> FusionSystem::f_class(const Subgroup &P) const {
  std::vector<Subgroup> result;
  for (const std::vector<int> &mem : class_members(P))
    result.push_back(Subgroup::unchecked(ambient_, mem));
  return result;
}

std::vector<int> FusionSystem::element_class(int x) const {
  Subgroup P = Subgroup::closure(ambient_, {x});
  std::set<int> values;
  for (const FMorphism &m : homs_to_sylow(P))
    values.insert(m.apply(x));
  return {values.begin(), values.end()};
}

std::vector<int> FusionSystem::element_class_S(int x) const {
  const Group &G = *ambient_;
  std::set<int> values;
  for (int s : sylow_.members())
    values.insert(G.conj(s, x));
  return {values.begin(), values.end()};
}

std::vector<std::vector<int>> FusionSystem::tuple_class(const std::vector<int> &tuple) const {
  const Group &G = *ambient_;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (G.mul(tuple[i], tuple[j]) != G.mul(tuple[j], tuple[i]))
        throw std::invalid_argument("tuple entries must pairwise commute");
  Subgroup P = Subgroup::closure(ambient_, tuple);
  std::set<std::vector<int>> values;
  for (const FMorphism &m : homs_to_sylow(P)) {
    std::vector<int> image;
    image.reserve(tuple.size());
    for (int x : tuple)
      image.push_back(m.apply(x));
    values.insert(std::move(image));
  }
  return {values.begin(), values.end()};
}

std::vector<std::vector<int>> FusionSystem::tuple_class_S(const std::vector<int> &tuple) const {
  const Group &G = *ambient_;
  std::set<std::vector<int>> values;
  for (int s : sylow_.members()) {
    std::vector<int> image;
    image.reserve(tuple.size());
    for (int x : tuple)
      image.push_back(G.conj(s, x));
    values.insert(std::move(image));
  }
  return {values.begin(), values.end()};
}

bool FusionSystem::is_fully_normalized(const Subgroup &P) const {
  int mine = normalizer(sylow_, P).order();
  for (const std::vector<int> &mem : class_members(P)) {
    Subgroup other = Subgroup::unchecked(ambient_, mem);
    if (normalizer(sylow_, other).order() > mine)
      return false;
  }
  return true;
}

bool FusionSystem::is_fully_centralized(const Subgroup &P) const {
  int mine = centralizer(sylow_, P).order();
  for (const std::vector<int> &mem : class_members(P)) {
    Subgroup other = Subgroup::unchecked(ambient_, mem);
    if (centralizer(sylow_, other).order() > mine)
      return false;
  }
  return true;
}

bool FusionSystem::is_centric(const Subgroup &P) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->centric.find(P.members());
    if (it != memo_->centric.end())
      return it->second;
  }
  bool centric = true;
  for (const std::vector<int> &mem : class_members(P)) {
    Subgroup other = Subgroup::unchecked(ambient_, mem);
    if (!other.contains_subgroup(centralizer(sylow_, other))) {
      centric = false;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->centric.emplace(P.members(), centric);
  return centric;
}

bool FusionSystem::is_radical(const Subgroup &P) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->radical.find(P.members());
    if (it != memo_->radical.end())
      return it->second;
  }
  // O_p(Out_F(P)) as the intersection of the conjugates of one Sylow p-subgroup
  GroupPtr O = out(P);
  Subgroup syl = sylow_subgroup(O, p_);
  std::set<int> core(syl.members().begin(), syl.members().end());
  for (int g = 0; g < O->order() && core.size() > 1; ++g) {
    Subgroup conj = syl.conjugate(g);
    std::set<int> next;
    for (int x : conj.members())
      if (core.count(x))
        next.insert(x);
    core = std::move(next);
  }
  bool radical = core.size() == 1;
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->radical.emplace(P.members(), radical);
  return radical;
}

bool FusionSystem::is_weakly_closed(const Subgroup &P) const {
  return class_members(P).size() == 1;
}

Subgroup FusionSystem::n_phi(const FMorphism &phi) const {
  const Group &G = *ambient_;
  Subgroup P = Subgroup::unchecked(ambient_, phi.dom);
  Subgroup image = Subgroup::unchecked(ambient_, phi.image_sorted());
  std::set<FMorphism> aut_s;
  for (const FMorphism &m : conjugation_homs(sylow_, image, image))
    aut_s.insert(m);

  std::vector<int> members;
  FMorphism inv = phi.inverse();
  Subgroup ns = normalizer(sylow_, P);
  for (int g : ns.members()) {
    FMorphism twisted;
    twisted.dom = image.members();
    twisted.img.reserve(twisted.dom.size());
    for (int y : twisted.dom)
      twisted.img.push_back(phi.apply(G.conj(g, inv.apply(y))));
    if (aut_s.count(twisted))
      members.push_back(g);
  }
  return Subgroup(ambient_, std::move(members));
}

SaturationReport FusionSystem::check_saturation() const {
  SaturationReport report;
  const std::vector<Subgroup> &subs = subgroups();

  for (const Subgroup &P : subs) {
    if (!is_fully_normalized(P))
      continue;
    if (!is_fully_centralized(P)) {
      report.axiom1.push_back(
          {1, P, std::nullopt, "fully normalized but not fully centralized"});
      continue;
    }
    long aut_f = static_cast<long>(hom_set(P, P).size());
    long aut_s = static_cast<long>(sylow_homs(P, P).size());
    if (aut_s != p_part(aut_f, p_)) {
      report.axiom1.push_back(
          {1, P, std::nullopt,
           "Aut_S(P) has order " + std::to_string(aut_s) +
               ", not the p-part of |Aut_F(P)| = " + std::to_string(aut_f)});
    }
  }

  for (const Subgroup &P : subs) {
    for (const FMorphism &phi : homs_to_sylow(P)) {
      Subgroup image = Subgroup::unchecked(ambient_, phi.image_sorted());
      if (!is_fully_centralized(image))
        continue;
      Subgroup N = n_phi(phi);
      if (N.order() == P.order())
        continue; // phi extends to itself
      bool extends = false;
      for (const FMorphism &psi : homs_to_sylow(N)) {
        if (psi.restricted_to(phi.dom) == phi) {
          extends = true;
          break;
        }
      }
      if (!extends)
        report.axiom2.push_back({2, P, phi, "no extension of phi to N_phi"});
    }
  }
  return report;
}

std::vector<AlperinEntry> FusionSystem::alperin_generators() const {
  std::vector<AlperinEntry> result;
  for (const Subgroup &P : subgroups()) {
    if (is_fully_normalized(P) && is_centric(P) && is_radical(P))
      result.push_back({P, aut(P)});
  }
  return result;
}

bool FusionSystem::verify_alperin_generation() const {
  std::vector<FMorphism> seeds;
  for (const AlperinEntry &entry : alperin_generators())
    for (const FMorphism &m : entry.automorphisms.morphisms)
      seeds.push_back(m);
  auto closed = close_morphism_set(subgroups(), seeds, config_.morphism_budget);
  for (const Subgroup &P : subgroups()) {
    std::vector<FMorphism> expected = homs_to_sylow(P);
    std::sort(expected.begin(), expected.end());
    auto it = closed.find(P.members());
    if (it == closed.end() || it->second != expected)
      return false;
  }
  return true;
}

FusionSystem FusionSystem::filtered_subsystem(const Subgroup &Q,
                                              bool centralizer_mode) const {
  Subgroup base = centralizer_mode ? centralizer(sylow_, Q) : normalizer(sylow_, Q);
  std::vector<Subgroup> subs = all_subgroups(base, config_.max_sylow);
  std::vector<int> q_members = Q.members();

  std::map<std::vector<int>, std::vector<FMorphism>> homs;
  for (const Subgroup &P : subs) {
    std::vector<int> joint = P.members();
    joint.insert(joint.end(), q_members.begin(), q_members.end());
    Subgroup PQ = Subgroup::closure(ambient_, joint);

    std::vector<FMorphism> kept;
    for (const FMorphism &phi : hom_set(P, base)) {
      bool extendable = false;
      for (const FMorphism &psi : homs_to_sylow(PQ)) {
        if (!(psi.restricted_to(phi.dom) == phi))
          continue;
        if (centralizer_mode) {
          if (psi.restricted_to(q_members).is_identity()) {
            extendable = true;
            break;
          }
        } else {
          if (psi.restricted_to(q_members).image_sorted() == q_members) {
            extendable = true;
            break;
          }
        }
      }
      if (extendable)
        kept.push_back(phi);
    }
    std::sort(kept.begin(), kept.end());
    homs.emplace(P.members(), std::move(kept));
  }

  FusionSystem F;
  F.ambient_ = ambient_;
  F.sylow_ = base;
  F.p_ = p_;
  F.config_ = config_;
  F.explicit_source_ = true;
  F.explicit_homs_ = std::move(homs);
  F.memo_ = std::make_unique<Memo>();
  F.memo_->subgroups = std::move(subs);
  return F;
}

FusionSystem FusionSystem::normalizer_system(const Subgroup &Q) const {
  return filtered_subsystem(Q, false);
}

FusionSystem FusionSystem::centralizer_system(const Subgroup &Q) const {
  return filtered_subsystem(Q, true);
}

Subgroup FusionSystem::center() const {
  std::vector<const Subgroup *> centrics;
  for (const Subgroup &P : subgroups())
    if (is_centric(P))
      centrics.push_back(&P);

  std::vector<int> fixed;
  Subgroup zs = fusion::center(sylow_);
  for (int x : zs.members()) {
    bool ok = true;
    for (const Subgroup *P : centrics) {
      if (!P->contains(x))
        continue;
      for (const FMorphism &m : homs_to_sylow(*P)) {
        if (m.apply(x) != x) {
          ok = false;
          break;
        }
      }
      if (!ok)
        break;
    }
    if (ok)
      fixed.push_back(x);
  }
  return Subgroup(ambient_, std::move(fixed));
}

std::vector<Subgroup> FusionSystem::focal_range(FocalMode mode) const {
  if (mode == FocalMode::automatic)
    mode = explicit_source_ ? FocalMode::exhaustive : FocalMode::alperin;
  if (mode == FocalMode::exhaustive)
    return subgroups();
  std::vector<Subgroup> range;
  for (const AlperinEntry &entry : alperin_generators())
    range.push_back(entry.subgroup);
  return range;
}

Subgroup FusionSystem::focal(FocalMode mode) const {
  const Group &G = *ambient_;
  std::vector<int> gens = derived_subgroup(sylow_).members();
  for (const Subgroup &Q : focal_range(mode)) {
    for (const FMorphism &m : hom_set(Q, Q))
      for (std::size_t i = 0; i < m.dom.size(); ++i)
        gens.push_back(G.mul(G.inv(m.dom[i]), m.img[i]));
  }
  return Subgroup::closure(ambient_, gens);
}

Subgroup FusionSystem::hyperfocal(FocalMode mode) const {
  const Group &G = *ambient_;
  std::vector<int> gens;
  for (const Subgroup &Q : focal_range(mode)) {
    AutGroup A = aut(Q);
    Subgroup opp = o_p_prime_part(A.group, p_);
    for (int a : opp.members()) {
      const FMorphism &m = A.morphisms[a];
      for (std::size_t i = 0; i < m.dom.size(); ++i)
        gens.push_back(G.mul(G.inv(m.dom[i]), m.img[i]));
    }
  }
  return Subgroup::closure(ambient_, gens);
}

QuillenCategory FusionSystem::quillen_category(bool fusion_homs) const {
  QuillenCategory cat;
  cat.fusion_homs = fusion_homs;
  for (const Subgroup &P : subgroups())
    if (P.is_elementary_abelian(p_))
      cat.objects.push_back(P);
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    for (std::size_t j = 0; j < cat.objects.size(); ++j) {
      std::vector<FMorphism> homs =
          fusion_homs ? hom_set(cat.objects[i], cat.objects[j])
                      : sylow_homs(cat.objects[i], cat.objects[j]);
      std::sort(homs.begin(), homs.end());
      cat.homs[{static_cast<int>(i), static_cast<int>(j)}] = std::move(homs);
    }
  return cat;
}

std::optional<std::tuple<Subgroup, Subgroup, FMorphism>>
FusionSystem::quillen_fullness_witness() const {
  std::vector<Subgroup> objects;
  for (const Subgroup &P : subgroups())
    if (P.is_elementary_abelian(p_))
      objects.push_back(P);
  for (const Subgroup &V : objects) {
    for (const Subgroup &W : objects) {
      std::vector<FMorphism> in_f = hom_set(V, W);
      std::vector<FMorphism> in_s = sylow_homs(V, W);
      std::set<FMorphism> s_set(in_s.begin(), in_s.end());
      for (const FMorphism &m : in_f)
        if (!s_set.count(m))
          return std::make_tuple(V, W, m);
    }
  }
  return std::nullopt;
}

bool FusionSystem::quillen_inclusion_full() const {
  return !quillen_fullness_witness().has_value();
}

Subgroup o_p_prime_part(const GroupPtr &A, int p) {
  std::vector<int> gens;
  for (int x = 0; x < A->order(); ++x)
    if (A->element_order(x) % p != 0)
      gens.push_back(x);
  return Subgroup::closure(A, gens);
}

} // namespace fusion
