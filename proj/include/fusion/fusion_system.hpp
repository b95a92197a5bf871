#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusion/config.hpp"
#include "fusion/group.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

// An injective homomorphism between subgroups of the Sylow group, stored as
// a total element map in the ambient handle space.  `dom` is sorted and
// `img[i]` is the image of `dom[i]`.  Two morphisms are equal exactly when
// their element maps are equal; the codomain is contextual (every morphism
// factors as an isomorphism onto its image followed by an inclusion).
struct FMorphism {
  std::vector<int> dom;
  std::vector<int> img;

  int apply(int x) const;
  std::vector<int> image_sorted() const;
  bool is_identity() const { return dom == img; }

  FMorphism restricted_to(const std::vector<int> &sub_members) const;
  FMorphism inverse() const;
  // (outer o inner); requires image(inner) <= dom(outer)
  static FMorphism compose(const FMorphism &outer, const FMorphism &inner);

  static FMorphism identity_on(const std::vector<int> &members);
  static FMorphism conjugation(const Group &G, const std::vector<int> &members, int g);

  friend bool operator==(const FMorphism &a, const FMorphism &b) = default;
  friend bool operator<(const FMorphism &a, const FMorphism &b) {
    if (a.dom != b.dom)
      return a.dom < b.dom;
    return a.img < b.img;
  }

  // The morphism as a GroupMap into the given codomain, flagged injective.
  GroupMap as_group_map(const GroupPtr &parent, const Subgroup &codomain) const;
};

// Conjugation-induced morphisms P -> Q with conjugating elements drawn from
// `ambient`, deduplicated by element map.
std::vector<FMorphism> conjugation_homs(const Subgroup &ambient, const Subgroup &P,
                                        const Subgroup &Q);

// Aut_F(P) (or Out_F(P)) realized as a table-backed group; handle i belongs
// to morphisms[i] and handle 0 is the identity.
struct AutGroup {
  GroupPtr group;
  std::vector<FMorphism> morphisms;

  int order() const { return group->order(); }
};

struct SaturationViolation {
  int axiom; // 1 or 2
  Subgroup subgroup;
  std::optional<FMorphism> morphism;
  std::string detail;
};

struct SaturationReport {
  std::vector<SaturationViolation> axiom1;
  std::vector<SaturationViolation> axiom2;

  bool saturated() const { return axiom1.empty() && axiom2.empty(); }
};

struct AlperinEntry {
  Subgroup subgroup;
  AutGroup automorphisms;
};

// Quillen category over the elementary abelian p-subgroups of S, with
// hom-sets from S-conjugation (eps_S) or from the fusion system (eps_F).
struct QuillenCategory {
  bool fusion_homs;
  std::vector<Subgroup> objects;
  // homs[{i,j}] = morphisms objects[i] -> objects[j]
  std::map<std::pair<int, int>, std::vector<FMorphism>> homs;
};

// A fusion system over a p-group S.  Group-induced systems compute hom-sets
// from transporters in an ambient group in which S is Sylow; generated
// systems and normalizer/centralizer subsystems carry fully materialized
// hom-sets.  Values are immutable; queries are pure and safe to run
// concurrently (internal memoization is mutex-guarded).
class FusionSystem {
public:
  enum class FocalMode { automatic, alperin, exhaustive };

  FusionSystem(FusionSystem &&) noexcept;
  FusionSystem &operator=(FusionSystem &&) noexcept;
  ~FusionSystem();

  static FusionSystem group_fusion(GroupPtr G, int p, Config config = {});
  static FusionSystem group_fusion_over(GroupPtr G, Subgroup S, int p,
                                        Config config = {});
  // Fusion system over S generated by explicit automorphisms together with
  // all S-conjugation maps, closed under restriction, composition and
  // inversion of isomorphisms.
  static FusionSystem generated(GroupPtr S, int p,
                                const std::vector<FMorphism> &generators,
                                Config config = {});

  const GroupPtr &ambient() const { return ambient_; }
  const Subgroup &sylow() const { return sylow_; }
  int p() const { return p_; }
  const Config &config() const { return config_; }
  bool group_induced() const { return !explicit_source_; }

  // All subgroups of S (cached; throws cap_exceeded when |S| > max_sylow).
  const std::vector<Subgroup> &subgroups() const;

  // Hom_F(P, Q); morphisms are maps into S with image inside Q.
  std::vector<FMorphism> hom_set(const Subgroup &P, const Subgroup &Q) const;
  std::vector<FMorphism> homs_to_sylow(const Subgroup &P) const;

  // Hom_S(P, Q): the conjugation maps supplied by S itself.
  std::vector<FMorphism> sylow_homs(const Subgroup &P, const Subgroup &Q) const;

  AutGroup aut(const Subgroup &P) const;
  GroupPtr out(const Subgroup &P) const;

  std::vector<Subgroup> f_class(const Subgroup &P) const;
  std::vector<int> element_class(int x) const;            // F-class of x
  std::vector<int> element_class_S(int x) const;          // S-class of x
  std::vector<std::vector<int>> tuple_class(const std::vector<int> &tuple) const;
  std::vector<std::vector<int>> tuple_class_S(const std::vector<int> &tuple) const;

  bool is_fully_normalized(const Subgroup &P) const;
  bool is_fully_centralized(const Subgroup &P) const;
  bool is_centric(const Subgroup &P) const;
  bool is_radical(const Subgroup &P) const;
  bool is_weakly_closed(const Subgroup &P) const;

  // N_phi = { g in N_S(P) : phi c_g phi^-1 in Aut_S(phi P) }
  Subgroup n_phi(const FMorphism &phi) const;

  SaturationReport check_saturation() const;

  std::vector<AlperinEntry> alperin_generators() const;
  bool verify_alperin_generation() const;

  FusionSystem normalizer_system(const Subgroup &Q) const;
  FusionSystem centralizer_system(const Subgroup &Q) const;

  // Z_F(S): elements of Z(S) fixed by every morphism between F-centric
  // subgroups whose domain contains them.
  Subgroup center() const;

  // Foc(F) = < g^-1 a(g) >, Hyp(F) the same with a restricted to
  // O^p(Aut_F(P)).  The alperin mode ranges over fully normalized centric
  // radical subgroups (plus [S,S] for Foc); exhaustive ranges over all
  // subgroups.  `automatic` picks alperin for group-induced systems and
  // exhaustive otherwise.
  Subgroup focal(FocalMode mode = FocalMode::automatic) const;
  Subgroup hyperfocal(FocalMode mode = FocalMode::automatic) const;

  QuillenCategory quillen_category(bool fusion_homs) const;
  bool quillen_inclusion_full() const;
  // (V, W, phi) with phi in Hom_F(V, W) \ Hom_S(V, W), if any.
  std::optional<std::tuple<Subgroup, Subgroup, FMorphism>>
  quillen_fullness_witness() const;

  long hom_queries() const;

private:
  FusionSystem() = default;

  std::vector<FMorphism> compute_homs_to_sylow(const Subgroup &P) const;
  const std::vector<std::vector<int>> &class_members(const Subgroup &P) const;
  FusionSystem filtered_subsystem(const Subgroup &Q, bool centralizer_mode) const;
  std::vector<Subgroup> focal_range(FocalMode mode) const;

  GroupPtr ambient_;
  Subgroup sylow_;
  int p_ = 0;
  Config config_;
  bool explicit_source_ = false;
  std::map<std::vector<int>, std::vector<FMorphism>> explicit_homs_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

// O^p(A): the subgroup generated by the elements of order prime to p.
Subgroup o_p_prime_part(const GroupPtr &A, int p);

// Fixpoint closure of a morphism set under inversion, restriction to the
// given subgroups, and composition.  Returns morphisms bucketed by domain.
std::map<std::vector<int>, std::vector<FMorphism>>
close_morphism_set(const std::vector<Subgroup> &subgroups,
                   const std::vector<FMorphism> &seeds, long budget);

// True when m is an injective homomorphism between subgroups of S.
bool is_valid_morphism(const Group &G, const Subgroup &S, const FMorphism &m);

} // namespace fusion
