#include "fusion/nilpotency.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace fusion {

namespace {

using Clock = std::chrono::steady_clock;

// Wraps a criterion body with timing, hom-query accounting and cap handling.
template <typename Body>
CriterionVerdict timed(const FusionSystem &F, const std::string &id, Body &&body) {
  CriterionVerdict v;
  v.criterion_id = id;
  long queries_before = F.hom_queries();
  auto start = Clock::now();
  try {
    body(v);
  } catch (const cap_exceeded &e) {
    v.verdict = Verdict::NotComputed;
    v.reason = e.what();
    v.witness.reset();
  }
  v.cost.milliseconds =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  v.cost.hom_queries = F.hom_queries() - queries_before;
  return v;
}

std::string element_list(const Group &G, const std::vector<int> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      s += ", ";
    s += G.element_name(xs[i]);
  }
  return s;
}

bool is_sylow_map(const FusionSystem &F, const FMorphism &m) {
  const Group &G = *F.ambient();
  for (int s : F.sylow().members()) {
    bool match = true;
    for (std::size_t i = 0; i < m.dom.size(); ++i) {
      if (G.conj(s, m.dom[i]) != m.img[i]) {
        match = false;
        break;
      }
    }
    if (match)
      return true;
  }
  return false;
}

Witness morphism_witness(const FusionSystem &F, const Subgroup &P, const FMorphism &m,
                         const std::string &kind) {
  Witness w;
  w.kind = kind;
  w.subgroup = P.members();
  w.morphism = m;
  const Group &G = *F.ambient();
  w.text = "morphism on {" + element_list(G, m.dom) + "} sending " +
           element_list(G, m.dom) + " to " + element_list(G, m.img) +
           " is not induced by conjugation in S";
  return w;
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::True:
    return "true";
  case Verdict::False:
    return "false";
  case Verdict::Inconclusive:
    return "inconclusive";
  case Verdict::NotComputed:
    return "not-computed";
  }
  return "?";
}

CriterionVerdict crit_definition(const FusionSystem &F) {
  return timed(F, "definition", [&](CriterionVerdict &v) {
    for (const Subgroup &P : F.subgroups()) {
      for (const Subgroup &Q : F.subgroups()) {
        std::vector<FMorphism> in_f = F.hom_set(P, Q);
        std::vector<FMorphism> in_s = F.sylow_homs(P, Q);
        std::set<FMorphism> s_set(in_s.begin(), in_s.end());
        for (const FMorphism &m : in_f) {
          if (!s_set.count(m)) {
            v.verdict = Verdict::False;
            v.witness = morphism_witness(F, P, m, "morphism");
            v.witness->subgroup2 = Q.members();
            return;
          }
        }
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict crit_element_fusion(const FusionSystem &F) {
  return timed(F, "element-fusion", [&](CriterionVerdict &v) {
    const Group &G = *F.ambient();
    for (int x : F.sylow().members()) {
      std::vector<int> f_class = F.element_class(x);
      std::vector<int> s_class = F.element_class_S(x);
      if (f_class != s_class) {
        // F-classes contain S-classes, so the difference is on the F side
        int other = -1;
        for (int y : f_class)
          if (!std::binary_search(s_class.begin(), s_class.end(), y)) {
            other = y;
            break;
          }
        v.verdict = Verdict::False;
        Witness w;
        w.kind = "element-pair";
        w.elements = std::vector<int>{x, other};
        w.text = "elements " + G.element_name(x) + " and " + G.element_name(other) +
                 " are fused by the system but not conjugate in S";
        v.witness = std::move(w);
        return;
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict crit_tuple_fusion(const FusionSystem &F, int n) {
  if (n < 2)
    throw std::invalid_argument("tuple criterion requires n >= 2");
  return timed(F, "tuple-fusion", [&](CriterionVerdict &v) {
    const Group &G = *F.ambient();
    const std::vector<int> &mem = F.sylow().members();
    std::set<std::vector<int>> processed; // S-orbit representatives already seen

    std::vector<int> tuple(n, 0);
    std::vector<std::size_t> odometer(n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i)
        tuple[i] = mem[odometer[i]];
      bool commuting = true;
      for (int i = 0; i < n && commuting; ++i)
        for (int j = i + 1; j < n; ++j)
          if (G.mul(tuple[i], tuple[j]) != G.mul(tuple[j], tuple[i])) {
            commuting = false;
            break;
          }
      if (commuting && !processed.count(tuple)) {
        std::vector<std::vector<int>> s_orbit = F.tuple_class_S(tuple);
        for (const std::vector<int> &t : s_orbit)
          processed.insert(t);
        std::vector<std::vector<int>> f_orbit = F.tuple_class(tuple);
        if (f_orbit != s_orbit) {
          std::vector<int> other;
          for (const std::vector<int> &t : f_orbit)
            if (!std::binary_search(s_orbit.begin(), s_orbit.end(), t)) {
              other = t;
              break;
            }
          v.verdict = Verdict::False;
          Witness w;
          w.kind = "tuple-pair";
          w.elements = tuple;
          w.elements2 = other;
          w.text = "commuting tuples (" + element_list(G, tuple) + ") and (" +
                   element_list(G, other) +
                   ") are fused by the system but not conjugate in S";
          v.witness = std::move(w);
          return;
        }
      }
      // advance odometer
      int pos = n - 1;
      while (pos >= 0 && ++odometer[pos] == mem.size()) {
        odometer[pos] = 0;
        --pos;
      }
      if (pos < 0)
        break;
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict crit_frobenius(const FusionSystem &F, FrobeniusScope scope) {
  std::string id =
      scope == FrobeniusScope::all ? "frobenius-all" : "frobenius-centric";
  return timed(F, id, [&, scope](CriterionVerdict &v) {
    for (const Subgroup &P : F.subgroups()) {
      if (scope == FrobeniusScope::centric && !F.is_centric(P))
        continue;
      std::vector<FMorphism> auts = F.hom_set(P, P);
      long count = static_cast<long>(auts.size());
      if (p_part(count, F.p()) == count)
        continue;
      // an automorphism of order prime to p exists; locate one
      AutGroup A = F.aut(P);
      for (int a = 1; a < A.order(); ++a) {
        int o = A.group->element_order(a);
        if (o % F.p() != 0) {
          v.verdict = Verdict::False;
          Witness w = morphism_witness(F, P, A.morphisms[a], "automorphism");
          w.text = "Aut_F(P) for P = {" + element_list(*F.ambient(), P.members()) +
                   "} has order " + std::to_string(count) +
                   ", not a power of p; shown automorphism has order " +
                   std::to_string(o);
          v.witness = std::move(w);
          return;
        }
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict crit_focal(const FusionSystem &F) {
  return timed(F, "focal", [&](CriterionVerdict &v) {
    Subgroup derived = derived_subgroup(F.sylow());
    Subgroup foc = F.focal();
    if (foc.members() == derived.members()) {
      v.verdict = Verdict::True;
      return;
    }
    // locate a focal generator outside [S,S]
    const Group &G = *F.ambient();
    for (const Subgroup &Q : F.subgroups()) {
      for (const FMorphism &m : F.hom_set(Q, Q)) {
        for (std::size_t i = 0; i < m.dom.size(); ++i) {
          int gen = G.mul(G.inv(m.dom[i]), m.img[i]);
          if (!derived.contains(gen)) {
            v.verdict = Verdict::False;
            Witness w;
            w.kind = "focal-generator";
            w.subgroup = Q.members();
            w.morphism = m;
            w.elements = std::vector<int>{m.dom[i], gen};
            w.text = "g^-1 a(g) = " + G.element_name(gen) + " for g = " +
                     G.element_name(m.dom[i]) +
                     " lies in the focal subgroup but not in [S,S]";
            v.witness = std::move(w);
            return;
          }
        }
      }
    }
    throw std::logic_error("focal subgroup differs from [S,S] but no witness found");
  });
}

CriterionVerdict crit_abelian(const FusionSystem &F) {
  return timed(F, "abelian", [&](CriterionVerdict &v) {
    if (!F.sylow().is_abelian()) {
      v.applicable = false;
      v.reason = "requires abelian S";
      v.verdict = Verdict::NotComputed;
      return;
    }
    bool aut_trivial = F.hom_set(F.sylow(), F.sylow()).size() == 1;
    bool classes_singletons = true;
    int moved = -1;
    for (int x : F.sylow().members()) {
      if (F.element_class(x).size() != 1) {
        classes_singletons = false;
        moved = x;
        break;
      }
    }
    if (aut_trivial != classes_singletons)
      throw std::logic_error("abelian criterion: the two equivalent conditions "
                             "disagree");
    if (aut_trivial) {
      v.verdict = Verdict::True;
    } else {
      v.verdict = Verdict::False;
      Witness w;
      w.kind = "element-pair";
      int other = -1;
      for (int y : F.element_class(moved))
        if (y != moved) {
          other = y;
          break;
        }
      w.elements = std::vector<int>{moved, other};
      w.text = "S is abelian yet " + F.ambient()->element_name(moved) +
               " is fused to " + F.ambient()->element_name(other);
      v.witness = std::move(w);
    }
  });
}

CriterionVerdict crit_quillen(const FusionSystem &F) {
  return timed(F, "quillen", [&](CriterionVerdict &v) {
    if (F.p() == 2) {
      v.applicable = false;
      v.reason = "theorem requires odd p; hypothesis evaluated for information";
      v.hypothesis_only = true;
    }
    for (const Subgroup &V : F.subgroups()) {
      if (!V.is_elementary_abelian(F.p()) || !V.is_normal_in(F.sylow()))
        continue;
      bool wc = F.is_weakly_closed(V);
      long aut_order = static_cast<long>(F.hom_set(V, V).size());
      bool aut_p_group = p_part(aut_order, F.p()) == aut_order;
      if (!wc || !aut_p_group) {
        v.verdict = Verdict::False;
        Witness w;
        w.kind = "subgroup";
        w.subgroup = V.members();
        w.text = "elementary abelian normal subgroup {" +
                 element_list(*F.ambient(), V.members()) + "} is " +
                 (wc ? ("weakly closed but has Aut_F of order " +
                        std::to_string(aut_order) + ", not a power of p")
                     : "not weakly closed");
        v.witness = std::move(w);
        return;
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict crit_quillen_category(const FusionSystem &F) {
  return timed(F, "quillen-category", [&](CriterionVerdict &v) {
    if (F.p() == 2) {
      v.applicable = false;
      v.reason = "theorem requires odd p; hypothesis evaluated for information";
      v.hypothesis_only = true;
    }
    auto witness = F.quillen_fullness_witness();
    if (!witness) {
      v.verdict = Verdict::True;
      return;
    }
    auto &[V, W, m] = *witness;
    v.verdict = Verdict::False;
    Witness w = morphism_witness(F, V, m, "morphism");
    w.subgroup2 = W.members();
    w.text = "elementary abelian hom-sets differ: " + w.text;
    v.witness = std::move(w);
  });
}

CriterionVerdict crit_control_fusion(const FusionSystem &F) {
  return timed(F, "control-fusion", [&](CriterionVerdict &v) {
    const Group &G = *F.ambient();
    long bound = F.p() == 2 ? 4 : F.p();
    std::set<std::vector<int>> seen;
    for (int x : F.sylow().members()) {
      if (G.power(x, bound) != G.identity())
        continue;
      Subgroup P = Subgroup::closure(F.ambient(), {x});
      if (!seen.insert(P.members()).second)
        continue;
      for (const FMorphism &m : F.homs_to_sylow(P)) {
        if (!is_sylow_map(F, m)) {
          v.verdict = Verdict::False;
          v.witness = morphism_witness(F, P, m, "morphism");
          return;
        }
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict suff_central_elements(const FusionSystem &F) {
  return timed(F, "suff-central-elements", [&](CriterionVerdict &v) {
    const Group &G = *F.ambient();
    // The hypothesis bounds the exponent: every x with x^(p^n) = 1 for the
    // least p^n > 2 must be central, so x^p = 1 for odd p and x^4 = 1 for
    // p = 2, involutions included.
    long bound = F.p() == 2 ? 4 : F.p();
    for (int x : F.sylow().members()) {
      if (G.power(x, bound) != G.identity())
        continue;
      if (F.element_class(x).size() != 1) {
        v.verdict = Verdict::Inconclusive;
        v.reason = "element " + G.element_name(x) + " of order " +
                   std::to_string(G.element_order(x)) +
                   " is not central in the fusion system";
        return;
      }
    }
    v.verdict = Verdict::True;
  });
}

CriterionVerdict suff_omega_center(const FusionSystem &F) {
  return timed(F, "suff-omega-center", [&](CriterionVerdict &v) {
    int i = F.p() == 2 ? 2 : 1;
    Subgroup om = omega(F.sylow(), F.p(), i);
    Subgroup zf = F.center();
    if (zf.contains_subgroup(om)) {
      v.verdict = Verdict::True;
    } else {
      v.verdict = Verdict::Inconclusive;
      v.reason = "Omega_" + std::to_string(i) +
                 "(S) is not contained in the center of the fusion system";
    }
  });
}

bool reverify_witness(const FusionSystem &F, const CriterionVerdict &verdict) {
  if (!verdict.witness)
    return false;
  const Witness &w = *verdict.witness;
  const std::string &id = verdict.criterion_id;
  const Group &G = *F.ambient();

  if (id == "definition" || id == "quillen-category" || id == "control-fusion") {
    if (!w.subgroup || !w.morphism)
      return false;
    Subgroup P = Subgroup(F.ambient(), *w.subgroup);
    std::vector<FMorphism> homs = F.homs_to_sylow(P);
    if (std::find(homs.begin(), homs.end(), *w.morphism) == homs.end())
      return false;
    if (w.subgroup2) {
      Subgroup Q = Subgroup(F.ambient(), *w.subgroup2);
      for (int y : w.morphism->img)
        if (!Q.contains(y))
          return false;
    }
    return !is_sylow_map(F, *w.morphism);
  }
  if (id == "element-fusion" || id == "abelian") {
    if (!w.elements || w.elements->size() != 2)
      return false;
    int a = (*w.elements)[0], b = (*w.elements)[1];
    std::vector<int> f_class = F.element_class(a);
    std::vector<int> s_class = F.element_class_S(a);
    return std::binary_search(f_class.begin(), f_class.end(), b) &&
           !std::binary_search(s_class.begin(), s_class.end(), b);
  }
  if (id == "tuple-fusion") {
    if (!w.elements || !w.elements2)
      return false;
    std::vector<std::vector<int>> f_orbit = F.tuple_class(*w.elements);
    std::vector<std::vector<int>> s_orbit = F.tuple_class_S(*w.elements);
    return std::binary_search(f_orbit.begin(), f_orbit.end(), *w.elements2) &&
           !std::binary_search(s_orbit.begin(), s_orbit.end(), *w.elements2);
  }
  if (id == "frobenius-all" || id == "frobenius-centric") {
    if (!w.subgroup || !w.morphism)
      return false;
    Subgroup P = Subgroup(F.ambient(), *w.subgroup);
    std::vector<FMorphism> auts = F.hom_set(P, P);
    if (std::find(auts.begin(), auts.end(), *w.morphism) == auts.end())
      return false;
    // order of the witness automorphism under composition
    FMorphism power = *w.morphism;
    int o = 1;
    while (!power.is_identity()) {
      power = FMorphism::compose(*w.morphism, power);
      ++o;
    }
    return o % F.p() != 0 && o > 1;
  }
  if (id == "focal") {
    if (!w.subgroup || !w.morphism || !w.elements || w.elements->size() != 2)
      return false;
    int g = (*w.elements)[0], gen = (*w.elements)[1];
    Subgroup Q = Subgroup(F.ambient(), *w.subgroup);
    std::vector<FMorphism> auts = F.hom_set(Q, Q);
    if (std::find(auts.begin(), auts.end(), *w.morphism) == auts.end())
      return false;
    if (G.mul(G.inv(g), w.morphism->apply(g)) != gen)
      return false;
    return !derived_subgroup(F.sylow()).contains(gen);
  }
  if (id == "quillen") {
    if (!w.subgroup)
      return false;
    Subgroup V = Subgroup(F.ambient(), *w.subgroup);
    if (!V.is_elementary_abelian(F.p()) || !V.is_normal_in(F.sylow()))
      return false;
    long aut_order = static_cast<long>(F.hom_set(V, V).size());
    return !F.is_weakly_closed(V) || p_part(aut_order, F.p()) != aut_order;
  }
  return false;
}

const std::vector<std::string> &criterion_ids() {
  static const std::vector<std::string> ids = {
      "abelian",        "control-fusion",   "definition",
      "element-fusion", "focal",            "frobenius-all",
      "frobenius-centric", "quillen",       "quillen-category",
      "suff-central-elements", "suff-omega-center", "tuple-fusion"};
  return ids;
}

CriterionVerdict run_criterion(const FusionSystem &F, const std::string &id) {
  if (id == "definition")
    return crit_definition(F);
  if (id == "element-fusion")
    return crit_element_fusion(F);
  if (id == "tuple-fusion")
    return crit_tuple_fusion(F, F.config().tuple_n);
  if (id == "frobenius-all")
    return crit_frobenius(F, FrobeniusScope::all);
  if (id == "frobenius-centric")
    return crit_frobenius(F, FrobeniusScope::centric);
  if (id == "focal")
    return crit_focal(F);
  if (id == "abelian")
    return crit_abelian(F);
  if (id == "quillen")
    return crit_quillen(F);
  if (id == "quillen-category")
    return crit_quillen_category(F);
  if (id == "control-fusion")
    return crit_control_fusion(F);
  if (id == "suff-central-elements")
    return suff_central_elements(F);
  if (id == "suff-omega-center")
    return suff_omega_center(F);
  throw std::invalid_argument("unknown criterion id: " + id);
}

RunResult run_all(const FusionSystem &F) {
  RunResult result;
  for (const std::string &id : criterion_ids())
    result.verdicts.push_back(run_criterion(F, id));

  bool sufficient_true = false;
  for (const CriterionVerdict &v : result.verdicts) {
    bool sufficient_only = v.criterion_id.rfind("suff-", 0) == 0;
    if (sufficient_only) {
      if (v.verdict == Verdict::True)
        sufficient_true = true;
      continue;
    }
    if (!v.applicable || v.hypothesis_only || v.verdict == Verdict::NotComputed)
      continue;
    bool value = v.verdict == Verdict::True;
    if (!result.agreed_verdict) {
      result.agreed_verdict = value;
    } else if (*result.agreed_verdict != value) {
      result.agreement = false;
      result.notes.push_back("criterion '" + v.criterion_id +
                             "' disagrees with the other criteria");
    }
  }
  if (sufficient_true && result.agreed_verdict && !*result.agreed_verdict) {
    result.agreement = false;
    result.notes.push_back("a sufficient-only check returned true on a "
                           "non-nilpotent system");
  }
  return result;
}

} // namespace fusion
