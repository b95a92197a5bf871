#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusion/nilpotency.hpp"
#include "fusion/group_spec.hpp"
#include "fusion/oracle.hpp"

using namespace fusion;

namespace {

FusionSystem make(const std::string &name, int p, Config config = {}) {
  return FusionSystem::group_fusion(build_group(builtin_spec(name)), p, config);
}

CriterionVerdict checked(const FusionSystem &F, const std::string &id) {
  CriterionVerdict v = run_criterion(F, id);
  // witness exactly on false verdicts, and it re-verifies
  CHECK((v.witness.has_value() == (v.verdict == Verdict::False)));
  if (v.witness)
    CHECK(reverify_witness(F, v));
  return v;
}

} // namespace

TEST_CASE("definition criterion") {
  FusionSystem d8 = make("D8", 2);
  CHECK(checked(d8, "definition").verdict == Verdict::True);

  FusionSystem a4 = make("A4", 2);
  CriterionVerdict v = checked(a4, "definition");
  CHECK(v.verdict == Verdict::False);
  REQUIRE(v.witness);
  CHECK(v.witness->morphism.has_value());

  FusionSystem s3 = make("S3", 2);
  CHECK(checked(s3, "definition").verdict == Verdict::True);
}

TEST_CASE("element fusion criterion") {
  CHECK(checked(make("S3", 2), "element-fusion").verdict == Verdict::True);
  CHECK(checked(make("D16", 2), "element-fusion").verdict == Verdict::True);

  FusionSystem a4 = make("A4", 2);
  CriterionVerdict v = checked(a4, "element-fusion");
  CHECK(v.verdict == Verdict::False);
  REQUIRE(v.witness);
  REQUIRE(v.witness->elements);
  CHECK(v.witness->elements->size() == 2);
}

TEST_CASE("tuple fusion criterion") {
  FusionSystem a4 = make("A4", 2);
  CHECK(checked(a4, "tuple-fusion").verdict == Verdict::False);

  CHECK(checked(make("D8", 2), "tuple-fusion").verdict == Verdict::True);
  CHECK(checked(make("S3", 2), "tuple-fusion").verdict == Verdict::True);

  // n = 3 also works
  CHECK(crit_tuple_fusion(make("D8", 2), 3).verdict == Verdict::True);
  CHECK(crit_tuple_fusion(a4, 3).verdict == Verdict::False);
  CHECK_THROWS_AS(crit_tuple_fusion(a4, 1), std::invalid_argument);
}

TEST_CASE("frobenius criteria") {
  FusionSystem s3p3 = make("S3", 3);
  CriterionVerdict v = checked(s3p3, "frobenius-all");
  CHECK(v.verdict == Verdict::False); // Aut_F(C3) has order 2

  CHECK(checked(make("D8", 2), "frobenius-all").verdict == Verdict::True);

  FusionSystem sl = make("SL(2,3)", 2);
  CriterionVerdict centric = checked(sl, "frobenius-centric");
  CHECK(centric.verdict == Verdict::False); // fails at Q8 itself
  REQUIRE(centric.witness);
  CHECK(centric.witness->subgroup->size() == 8);

  // scope "all" and scope "centric" agree on saturated systems
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"S4", 2}, {"A4", 2}, {"SL(2,3)", 2}, {"S3", 3}, {"D16", 2},
           {"E27:C2", 3}, {"C7:C3", 7}, {"A5", 5}}) {
    FusionSystem F = make(name, p);
    CHECK(checked(F, "frobenius-all").verdict ==
          checked(F, "frobenius-centric").verdict);
  }
}

TEST_CASE("focal criterion") {
  FusionSystem a4 = make("A4", 2);
  CriterionVerdict v = checked(a4, "focal");
  CHECK(v.verdict == Verdict::False); // Foc = V4 while [S,S] = 1

  CHECK(checked(make("D32", 2), "focal").verdict == Verdict::True);

  FusionSystem s4 = make("S4", 2);
  CHECK(checked(s4, "focal").verdict == Verdict::False); // order 4 vs order 2
}

TEST_CASE("abelian criterion") {
  CHECK(checked(make("S3", 2), "abelian").verdict == Verdict::True);

  FusionSystem a4 = make("A4", 2);
  CHECK(checked(a4, "abelian").verdict == Verdict::False);

  CriterionVerdict gated = checked(make("Q8", 2), "abelian");
  CHECK_FALSE(gated.applicable);
  CHECK(gated.verdict == Verdict::NotComputed);
  CHECK(gated.reason == "requires abelian S");
}

TEST_CASE("quillen criterion") {
  FusionSystem c7p7 = make("C7:C3", 7);
  CriterionVerdict v7 = checked(c7p7, "quillen");
  CHECK(v7.applicable);
  CHECK(v7.verdict == Verdict::False); // Aut_F(C7) is C3, not a 7-group

  FusionSystem c7p3 = make("C7:C3", 3);
  CriterionVerdict v3 = checked(c7p3, "quillen");
  CHECK(v3.applicable);
  CHECK(v3.verdict == Verdict::True);

  // the p = 2 counterexample: hypothesis true, system not nilpotent
  FusionSystem sl = make("SL(2,3)", 2);
  CriterionVerdict v2 = checked(sl, "quillen");
  CHECK_FALSE(v2.applicable);
  CHECK(v2.hypothesis_only);
  CHECK(v2.verdict == Verdict::True);
  CHECK(checked(sl, "element-fusion").verdict == Verdict::False);

  FusionSystem e27 = make("E27:C2", 3);
  CriterionVerdict ve = checked(e27, "quillen");
  CHECK(ve.verdict == Verdict::False); // the center is inverted
}

TEST_CASE("quillen category criterion") {
  FusionSystem s3p3 = make("S3", 3);
  CriterionVerdict v = checked(s3p3, "quillen-category");
  CHECK(v.verdict == Verdict::False);

  CHECK(checked(make("C7:C3", 3), "quillen-category").verdict == Verdict::True);
  CHECK(checked(make("C9", 3), "quillen-category").verdict == Verdict::True);

  // fullness holds for F_{Q8}(SL(2,3)) at p = 2 even though the system is
  // not nilpotent; reported as hypothesis-only and excluded from agreement
  FusionSystem sl = make("SL(2,3)", 2);
  CriterionVerdict v2 = checked(sl, "quillen-category");
  CHECK_FALSE(v2.applicable);
  CHECK(v2.hypothesis_only);
  CHECK(v2.verdict == Verdict::True);
}

TEST_CASE("control of fusion criterion") {
  FusionSystem sl = make("SL(2,3)", 2);
  CriterionVerdict v = checked(sl, "control-fusion");
  CHECK(v.verdict == Verdict::False); // an order-4 element leaves its S-class

  CHECK(checked(make("D16", 2), "control-fusion").verdict == Verdict::True);

  FusionSystem a4 = make("A4", 2);
  CHECK(checked(a4, "control-fusion").verdict == Verdict::False);
}

TEST_CASE("sufficient-only checks") {
  CHECK(checked(make("C3", 3), "suff-central-elements").verdict == Verdict::True);
  CHECK(checked(make("S3", 3), "suff-central-elements").verdict ==
        Verdict::Inconclusive);
  CHECK(checked(make("SL(2,3)", 2), "suff-central-elements").verdict ==
        Verdict::Inconclusive);

  CHECK(checked(make("C9", 3), "suff-omega-center").verdict == Verdict::True);
  // sufficiency only: Q8 over itself is nilpotent yet Omega_2 = Q8 is not
  // contained in Z_F = Z(Q8)
  CHECK(checked(make("Q8", 2), "suff-omega-center").verdict ==
        Verdict::Inconclusive);
  CHECK(checked(make("SL(2,3)", 2), "suff-omega-center").verdict ==
        Verdict::Inconclusive);
}

TEST_CASE("run_all agreement") {
  RunResult nil = run_all(make("D8", 2));
  CHECK(nil.agreement);
  REQUIRE(nil.agreed_verdict);
  CHECK(*nil.agreed_verdict);

  RunResult a4 = run_all(make("A4", 2));
  CHECK(a4.agreement);
  REQUIRE(a4.agreed_verdict);
  CHECK_FALSE(*a4.agreed_verdict);

  RunResult sl2 = run_all(make("SL(2,3)", 2));
  CHECK(sl2.agreement); // quillen hypothesis-only excluded
  REQUIRE(sl2.agreed_verdict);
  CHECK_FALSE(*sl2.agreed_verdict);
  for (const CriterionVerdict &v : sl2.verdicts)
    if (v.criterion_id == "quillen") {
      CHECK(v.hypothesis_only);
      CHECK(v.verdict == Verdict::True);
    }

  RunResult sl3 = run_all(make("SL(2,3)", 3));
  CHECK(sl3.agreement);
  REQUIRE(sl3.agreed_verdict);
  CHECK(*sl3.agreed_verdict);
}

TEST_CASE("implications between criteria") {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"S4", 2}, {"A4", 2}, {"D12", 2}, {"D12", 3}, {"C3xS3", 3},
           {"A5", 2}, {"C7:C3", 3}}) {
    FusionSystem F = make(name, p);
    CriterionVerdict tuple = run_criterion(F, "tuple-fusion");
    CriterionVerdict element = run_criterion(F, "element-fusion");
    // diagonal tuples force element fusion
    if (tuple.verdict == Verdict::True)
      CHECK(element.verdict == Verdict::True);
    // sufficient checks never contradict the iff verdict
    OracleVerdict oracle = is_p_nilpotent(F.ambient(), p);
    for (const std::string &id : {"suff-central-elements", "suff-omega-center"})
      if (run_criterion(F, id).verdict == Verdict::True)
        CHECK(oracle.p_nilpotent);
  }
}

TEST_CASE("subgroup cap yields not-computed verdicts") {
  Config tight;
  tight.max_sylow = 4; // |S| = 8 for S4 exceeds this
  FusionSystem F = make("S4", 2, tight);

  CriterionVerdict def = run_criterion(F, "definition");
  CHECK(def.verdict == Verdict::NotComputed);
  CHECK_FALSE(def.reason.empty());

  // criteria that avoid full enumeration still run
  CHECK(run_criterion(F, "element-fusion").verdict == Verdict::False);
  CHECK(run_criterion(F, "control-fusion").verdict == Verdict::False);

  RunResult all = run_all(F);
  CHECK(all.agreement); // not-computed entries are excluded
  REQUIRE(all.agreed_verdict);
  CHECK_FALSE(*all.agreed_verdict);
}

TEST_CASE("verdicts carry cost counters") {
  FusionSystem F = make("S4", 2);
  CriterionVerdict v = run_criterion(F, "definition");
  CHECK(v.cost.hom_queries > 0);
  CHECK(v.cost.milliseconds >= 0.0);

  CHECK_THROWS_AS(run_criterion(F, "no-such-criterion"), std::invalid_argument);
}
