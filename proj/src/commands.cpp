#include "fusion/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fusion/oracle.hpp"

namespace fusion {

namespace {

using Clock = std::chrono::steady_clock;

void evaluate_agreement(PairEntry &entry) {
  std::optional<bool> agreed;
  entry.agreement = true;
  bool sufficient_true = false;

  for (const CriterionVerdict &v : entry.criteria) {
    bool sufficient_only = v.criterion_id.rfind("suff-", 0) == 0;
    if (sufficient_only) {
      if (v.verdict == Verdict::True)
        sufficient_true = true;
      continue;
    }
    if (!v.applicable || v.hypothesis_only || v.verdict == Verdict::NotComputed)
      continue;
    bool value = v.verdict == Verdict::True;
    if (!agreed) {
      agreed = value;
    } else if (*agreed != value) {
      entry.agreement = false;
      entry.notes.push_back("criterion '" + v.criterion_id +
                            "' disagrees with the other criteria");
    }
  }

  if (entry.oracle) {
    if (!agreed) {
      agreed = entry.oracle->p_nilpotent;
    } else if (*agreed != entry.oracle->p_nilpotent) {
      entry.agreement = false;
      entry.notes.push_back("criteria disagree with the p-nilpotency oracle");
    }
  }
  if (sufficient_true && agreed && !*agreed) {
    entry.agreement = false;
    entry.notes.push_back(
        "a sufficient-only check returned true on a non-nilpotent system");
  }
  entry.nilpotent = agreed;
}

} // namespace

PairEntry run_pair(const GroupSpec &spec, int prime,
                   const std::vector<std::string> &criteria, const Config &config) {
  PairEntry entry;
  entry.group = spec.name;
  entry.prime = prime;
  auto start = Clock::now();

  std::vector<std::string> selected = criteria.empty() ? criterion_ids() : criteria;
  std::sort(selected.begin(), selected.end());

  try {
    if (!is_prime(prime))
      throw SpecError(std::to_string(prime) + " is not prime");
    GroupPtr G = build_group(spec, config.max_order);
    entry.group_order = G->order();
    entry.degenerate = G->order() % prime != 0;

    FusionSystem F = FusionSystem::group_fusion(G, prime, config);
    entry.sylow_order = F.sylow().order();
    if (entry.degenerate)
      entry.notes.push_back("degenerate: trivial Sylow, nilpotent by every criterion");

    for (const std::string &id : selected)
      entry.criteria.push_back(run_criterion(F, id));

    OracleVerdict oracle = is_p_nilpotent(G, prime);
    OracleRecord record;
    record.p_nilpotent = oracle.p_nilpotent;
    record.p_prime_subgroup_order = oracle.p_prime_subgroup_order;
    if (oracle.complement)
      record.complement = oracle.complement->members();
    entry.oracle = std::move(record);

    evaluate_agreement(entry);
  } catch (const cap_exceeded &e) {
    entry.error = e.what();
  } catch (const SpecError &e) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw SpecError(e.what());
  }

  entry.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return entry;
}

Report cross_validate(const std::vector<GroupSpec> &specs, const Config &config) {
  Report report;
  for (const GroupSpec &spec : specs)
    for (int p : spec.primes)
      report.entries.push_back(run_pair(spec, p, {}, config));

  std::sort(report.entries.begin(), report.entries.end(),
            [](const PairEntry &a, const PairEntry &b) {
              if (a.group != b.group)
                return a.group < b.group;
              return a.prime < b.prime;
            });

  for (const PairEntry &e : report.entries) {
    ++report.pairs;
    if (e.error) {
      continue; // not computed; excluded from agreement accounting
    }
    if (e.agreement) {
      ++report.agreements;
    } else {
      ++report.disagreements;
      report.disagreement_keys.push_back(e.group + " p=" + std::to_string(e.prime));
    }
  }
  return report;
}

std::string explain(const GroupSpec &spec, int prime, const std::string &criterion,
                    const Config &config) {
  auto it = criterion_conditions().find(criterion);
  if (it == criterion_conditions().end())
    throw SpecError("unknown criterion id: " + criterion);

  if (!is_prime(prime))
    throw SpecError(std::to_string(prime) + " is not prime");
  GroupPtr G = build_group(spec, config.max_order);
  FusionSystem F = FusionSystem::group_fusion(G, prime, config);
  CriterionVerdict v = run_criterion(F, criterion);

  std::ostringstream os;
  os << "group " << spec.name << ", p = " << prime << " (|G| = " << G->order()
     << ", |S| = " << F.sylow().order() << ")\n";
  os << "criterion '" << criterion << "'\n";
  os << "condition: " << it->second << "\n";
  if (!v.applicable)
    os << "applicability: " << v.reason << "\n";
  os << "verdict: " << to_string(v.verdict);
  if (v.hypothesis_only)
    os << " [hypothesis only]";
  os << "\n";
  if (!v.reason.empty() && v.applicable)
    os << "reason: " << v.reason << "\n";
  if (v.witness) {
    os << "witness (" << v.witness->kind << "): " << v.witness->text << "\n";
    if (v.witness->subgroup)
      os << "  subgroup: {" << [&] {
        std::string s;
        for (std::size_t i = 0; i < v.witness->subgroup->size(); ++i)
          s += (i ? ", " : "") + G->element_name((*v.witness->subgroup)[i]);
        return s;
      }() << "}\n";
    if (v.witness->morphism) {
      os << "  morphism:\n";
      for (std::size_t i = 0; i < v.witness->morphism->dom.size(); ++i)
        os << "    " << G->element_name(v.witness->morphism->dom[i]) << " -> "
           << G->element_name(v.witness->morphism->img[i]) << "\n";
    }
    os << "  witness re-verifies: "
       << (reverify_witness(F, v) ? "yes" : "NO") << "\n";
  }
  return os.str();
}

const std::map<std::string, std::string> &criterion_conditions() {
  static const std::map<std::string, std::string> table = {
      {"definition",
       "every morphism of the fusion system between subgroups of S is induced "
       "by conjugation in S"},
      {"element-fusion",
       "two elements of S are fused by the system if and only if they are "
       "conjugate in S"},
      {"tuple-fusion",
       "two commuting n-tuples over S are fused by the system if and only if "
       "they are conjugate in S"},
      {"frobenius-all",
       "the fusion system's automorphism group of every subgroup of S is a "
       "p-group"},
      {"frobenius-centric",
       "the fusion system's automorphism group of every centric subgroup of S "
       "is a p-group"},
      {"focal", "the focal subgroup equals the derived subgroup [S,S]"},
      {"abelian",
       "S is abelian and the fusion system induces only the trivial "
       "automorphism of S (equivalently, element classes are singletons)"},
      {"quillen",
       "every elementary abelian subgroup normal in S is weakly closed and its "
       "automorphism group in the fusion system is a p-group (criterion valid "
       "for odd p)"},
      {"quillen-category",
       "elementary abelian subgroups have identical hom-sets under "
       "S-conjugation and under the fusion system (criterion valid for odd p)"},
      {"control-fusion",
       "every morphism out of a cyclic subgroup generated by x with x^p = 1 "
       "(x^4 = 1 when p = 2) is induced by conjugation in S"},
      {"suff-central-elements",
       "every element of S of p-power order greater than 2 is fixed by all "
       "morphisms of the fusion system (sufficient only)"},
      {"suff-omega-center",
       "Omega_1(S) (Omega_2(S) when p = 2) lies in the center of the fusion "
       "system (sufficient only)"},
  };
  return table;
}

} // namespace fusion
