#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusion/group_spec.hpp"
#include "fusion/report.hpp"

namespace fusion {

// Runs the selected criteria (all when empty) plus the oracle on one
// (group, prime) pair and evaluates agreement.
PairEntry run_pair(const GroupSpec &spec, int prime,
                   const std::vector<std::string> &criteria, const Config &config);

// Runs everything on every (group, prime) pair of the given specs.
Report cross_validate(const std::vector<GroupSpec> &specs, const Config &config);

// Human-readable witness trace for one criterion on one pair.
std::string explain(const GroupSpec &spec, int prime, const std::string &criterion,
                    const Config &config);

// The defining condition of each criterion, keyed by id; quoted in witness
// traces so reports are self-explanatory.
const std::map<std::string, std::string> &criterion_conditions();

} // namespace fusion
