#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Resource caps shared by the group engine and the fusion-system layer.
struct Config {
  long max_order = 5000;        // closure cap for generated permutation groups
  int max_sylow = 256;          // |S| cap for full subgroup enumeration
  long morphism_budget = 200000; // cap on generated-fusion closure size
  int tuple_n = 2;              // n used by the commuting-tuple criterion
};

// Thrown when a configured cap would be exceeded.  Criteria that quantify
// over capped enumerations catch this and report "not computed".
class cap_exceeded : public std::runtime_error {
public:
  enum class Kind { order, subgroups, morphisms };

  cap_exceeded(Kind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

} // namespace fusion
