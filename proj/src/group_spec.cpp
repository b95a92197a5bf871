#include "fusion/group_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fusion/perm.hpp"

namespace fusion {

GroupSpec parse_group_spec(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SpecError(std::string("group spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SpecError("group spec must be a JSON object");

  GroupSpec spec;
  try {
    spec.name = doc.at("name").get<std::string>();
    spec.degree = doc.at("degree").get<int>();
    spec.generators = doc.at("generators").get<std::vector<std::string>>();
    spec.primes = doc.at("primes").get<std::vector<int>>();
  } catch (const nlohmann::json::exception &e) {
    throw SpecError(std::string("group spec field error: ") + e.what());
  }

  if (spec.degree <= 0)
    throw SpecError("field 'degree' must be positive");
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    try {
      Perm::from_cycles(spec.generators[i], spec.degree);
    } catch (const std::exception &e) {
      throw SpecError("generator " + std::to_string(i) + " (\"" +
                      spec.generators[i] + "\"): " + e.what());
    }
  }
  for (int p : spec.primes) {
    if (!is_prime(p))
      throw SpecError("field 'primes' contains " + std::to_string(p) +
                      ", which is not prime");
  }
  return spec;
}

GroupSpec load_group_spec(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw SpecError("cannot open group spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_spec(buffer.str());
}

GroupPtr build_group(const GroupSpec &spec, long max_order) {
  std::vector<Perm> generators;
  generators.reserve(spec.generators.size());
  for (const std::string &text : spec.generators)
    generators.push_back(Perm::from_cycles(text, spec.degree));
  return Group::from_generators(generators, spec.degree, max_order);
}

const std::vector<GroupSpec> &builtin_corpus() {
  static const std::vector<GroupSpec> corpus = {
      {"C2", 2, {"(0 1)"}, {2}},
      {"C3", 3, {"(0 1 2)"}, {3}},
      {"C4", 4, {"(0 1 2 3)"}, {2}},
      {"C8", 8, {"(0 1 2 3 4 5 6 7)"}, {2}},
      {"C9", 9, {"(0 1 2 3 4 5 6 7 8)"}, {3}},
      {"C2xC2", 4, {"(0 1)", "(2 3)"}, {2}},
      {"C2xC2xC2", 6, {"(0 1)", "(2 3)", "(4 5)"}, {2}},
      {"C3xC3", 6, {"(0 1 2)", "(3 4 5)"}, {3}},
      {"D8", 4, {"(0 1 2 3)", "(1 3)"}, {2}},
      {"D12", 6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}, {2, 3}},
      {"D16", 8, {"(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"}, {2}},
      {"D32", 16,
       {"(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)",
        "(1 15)(2 14)(3 13)(4 12)(5 11)(6 10)(7 9)"},
       {2}},
      {"Q8", 8, {"(0 2 1 3)(4 7 5 6)", "(0 4 1 5)(2 6 3 7)"}, {2}},
      {"S3", 3, {"(0 1 2)", "(0 1)"}, {2, 3}},
      {"S4", 4, {"(0 1 2 3)", "(0 1)"}, {2, 3}},
      {"A4", 4, {"(0 1 2)", "(0 1)(2 3)"}, {2, 3}},
      {"A5", 5, {"(0 1 2 3 4)", "(0 1 2)"}, {2, 3, 5}},
      // 2x2 matrices of determinant 1 over F_3 acting on the 8 nonzero
      // vectors; isomorphic to Q8 : C3
      {"SL(2,3)", 8, {"(2 4 7)(3 5 6)", "(0 2 1 3)(4 7 5 6)"}, {2, 3}},
      {"C7:C3", 7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}, {3, 7}},
      {"C3xS3", 6, {"(0 1 2)", "(3 4 5)", "(3 4)"}, {2, 3}},
      // extraspecial group of order 27 and exponent 3 (translations and
      // shears of F_3 x F_3) extended by the inversion of its center
      {"E27:C2", 9,
       {"(0 3 6)(1 4 7)(2 5 8)", "(3 4 5)(6 8 7)", "(1 2)(4 5)(7 8)"},
       {2, 3}},
  };
  return corpus;
}

const GroupSpec &builtin_spec(const std::string &name) {
  for (const GroupSpec &spec : builtin_corpus())
    if (spec.name == name)
      return spec;
  throw SpecError("no built-in group named '" + name + "'");
}

} // namespace fusion
