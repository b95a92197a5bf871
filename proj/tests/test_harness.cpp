#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fusion/commands.hpp"

using namespace fusion;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs the fusioncheck binary (path from FUSIONCHECK_BIN) with the given
// arguments, capturing stdout+stderr.
CommandResult run_cli(const std::string &args) {
  const char *bin = std::getenv("FUSIONCHECK_BIN");
  REQUIRE(bin != nullptr);
  fs::path out = fs::temp_directory_path() /
                 ("fusioncheck_out_" + std::to_string(::getpid()) + ".txt");
  std::string command = std::string(bin) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(command.c_str());
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  fs::remove(out);
  return {WEXITSTATUS(status), buffer.str()};
}

fs::path write_temp_spec(const std::string &name, const std::string &content) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

} // namespace

TEST_CASE("group spec parsing") {
  GroupSpec spec = parse_group_spec(
      R"json({"name":"S3","degree":3,"generators":["(0 1 2)","(0 1)"],"primes":[2,3]})json");
  CHECK(spec.name == "S3");
  CHECK(spec.degree == 3);
  CHECK(spec.generators.size() == 2);
  CHECK(spec.primes == std::vector<int>{2, 3});
  CHECK(build_group(spec)->order() == 6);

  // out-of-range point
  CHECK_THROWS_AS(parse_group_spec(
                      R"json({"name":"X","degree":3,"generators":["(0 3)"],"primes":[2]})json"),
                  SpecError);
  // non-prime entry
  CHECK_THROWS_AS(parse_group_spec(
                      R"json({"name":"X","degree":3,"generators":["(0 1)"],"primes":[4]})json"),
                  SpecError);
  // malformed cycle text
  CHECK_THROWS_AS(parse_group_spec(
                      R"json({"name":"X","degree":3,"generators":["(0 1"],"primes":[2]})json"),
                  SpecError);
  // not JSON at all
  CHECK_THROWS_AS(parse_group_spec("not json"), SpecError);
  // missing field
  CHECK_THROWS_AS(parse_group_spec(R"json({"name":"X","degree":3})json"), SpecError);
  // wrong shape
  CHECK_THROWS_AS(parse_group_spec(R"json([1,2,3])json"), SpecError);

  // parse errors carry position information
  try {
    parse_group_spec(R"json({"name":"X","degree":3,"generators":["(0 9)"],"primes":[2]})json");
    CHECK(false);
  } catch (const SpecError &e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("built-in corpus contents") {
  const std::vector<GroupSpec> &corpus = builtin_corpus();

  const GroupSpec &sl = builtin_spec("SL(2,3)");
  CHECK(sl.primes == std::vector<int>{2, 3});
  const GroupSpec &s4 = builtin_spec("S4");
  CHECK(s4.primes == std::vector<int>{2, 3});
  CHECK_THROWS_AS(builtin_spec("M11"), SpecError);

  long pairs = 0;
  for (const GroupSpec &spec : corpus)
    pairs += static_cast<long>(spec.primes.size());
  CHECK(pairs >= 25);

  for (const GroupSpec &spec : corpus) {
    GroupPtr G = build_group(spec);
    CHECK(G->order() <= 2000);
    for (int p : spec.primes)
      CHECK(sylow_subgroup(G, p).order() <= 64);
  }
}

TEST_CASE("run_pair on S3 at p=2") {
  PairEntry entry = run_pair(builtin_spec("S3"), 2, {}, Config{});
  CHECK(entry.group == "S3");
  CHECK(entry.prime == 2);
  CHECK_FALSE(entry.degenerate);
  CHECK(entry.agreement);
  REQUIRE(entry.nilpotent);
  CHECK(*entry.nilpotent);
  REQUIRE(entry.oracle);
  CHECK(entry.oracle->p_nilpotent);
  CHECK(std::is_sorted(entry.criteria.begin(), entry.criteria.end(),
                       [](const CriterionVerdict &a, const CriterionVerdict &b) {
                         return a.criterion_id < b.criterion_id;
                       }));
}

TEST_CASE("run_pair with a criteria selection") {
  PairEntry entry = run_pair(builtin_spec("SL(2,3)"), 2, {"quillen"}, Config{});
  REQUIRE(entry.criteria.size() == 1);
  const CriterionVerdict &quillen = entry.criteria[0];
  CHECK(quillen.hypothesis_only);
  CHECK(quillen.verdict == Verdict::True); // hypothesis holds at p = 2
  REQUIRE(entry.nilpotent);
  CHECK_FALSE(*entry.nilpotent); // while the oracle says not nilpotent
  CHECK(entry.agreement);        // hypothesis-only is excluded from agreement
}

TEST_CASE("degenerate primes are reported, not rejected") {
  PairEntry entry = run_pair(builtin_spec("C3"), 2, {}, Config{});
  CHECK(entry.degenerate);
  CHECK(entry.sylow_order == 1);
  CHECK(entry.agreement);
  REQUIRE(entry.nilpotent);
  CHECK(*entry.nilpotent);
  bool noted = false;
  for (const std::string &note : entry.notes)
    if (note.find("degenerate") != std::string::npos)
      noted = true;
  CHECK(noted);
}

TEST_CASE("cross_validate and report round-trip") {
  std::vector<GroupSpec> specs{builtin_spec("S3"), builtin_spec("A4"),
                               builtin_spec("SL(2,3)")};
  Report report = cross_validate(specs, Config{});
  CHECK(report.pairs == 6);
  CHECK(report.agreements == 6);
  CHECK(report.disagreements == 0);
  CHECK(std::is_sorted(report.entries.begin(), report.entries.end(),
                       [](const PairEntry &a, const PairEntry &b) {
                         return std::tie(a.group, a.prime) < std::tie(b.group, b.prime);
                       }));

  // the A4 entry at p=2 carries witnesses; they survive the round trip
  Report decoded = report_from_json(to_json(report));
  CHECK(decoded == report);
  CHECK(to_json(decoded) == to_json(report));

  std::string text = render_text(report);
  CHECK(text.find("A4 p=2") != std::string::npos);
  CHECK(text.find("6 pair(s)") != std::string::npos);
}

TEST_CASE("explain produces a witness trace") {
  std::string trace = explain(builtin_spec("S3"), 3, "frobenius-all", Config{});
  CHECK(trace.find("condition:") != std::string::npos);
  CHECK(trace.find("verdict: false") != std::string::npos);
  CHECK(trace.find("witness") != std::string::npos);
  CHECK(trace.find("re-verifies: yes") != std::string::npos);

  std::string quillen = explain(builtin_spec("SL(2,3)"), 2, "quillen", Config{});
  CHECK(quillen.find("hypothesis only") != std::string::npos);
  CHECK(quillen.find("verdict: true") != std::string::npos);

  CHECK_THROWS_AS(explain(builtin_spec("S3"), 3, "no-such", Config{}), SpecError);
}

TEST_CASE("cli: corpus listing and check exit codes") {
  CommandResult corpus = run_cli("corpus --list");
  CHECK(corpus.exit_code == 0);
  CHECK(corpus.output.find("SL(2,3)") != std::string::npos);

  CommandResult ok = run_cli("check --builtin S3 --prime 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("agreement: yes") != std::string::npos);

  CommandResult json_ok = run_cli("check --builtin S3 --prime 2 --format json");
  CHECK(json_ok.exit_code == 0);
  Report parsed = report_from_json(nlohmann::json::parse(json_ok.output));
  CHECK(parsed.pairs == 1);
  CHECK(parsed.agreements == 1);

  // input errors exit with 2
  CHECK(run_cli("check /no/such/file.json --prime 2").exit_code == 2);
  CHECK(run_cli("check --builtin S3 --prime 4").exit_code == 2);
  CHECK(run_cli("check --builtin S3 --prime 2 --criteria bogus").exit_code == 2);
  CHECK(run_cli("check --builtin NoSuchGroup --prime 2").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);

  fs::path bad = write_temp_spec(
      "bad_spec.json",
      R"json({"name":"X","degree":3,"generators":["(0 1)"],"primes":[6]})json");
  CHECK(run_cli("check " + bad.string() + " --prime 2").exit_code == 2);
  fs::remove(bad);
}

TEST_CASE("cli: cross-validate writes a parseable report") {
  fs::path spec = write_temp_spec(
      "s3_spec.json",
      R"json({"name":"S3","degree":3,"generators":["(0 1 2)","(0 1)"],"primes":[2,3]})json");
  fs::path out = fs::temp_directory_path() / "s3_report.json";

  CommandResult res =
      run_cli("cross-validate " + spec.string() + " --format json --out " + out.string());
  CHECK(res.exit_code == 0);

  std::ifstream in(out);
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  Report report = report_from_json(doc);
  CHECK(report.pairs == 2);
  CHECK(report.disagreements == 0);

  fs::remove(spec);
  fs::remove(out);
}

TEST_CASE("cli: cap and tuple flags") {
  // a tight subgroup cap leaves enumeration-bound criteria not-computed but
  // does not break the run
  CommandResult capped = run_cli("check --builtin S4 --prime 2 --max-sylow 4");
  CHECK(capped.exit_code == 0);
  CHECK(capped.output.find("not-computed") != std::string::npos);
  CHECK(capped.output.find("agreement: yes") != std::string::npos);

  CommandResult tuple3 = run_cli("check --builtin D8 --prime 2 --tuple-n 3");
  CHECK(tuple3.exit_code == 0);

  CommandResult tight_order = run_cli("check --builtin A5 --prime 2 --max-order 30");
  CHECK(tight_order.exit_code == 0); // cap reported on the entry, not fatal
  CHECK(tight_order.output.find("error") != std::string::npos);
}

TEST_CASE("cli: explain subcommand") {
  CommandResult res =
      run_cli("explain --builtin \"SL(2,3)\" --prime 2 --criterion quillen");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("hypothesis only") != std::string::npos);

  CommandResult witness =
      run_cli("explain --builtin A4 --prime 2 --criterion element-fusion");
  CHECK(witness.exit_code == 0);
  CHECK(witness.output.find("witness") != std::string::npos);
}
