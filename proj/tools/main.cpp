#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fusion/commands.hpp"

namespace {

constexpr int kExitAgreement = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  long max_order = fusion::Config{}.max_order;
  int max_sylow = fusion::Config{}.max_sylow;
  int tuple_n = fusion::Config{}.tuple_n;
  std::string format = "text";

  fusion::Config config() const {
    fusion::Config c;
    c.max_order = max_order;
    c.max_sylow = max_sylow;
    c.tuple_n = tuple_n;
    return c;
  }
};

void add_cap_options(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("--max-order", opts.max_order, "group closure cap");
  cmd->add_option("--max-sylow", opts.max_sylow, "subgroup enumeration cap on |S|");
  cmd->add_option("--tuple-n", opts.tuple_n, "tuple length for the tuple criterion")
      ->check(CLI::Range(2, 6));
}

fusion::GroupSpec resolve_spec(const std::string &file, const std::string &builtin) {
  if (!builtin.empty())
    return fusion::builtin_spec(builtin);
  if (file.empty())
    throw fusion::SpecError("either a spec FILE or --builtin NAME is required");
  return fusion::load_group_spec(file);
}

void emit_report(const fusion::Report &report, const std::string &format,
                 const std::string &out_path) {
  std::string body = format == "json" ? fusion::to_json(report).dump(2) + "\n"
                                      : fusion::render_text(report);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw fusion::SpecError("cannot write report to " + out_path);
    out << body;
    std::cout << "report written to " << out_path << "\n";
  }
}

} // namespace

int run_cli(int argc, const char *const *argv) {
  CLI::App app{"saturated fusion system constructor and nilpotency analyzer"};
  app.require_subcommand(1);

  // check
  auto *check = app.add_subcommand("check", "run criteria and the oracle on one pair");
  std::string check_file, check_builtin, check_criteria;
  int check_prime = 0;
  CommonOptions check_opts;
  check->add_option("file", check_file, "group spec JSON file");
  check->add_option("--builtin", check_builtin, "use a built-in corpus group");
  check->add_option("--prime", check_prime, "the prime p")->required();
  check->add_option("--criteria", check_criteria,
                    "comma-separated criterion ids (default: all)");
  check->add_option("--format", check_opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap_options(check, check_opts);

  // cross-validate
  auto *cross = app.add_subcommand(
      "cross-validate", "run every criterion against the oracle on many groups");
  std::vector<std::string> cross_files;
  bool cross_builtin = false;
  std::string cross_out;
  CommonOptions cross_opts;
  cross->add_option("files", cross_files, "group spec JSON files");
  cross->add_flag("--builtin", cross_builtin, "use the built-in corpus");
  cross->add_option("--out", cross_out, "write the report to a file");
  cross->add_option("--format", cross_opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap_options(cross, cross_opts);

  // explain
  auto *explain = app.add_subcommand("explain", "print a witness trace");
  std::string explain_file, explain_builtin, explain_criterion;
  int explain_prime = 0;
  CommonOptions explain_opts;
  explain->add_option("file", explain_file, "group spec JSON file");
  explain->add_option("--builtin", explain_builtin, "use a built-in corpus group");
  explain->add_option("--prime", explain_prime, "the prime p")->required();
  explain->add_option("--criterion", explain_criterion, "criterion id")->required();
  add_cap_options(explain, explain_opts);

  // corpus
  auto *corpus = app.add_subcommand("corpus", "built-in corpus information");
  bool corpus_list = false;
  std::string corpus_format = "text";
  corpus->add_flag("--list", corpus_list, "list the built-in groups");
  corpus->add_option("--format", corpus_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (check->parsed()) {
      fusion::GroupSpec spec = resolve_spec(check_file, check_builtin);
      std::vector<std::string> selected;
      if (!check_criteria.empty()) {
        std::stringstream ss(check_criteria);
        std::string id;
        while (std::getline(ss, id, ',')) {
          if (std::find(fusion::criterion_ids().begin(), fusion::criterion_ids().end(),
                        id) == fusion::criterion_ids().end())
            throw fusion::SpecError("unknown criterion id: " + id);
          selected.push_back(id);
        }
      }
      fusion::PairEntry entry =
          fusion::run_pair(spec, check_prime, selected, check_opts.config());
      if (check_opts.format == "json") {
        fusion::Report report;
        report.entries.push_back(entry);
        report.pairs = 1;
        if (!entry.error) {
          if (entry.agreement) {
            report.agreements = 1;
          } else {
            report.disagreements = 1;
            report.disagreement_keys.push_back(entry.group + " p=" +
                                               std::to_string(entry.prime));
          }
        }
        std::cout << fusion::to_json(report).dump(2) << "\n";
      } else {
        std::cout << fusion::render_text(entry);
      }
      // cap-exceeded entries are reported, not fatal, and carry no verdicts
      bool disagreement = !entry.error && !entry.agreement;
      return disagreement ? kExitDisagreement : kExitAgreement;
    }

    if (cross->parsed()) {
      std::vector<fusion::GroupSpec> specs;
      if (cross_builtin)
        specs = fusion::builtin_corpus();
      for (const std::string &file : cross_files)
        specs.push_back(fusion::load_group_spec(file));
      if (specs.empty())
        throw fusion::SpecError("no input groups; pass FILES or --builtin");
      fusion::Report report = fusion::cross_validate(specs, cross_opts.config());
      emit_report(report, cross_opts.format, cross_out);
      return report.disagreements == 0 ? kExitAgreement : kExitDisagreement;
    }

    if (explain->parsed()) {
      fusion::GroupSpec spec = resolve_spec(explain_file, explain_builtin);
      std::cout << fusion::explain(spec, explain_prime, explain_criterion,
                                   explain_opts.config());
      return kExitAgreement;
    }

    if (corpus->parsed()) {
      if (!corpus_list)
        throw fusion::SpecError("corpus: nothing to do; pass --list");
      if (corpus_format == "json") {
        nlohmann::json names = nlohmann::json::array();
        for (const fusion::GroupSpec &spec : fusion::builtin_corpus())
          names.push_back({{"name", spec.name},
                           {"degree", spec.degree},
                           {"generators", spec.generators},
                           {"primes", spec.primes}});
        std::cout << names.dump(2) << "\n";
      } else {
        for (const fusion::GroupSpec &spec : fusion::builtin_corpus()) {
          std::cout << spec.name << " (degree " << spec.degree << ", primes";
          for (int p : spec.primes)
            std::cout << " " << p;
          std::cout << ")\n";
        }
      }
      return kExitAgreement;
    }
  } catch (const fusion::SpecError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

#ifndef FUSIONCHECK_NO_MAIN
int main(int argc, char **argv) { return run_cli(argc, argv); }
#endif
