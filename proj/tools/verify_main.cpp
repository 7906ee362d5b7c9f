#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qdv/verify/checks.hpp"

using namespace qdv::verify;

int main(int argc, char** argv) {
  CLI::App app{"Checks indecomposability of Scott modules for Park's embedding of Qd(p)"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string out_path;
  std::string dump;
  app.add_option("--seed", opt.seed, "seed for all random choices");
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-order", opt.max_order, "largest group enumerated element by element");
  app.add_option("--out", out_path, "append JSON lines here instead of stdout");
  app.add_option("--dump-tables", dump, "write coset and iota tables to this directory");

  auto* lem = app.add_subcommand("lemma", "check one lemma at one prime");
  std::string id;
  unsigned p = 0;
  lem->add_option("--id", id, "lemma id")->required();
  lem->add_option("--p", p, "prime")->required();

  auto* thm = app.add_subcommand("theorem", "check a theorem");
  bool main_thm = false, side_thm = false;
  std::string mode = "direct", group;
  thm->add_flag("--main", main_thm, "Qd(p) statement");
  thm->add_flag("--side", side_thm, "S4 statement");
  thm->add_option("--p", p, "prime");
  thm->add_option("--mode", mode, "direct or structural");
  thm->add_option("--group", group, "group for --side");

  auto* cc = app.add_subcommand("crosscheck", "compare independent computations");
  std::string suite;
  cc->add_option("--suite", suite, "centralizer, brauer, iota, idempotent or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!dump.empty()) opt.dump_tables = dump;

  std::vector<Report> reports;
  try {
    if (lem->parsed()) {
      reports.push_back(lemma(id, p, opt));
    } else if (thm->parsed()) {
      if (main_thm == side_thm) throw UsageError("give exactly one of --main and --side");
      if (main_thm) {
        if (p == 0) throw UsageError("--main needs --p");
        reports.push_back(theorem_main(p, mode, opt));
      } else {
        if (group.empty()) throw UsageError("--side needs --group");
        reports.push_back(theorem_side(group, opt));
      }
    } else {
      reports = crosscheck(suite, opt);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::app);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
  }
  for (const auto& r : reports) {
    std::cout << r.to_text() << "\n";
    if (file.is_open())
      file << r.to_json().dump() << "\n";
    else
      std::cout << r.to_json().dump() << "\n";
  }
  return exit_code(reports);
}
