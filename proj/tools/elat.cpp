#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elat/commands.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const auto piece = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) out.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"e-lattices of subgroups: analysis and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, timing = false;
  elat::Limits limits;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--timing", timing, "report elapsed time");
  app.add_option("--max-order", limits.max_analysis_order, "largest group order analysed")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-threshold", limits.enum_threshold, "largest Aut_E order enumerated explicitly")
      ->check(CLI::NonNegativeNumber);

  std::string spec, spec2, file, export_path;
  std::vector<std::string> ids, scope;

  auto* group = app.add_subcommand("group", "subgroups, cores, classes and predicates of a group");
  group->add_option("spec", spec, "group spec, e.g. S3, Q8, Z3xZ3, perm:(0 1),(0 1 2)")->required();
  group->add_option("--export-elattice", export_path, "write the subgroup e-lattice to a file");

  auto* aut = app.add_subcommand("aut", "Aut_E decomposition and the Aut0/Aut1/Aut2 towers");
  aut->add_option("spec", spec, "group spec")->required();

  auto* compare = app.add_subcommand("compare", "L-, N- and eL-isomorphism between two groups");
  compare->add_option("spec1", spec, "first group spec")->required();
  compare->add_option("spec2", spec2, "second group spec")->required();

  auto* verify = app.add_subcommand("verify", "run theorem checks over the catalog");
  verify->add_option("checks", ids, "check ids, or all")->required();
  verify->add_option("--scope", scope, "comma-separated catalog names")->delimiter(',');

  auto* axioms = app.add_subcommand("axioms", "check the e-lattice axioms of a file");
  axioms->add_option("file", file, "e-lattice JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return elat::kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    elat::Outcome o;
    if (*group) o = elat::cmd_group(spec, limits, export_path);
    else if (*aut) o = elat::cmd_aut(spec, limits);
    else if (*compare) o = elat::cmd_compare(spec, spec2, limits);
    else if (*verify) o = elat::cmd_verify(split_list(ids), split_list(scope), limits);
    else o = elat::cmd_axioms(file);
    if (timing)
      o.report.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (json ? elat::serialize(o.report, timing) : elat::render_human(o.report));
    return o.exit_code;
  } catch (const elat::ParseError& e) {
    std::cerr << "error: " << e.what() << (e.field().empty() ? "" : " [" + e.field() + "]") << "\n";
    return elat::kUsage;
  } catch (const elat::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return elat::kUsage;
  } catch (const elat::BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return elat::kBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return elat::kCheckFailure;
  }
}
