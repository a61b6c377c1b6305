#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqehr/errors.hpp"
#include "eqehr/instance_io.hpp"
#include "eqehr/property_suite.hpp"
#include "eqehr/reports.hpp"

namespace {

struct CommonOptions {
  std::string file;
  std::string format = "json";
  std::size_t cap = eqehr::default_group_cap;
  std::string table;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("file", o.file, "Instance document (JSON)")->required();
  cmd->add_option("--format", o.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  cmd->add_option("--cap", o.cap, "Largest group order accepted");
  cmd->add_option("--table", o.table, "Character table document overriding the computed one");
}

eqehr::GalleryInstance load(const CommonOptions& o) {
  auto doc = eqehr::parse_instance(eqehr::read_file(o.file));
  if (!o.table.empty()) doc.character_table = eqehr::parse_character_table(eqehr::read_file(o.table));
  return eqehr::instantiate(doc, o.cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Ehrhart theory of lattice polytopes"};
  app.require_subcommand(1);

  CommonOptions analyze, hstar, series, check;
  std::int64_t terms = 10;
  add_common(app.add_subcommand("analyze", "Group, fixed polytopes and criteria verdicts"), analyze);
  add_common(app.add_subcommand("hstar", "Equivariant H*-series and its decomposition"), hstar);
  auto* series_cmd = app.add_subcommand("series", "Characters of lattice points of dilates and orbit counts");
  add_common(series_cmd, series);
  series_cmd->add_option("--terms", terms, "Largest dilation factor listed")->check(CLI::NonNegativeNumber);
  add_common(app.add_subcommand("check", "Run the property suite; exit code 1 on any failure"), check);

  std::string example_name;
  std::vector<unsigned> example_params;
  bool list = false;
  auto* example_cmd = app.add_subcommand("example", "Write a gallery instance document");
  example_cmd->add_option("name", example_name, "Gallery instance");
  example_cmd->add_option("params", example_params, "Integer parameters, e.g. the dimension");
  example_cmd->add_flag("--list", list, "List the gallery instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) {
      std::cout << eqehr::analyze_report(load(analyze), eqehr::parse_report_format(analyze.format));
    } else if (app.got_subcommand("hstar")) {
      std::cout << eqehr::hstar_report(load(hstar), eqehr::parse_report_format(hstar.format));
    } else if (app.got_subcommand("series")) {
      std::cout << eqehr::series_report(load(series), terms, eqehr::parse_report_format(series.format));
    } else if (app.got_subcommand("check")) {
      const auto report = eqehr::run_property_suite(load(check));
      std::cout << eqehr::check_report(report, eqehr::parse_report_format(check.format));
      return report.all_passed() ? 0 : 1;
    } else if (app.got_subcommand("example")) {
      if (list || example_name.empty()) {
        for (const auto& n : eqehr::gallery_names()) std::cout << n << "\n";
        return 0;
      }
      std::cout << eqehr::write_instance(eqehr::document_from(eqehr::gallery_instance(example_name, example_params)));
    }
  } catch (const eqehr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const eqehr::NotInvariant& e) {
    std::cerr << "not invariant: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
