#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "abid/abid.hpp"

int main(int argc, char** argv) {
  CLI::App app{"abelian ideals of a Borel subalgebra: enumeration, Hasse "
               "diagrams, symmetry groups, and self-checks"};
  app.require_subcommand(1);

  std::string type, format = "text";
  int shapes_n = 0;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("-t,--type", type, "root system type, e.g. A3, C3, E8")->required();
  };
  auto add_format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("-f,--format", format, "output format: " + choices);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all abelian ideals");
  add_type(enumerate);
  add_format(enumerate, "text|json");

  CLI::App* hasse = app.add_subcommand("hasse", "labeled Hasse diagram of the ideal poset");
  add_type(hasse);
  add_format(hasse, "text|json|dot");

  CLI::App* aut = app.add_subcommand("aut", "symmetry groups of the poset and its graph");
  add_type(aut);
  add_format(aut, "text|json");

  CLI::App* verify = app.add_subcommand("verify", "run every structural self-check");
  add_type(verify);
  add_format(verify, "text|json");

  CLI::App* young = app.add_subcommand("young", "shape model of the A-series ideals");
  young->add_option("-n,--n", shapes_n, "number of strands (uses A_{n-1})")->required();
  add_format(young, "text|json");

  CLI::App* rootsys = app.add_subcommand("rootsys", "positive roots and basic data");
  add_type(rootsys);
  add_format(rootsys, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return abid::kExitUsage;
  }

  abid::RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.type = type;
  cfg.shapes_n = shapes_n;
  cfg.format = format;

  const abid::RunResult res = abid::run(cfg);
  if (!res.output.empty()) std::fputs(res.output.c_str(), stdout);
  if (!res.error.empty()) std::fputs(res.error.c_str(), stderr);
  return res.exit_code;
}
