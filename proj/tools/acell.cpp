// acell: command-line front end for cell-layer computations.
//
//   acell schur   --m 2 --weight 2,0
//   acell expand  --m 2 --poly "(z1+z2)^2" [--method leading|project] [--bound 4]
//   acell pair    --m 2 --f "s(1,0)" --g "z1+z2"
//   acell mult    --datum layer.dat --x "b0 | 1 | b1" --y "b1 | 1 | b0"
//   acell check   --datum layer.dat [--datum next.dat ...] [--seed 1] [--samples 20]
//   acell simples --datum layer.dat --point 2,3 [--drinfeld "u^2 - 5*u + 6"]
//
// Every verb accepts --format text|records.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acell/cli.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
  bool repeatable = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in cell layers of affine cellular algebras"};
  app.require_subcommand(1);

  const std::map<std::string, std::pair<std::string, std::vector<Flag>>> verbs = {
      {"schur",
       {"Print the Schur Laurent polynomial of a weight",
        {{"m", "block sizes, e.g. 2 or 2,1"},
         {"weight", "weight per block, e.g. 2,0 or 2,0/1"}}}},
      {"expand",
       {"Expand a symmetric polynomial in the Schur basis",
        {{"m", "block sizes"},
         {"poly", "polynomial expression"},
         {"method", "leading (default) or project"},
         {"bound", "weight bound for --method project (default 4)"}}}},
      {"pair",
       {"Constant-term inner product of two symmetric polynomials",
        {{"m", "block sizes"}, {"f", "first polynomial"}, {"g", "second polynomial"}}}},
      {"mult",
       {"Multiply two cell elements of a datum",
        {{"datum", "cell datum file"},
         {"x", "left element, 'b | S | b2 ; ...'"},
         {"y", "right element"}}}},
      {"check",
       {"Verify the cell axioms of one or more layers",
        {{"datum", "cell datum file (repeat for a chain of layers)", true},
         {"seed", "random seed for sampled checks (default 1)"},
         {"samples", "number of random samples (default 20)"},
         {"bound", "accepted for uniformity; unused"}}}},
      {"simples",
       {"Classify Drinfeld points of a layer",
        {{"datum", "cell datum file"},
         {"point", "per-block values, e.g. 2,3/5", true},
         {"drinfeld", "per-block monic polynomials in u separated by ';'", true}}}},
  };

  std::map<std::string, std::map<std::string, std::vector<std::string>>> values;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [verb, info] : verbs) {
    CLI::App* sub = app.add_subcommand(verb, info.first);
    subs[verb] = sub;
    auto& store = values[verb];
    for (const auto& flag : info.second) {
      auto* opt = sub->add_option(std::string("--") + flag.name, store[flag.name], flag.help);
      if (!flag.repeatable) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
      opt->allow_extra_args(false);
    }
    sub->add_option("--format", store["format"], "text (default) or records")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? acell::kExitOk : acell::kExitUsage;
  }

  acell::Command command;
  for (const auto& [verb, sub] : subs) {
    if (!sub->parsed()) continue;
    command.verb = verb;
    for (const auto& [flag, v] : values[verb]) {
      if (!v.empty()) command.options[flag] = v;
    }
  }
  return acell::run_command(command, std::cout, std::cerr);
}
