#include <iostream>

#include "CLI11.hpp"
#include "valext/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"valuation ring extensions"};
  app.require_subcommand(1);

  std::string file;
  auto* decompose = app.add_subcommand("decompose", "points of L (x)_K M for a scenario without vars");
  decompose->add_option("file", file, "scenario file")->required();

  valext::ExtendOptions ext;
  int point = -1, truncate = -1;
  auto* extend = app.add_subcommand("extend", "build the extension W of V containing k'");
  extend->add_option("file", file, "scenario file")->required();
  extend->add_flag("--verify", ext.verify, "check weak non-ramification and the prime correspondence");
  extend->add_option("--point", point, "index of the point of k' (x)_k F")->check(CLI::NonNegativeNumber);
  extend->add_option("--truncate", truncate, "truncation exponent N for the general construction")
      ->check(CLI::NonNegativeNumber);

  valext::SelftestOptions st;
  std::uint64_t seed = 0;
  std::string golden;
  auto* selftest = app.add_subcommand("selftest", "golden corpus and randomized properties");
  auto* seed_opt = selftest->add_option("--seed", seed, "seed for the randomized properties");
  auto* golden_opt = selftest->add_option("--golden", golden, "file of name<TAB>expected overrides");
  selftest->add_flag("--dump-golden", st.dump_golden, "print the golden corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*decompose) return valext::cmd_decompose(file, std::cout, std::cerr);
  if (*extend) {
    if (point >= 0) ext.point = point;
    if (truncate >= 0) ext.truncate = truncate;
    return valext::cmd_extend(file, ext, std::cout, std::cerr);
  }
  if (*seed_opt) st.seed = seed;
  if (*golden_opt) st.golden_file = golden;
  return valext::cmd_selftest(st, std::cout, std::cerr);
}
