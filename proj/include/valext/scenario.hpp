#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valext/extension_builder.hpp"

namespace valext {

// Line-oriented scenario file:
//   [base]        base: Q | F<p>          gens: <steps of k>
//   [valuation]   gens: <steps of F over k>  vars: x1, x2   order: lex
//   [extension]   kprime-gens: <steps of k' over k>
//   [options]     truncation-N: <n>   point-index: <i>   seed: <n>
// A file without vars describes a compositum triple (K, L, M) = (k, k', F).
struct ScenarioFile {
  std::string base = "Q";
  std::vector<std::string> base_gens;
  std::vector<std::string> field_gens;
  std::vector<std::string> vars;
  std::string order = "lex";
  std::vector<std::string> kprime_gens;
  std::optional<int> truncation;
  int point_index = 0;
  std::uint64_t seed = 0;
  // Line of each key, for error messages; not part of the value.
  std::map<std::string, int> lines;

  bool has_valuation() const { return !vars.empty(); }
  // Canonical text; parse_scenario(print()) reproduces the scenario.
  std::string print() const;
  friend bool operator==(const ScenarioFile& a, const ScenarioFile& b);
};

ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario(const std::string& path);

struct CompositumTriple {
  FieldPtr K, L, M;
};

// Tower construction errors are reported as ParseError with the line of the offending key.
CompositumTriple to_triple(const ScenarioFile& s);
ExtensionScenario to_extension(const ScenarioFile& s);

// Commands. Exit codes: 0 success, 1 parse or input error, 2 capability, 3 precondition, 4 selftest failure.
int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err);

struct ExtendOptions {
  bool verify = false;
  std::optional<int> point;
  std::optional<int> truncate;
};
int cmd_extend(const std::string& path, const ExtendOptions& opts, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> golden_file;  // "name<TAB>expected" lines overriding the built-in values
  bool dump_golden = false;
  int property_samples = 60;
};
int cmd_selftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace valext
