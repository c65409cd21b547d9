#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace cansub::cli {

/// Raw command-line values. Rationals stay strings until a command parses
/// them, so malformed input surfaces as kInvalidInput from the library.
struct CommandArgs {
  std::int64_t p = 2;
  std::string h = "0";
  int k = 1;
  std::string a = "0";
  std::optional<int> m;
  std::optional<int> c;
  std::optional<std::string> u;
  std::optional<std::string> v;
  bool profile = false;
  bool non_canonical = false;
};

std::vector<Record> cmd_torsion(const CommandArgs& args);
std::vector<Record> cmd_ht(const CommandArgs& args);
std::vector<Record> cmd_region(const CommandArgs& args);
std::vector<Record> cmd_succ(const CommandArgs& args);
std::vector<Record> cmd_cutoff(const CommandArgs& args);
std::vector<Record> cmd_inject(const CommandArgs& args);
std::vector<Record> cmd_plan(const CommandArgs& args);

}  // namespace cansub::cli
