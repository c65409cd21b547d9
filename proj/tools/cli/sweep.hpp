#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace cansub::cli {

/// Grid description for `cansub sweep`. Field names match the JSON keys.
struct SweepConfig {
  std::vector<std::int64_t> primes;
  int h_power = 2;  // h grid: denominators dividing p^h_power (p+1)
  int k_max = 3;
  int ht_levels = 2;  // extra levels past the minimal one for the k-stability check
  int m_min = 1;
  int m_max = 2;
  int c_min = 1;
  std::optional<int> c_max;  // defaults to m
  int v_power = 2;           // v grid, same shape as the h grid
  int ordinary_depth_bound = 3;
  Format format = Format::kJsonLines;
  unsigned workers = 0;
  bool inject_fault = false;  // shifts every finite closed-form torsion value by 1
};

/// Unknown keys, wrong types and out-of-range values all raise kMalformedConfig.
SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

struct SweepResult {
  std::vector<Record> records;  // grid order, then one summary record
  bool all_passed = true;
};

SweepResult run_sweep(const SweepConfig& config);

}  // namespace cansub::cli
