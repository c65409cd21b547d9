#include "cli/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cansub/error.hpp"
#include "cansub/grid.hpp"
#include "cansub/hodge_tate.hpp"
#include "cansub/properness.hpp"
#include "cansub/region.hpp"
#include "cansub/torsion.hpp"

namespace cansub::cli {

namespace {

[[noreturn]] void malformed(const std::string& detail) { throw Error(ErrorKind::kMalformedConfig, detail); }

int read_int(const nlohmann::json& doc, const char* key, int fallback, int minimum) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) malformed(std::string(key) + " must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < minimum || value > 1000) {
    malformed(std::string(key) + " = " + std::to_string(value) + " outside [" + std::to_string(minimum) + ", 1000]");
  }
  return static_cast<int>(value);
}

// Tallies one named invariant.
struct Check {
  const char* name;
  int runs = 0;
  int failures = 0;

  void record(bool ok) {
    ++runs;
    if (!ok) ++failures;
  }
};

struct Tally {
  std::vector<Check> checks;

  explicit Tally(std::initializer_list<const char*> names) {
    for (const char* n : names) checks.push_back({n});
  }
  Check& operator[](std::string_view name) {
    return *std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  }

  void write(Record& r) const {
    int runs = 0;
    int failures = 0;
    Record failed = Record::array();
    for (const auto& c : checks) {
      runs += c.runs;
      failures += c.failures;
      if (c.failures > 0) failed.push_back(c.name);
    }
    r["checks"] = runs;
    r["failures"] = failures;
    r["failed"] = failed;
    r["ok"] = failures == 0;
  }
};

std::string str(const Rational& q) { return format_rational(q); }

Record curve_record(const SweepConfig& cfg, std::int64_t p, const Rational& h) {
  CurveParams params(p, h);
  Tally tally{"torsion_oracle", "ht_fargues", "ht_stability", "remark", "minimization", "continuity",
              "region_soundness"};

  for (int k = 1; k <= cfg.k_max; ++k) {
    for (int a : admissible_depths(params, k)) {
      ValExt closed = closed_form_valuation(params, {k, a});
      if (cfg.inject_fault && closed.is_finite()) closed = closed + ValExt(1);
      tally["torsion_oracle"].record(closed == oracle_valuation(params, {k, a}));
    }
  }

  Record ht_values = Record::array();
  std::optional<ValExt> ht_min;
  for (ExtNat a : admissible_ht_depths(params, cfg.ordinary_depth_bound)) {
    HTClass cls(params, a);
    const ValExt closed = ht_closed_form(cls);
    const int level = fargues_min_level(cls);
    const ValExt first = fargues_sum(cls, level);
    tally["ht_fargues"].record(first == closed);
    for (int k = level + 1; k <= level + cfg.ht_levels; ++k) tally["ht_stability"].record(fargues_sum(cls, k) == first);
    ht_values.push_back(a.to_string() + ":" + closed.to_string());
    if (!ht_min || closed < *ht_min) ht_min = closed;
  }
  const Rational omega = omega_plus_valuation(params);
  tally["minimization"].record(ht_min && *ht_min == ValExt(omega));

  if (params.reduction() == Reduction::kCanonical) {
    const RemarkBounds bounds = remark_bounds(params);
    const int n = params.n().value();
    const bool at_lower_edge = h == 1 / (power(p, n - 1) * (p + 1));
    tally["remark"].record(bounds.holds() && bounds.right_equality() == at_lower_edge);
  }

  const Rational v_canonical = buzzard_v({params, true});
  const Rational v_other = buzzard_v({params, false});
  if (h == params.threshold()) tally["continuity"].record(v_canonical == params.threshold() && v_other == v_canonical);

  const auto v_grid = boundary_grid(p, cfg.v_power);
  for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
    const int c_top = std::min(cfg.c_max.value_or(m), m);
    for (int c = cfg.c_min; c <= c_top; ++c) {
      for (bool canonical : {true, false}) {
        for (const auto& v : v_grid) {
          const SoundnessReport report = cutoff_soundness({params, canonical}, m, c, v);
          if (report.checks > 0) tally["region_soundness"].record(report.ok());
        }
      }
    }
  }

  Record r;
  r["kind"] = "curve";
  r["p"] = p;
  r["h"] = str(h);
  r["n"] = params.n().to_string();
  r["omega_plus"] = str(omega);
  r["ht_values"] = ht_values;
  r["buzzard_v"] = str(v_canonical);
  r["buzzard_v_non_canonical"] = str(v_other);
  tally.write(r);
  return r;
}

Record succ_record(std::int64_t p, const Rational& v) {
  Tally tally{"succ_increase"};
  const Rational next = succ(p, v);
  tally["succ_increase"].record(next > v);
  Record r;
  r["kind"] = "succ";
  r["p"] = p;
  r["v"] = str(v);
  r["succ"] = str(next);
  tally.write(r);
  return r;
}

Record inject_record(std::int64_t p) {
  Tally tally{"determinant", "transcript_replay"};
  const CircleSystem sys = circle_matrix(p);
  const InjectivityVerdict verdict = injectivity_verdict(sys);
  const Rational expected = (p % 2 == 0) ? Rational(p) : Rational(-p);
  tally["determinant"].record(verdict.determinant == expected && verdict.invertible);
  for (const auto& t : elimination_transcripts(sys)) {
    const auto row = replay_transcript(sys, t);
    bool unit = true;
    for (std::size_t i = 0; i < row.size(); ++i) unit = unit && row[i] == (i == t.target ? 1 : 0);
    tally["transcript_replay"].record(unit);
  }
  Record r;
  r["kind"] = "inject";
  r["p"] = p;
  r["det"] = str(verdict.determinant);
  r["invertible"] = verdict.invertible;
  tally.write(r);
  return r;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  static const std::vector<std::string> known = {"primes", "h_power", "k_max", "ht_levels", "m_min",
                                                 "m_max", "c_min", "c_max", "v_power", "ordinary_depth_bound",
                                                 "format", "workers", "inject_fault"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) malformed("unknown key '" + key + "'");
  }

  SweepConfig cfg;
  if (!doc.contains("primes") || !doc["primes"].is_array()) malformed("primes must be a list");
  if (doc["primes"].empty()) malformed("primes is empty");
  for (const auto& entry : doc["primes"]) {
    if (!entry.is_number_integer()) malformed("primes must hold integers");
    const auto p = entry.get<std::int64_t>();
    if (!is_prime(p) || p > 1000) malformed(std::to_string(p) + " is not a prime below 1000");
    cfg.primes.push_back(p);
  }

  cfg.h_power = read_int(doc, "h_power", cfg.h_power, 1);
  cfg.k_max = read_int(doc, "k_max", cfg.k_max, 1);
  cfg.ht_levels = read_int(doc, "ht_levels", cfg.ht_levels, 0);
  cfg.m_min = read_int(doc, "m_min", cfg.m_min, 1);
  cfg.m_max = read_int(doc, "m_max", cfg.m_max, 1);
  cfg.c_min = read_int(doc, "c_min", cfg.c_min, 1);
  if (doc.contains("c_max")) cfg.c_max = read_int(doc, "c_max", 1, 1);
  cfg.v_power = read_int(doc, "v_power", cfg.v_power, 1);
  cfg.ordinary_depth_bound = read_int(doc, "ordinary_depth_bound", cfg.ordinary_depth_bound, 0);
  cfg.workers = static_cast<unsigned>(read_int(doc, "workers", 0, 0));
  if (cfg.m_max < cfg.m_min) malformed("m_max below m_min");
  if (cfg.c_max && *cfg.c_max < cfg.c_min) malformed("c_max below c_min");

  if (doc.contains("format")) {
    if (!doc["format"].is_string()) malformed("format must be a string");
    try {
      cfg.format = parse_format(doc["format"].get<std::string>());
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  if (doc.contains("inject_fault")) {
    if (!doc["inject_fault"].is_boolean()) malformed("inject_fault must be a boolean");
    cfg.inject_fault = doc["inject_fault"].get<bool>();
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot read config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_config(text.str());
}

SweepResult run_sweep(const SweepConfig& cfg) {
  // Flatten the grid first so output order is independent of the worker pool.
  enum class Kind { kCurve, kSucc, kInject };
  struct Task {
    Kind kind;
    std::int64_t p;
    Rational x;
  };
  std::vector<Task> tasks;
  for (auto p : cfg.primes) {
    for (const auto& h : boundary_grid(p, cfg.h_power)) tasks.push_back({Kind::kCurve, p, h});
    for (const auto& v : open_boundary_grid(p, cfg.v_power)) tasks.push_back({Kind::kSucc, p, v});
    tasks.push_back({Kind::kInject, p, Rational(0)});
  }

  SweepResult result;
  result.records = parallel_map<Record>(
      tasks.size(),
      [&](std::size_t i) {
        const Task& t = tasks[i];
        switch (t.kind) {
          case Kind::kCurve: return curve_record(cfg, t.p, t.x);
          case Kind::kSucc: return succ_record(t.p, t.x);
          case Kind::kInject: break;
        }
        return inject_record(t.p);
      },
      cfg.workers);

  int checks = 0;
  int failures = 0;
  int failed_records = 0;
  for (const auto& r : result.records) {
    checks += r["checks"].get<int>();
    failures += r["failures"].get<int>();
    if (!r["ok"].get<bool>()) ++failed_records;
  }
  result.all_passed = failures == 0;

  Record summary;
  summary["kind"] = "summary";
  summary["records"] = result.records.size();
  summary["checks"] = checks;
  summary["failures"] = failures;
  summary["failed_records"] = failed_records;
  summary["ok"] = result.all_passed;
  result.records.push_back(std::move(summary));
  return result;
}

}  // namespace cansub::cli
