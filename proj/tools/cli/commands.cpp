#include "cli/commands.hpp"

#include "cansub/error.hpp"
#include "cansub/hodge_tate.hpp"
#include "cansub/properness.hpp"
#include "cansub/region.hpp"
#include "cansub/torsion.hpp"

namespace cansub::cli {

namespace {

std::string str(const Rational& q) { return format_rational(q); }

CurveParams curve(const CommandArgs& args) { return CurveParams(args.p, parse_rational(args.h)); }

Record curve_fields(const char* command, const CurveParams& params) {
  Record r;
  r["command"] = command;
  r["p"] = params.p();
  r["h"] = str(params.h());
  r["n"] = params.n().to_string();
  return r;
}

const std::string& require(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw Error(ErrorKind::kInvalidInput, std::string("missing required flag ") + flag);
  return *value;
}

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw Error(ErrorKind::kInvalidInput, std::string("missing required flag ") + flag);
  return *value;
}

Record torsion_record(const CurveParams& params, TorsionDescriptor desc) {
  ValExt closed = closed_form_valuation(params, desc);
  ValExt oracle = oracle_valuation(params, desc);
  Record r = curve_fields("torsion", params);
  r["k"] = desc.k;
  r["a"] = desc.a;
  r["closed_form"] = closed.to_string();
  r["oracle"] = oracle.to_string();
  r["oracle_match"] = closed == oracle;
  return r;
}

}  // namespace

std::vector<Record> cmd_torsion(const CommandArgs& args) {
  CurveParams params = curve(args);
  std::vector<Record> out;
  if (args.profile) {
    for (const auto& entry : valuation_profile(params, args.k)) out.push_back(torsion_record(params, entry.desc));
    return out;
  }
  ExtNat a = ExtNat::parse(args.a);
  if (a.is_inf()) throw Error(ErrorKind::kInvalidDescriptor, "torsion points have finite depth");
  out.push_back(torsion_record(params, {args.k, a.value()}));
  return out;
}

std::vector<Record> cmd_ht(const CommandArgs& args) {
  HTClass cls(curve(args), ExtNat::parse(args.a));
  const int level = fargues_min_level(cls);
  ValExt closed = ht_closed_form(cls);
  ValExt fargues = fargues_sum(cls, level);

  Record r = curve_fields("ht", cls.params());
  r["a"] = cls.a().to_string();
  r["v_ht"] = closed.to_string();
  r["fargues_k"] = level;
  r["fargues"] = fargues.to_string();
  r["fargues_match"] = closed == fargues;
  r["omega_plus"] = str(omega_plus_valuation(cls.params()));

  if (args.m || args.c) {
    const int m = require(args.m, "-m");
    const int c = args.c.value_or(m);
    r["m"] = m;
    r["c"] = c;
    r["nonvanishing"] = nonvanishing_check(cls, m);
    if (closed.is_inf()) {
      r["balls"] = "degenerate";
    } else {
      BallUnion ball = ht_image_balls(cls, m, c);
      r["scale_val"] = str(ball.scale_val);
      r["radius_val"] = str(ball.radius_val);
      r["radius_gap"] = str(ball.radius_gap());
      r["disjoint"] = ball.disjoint;
      if (args.u) {
        Rational u = parse_rational(*args.u);
        if (sgn(u) <= 0) throw Error(ErrorKind::kInvalidInput, "u must be positive");
        r["u"] = str(u);
        r["invertible"] = invertibility_verdict(u, c, ball);
      }
    }
  }
  return {r};
}

std::vector<Record> cmd_region(const CommandArgs& args) {
  RegionPoint pt{curve(args), !args.non_canonical};
  Record r = curve_fields("region", pt.params);
  r["canonical"] = pt.canonical;
  r["buzzard_v"] = str(buzzard_v(pt));
  if (args.v) {
    Rational v = parse_rational(*args.v);
    const int m = args.m.value_or(1);
    r["m"] = m;
    r["v"] = str(v);
    r["member"] = region_member(pt, m, v);
  }
  return {r};
}

std::vector<Record> cmd_succ(const CommandArgs& args) {
  Rational v = parse_rational(require(args.v, "-v"));
  Record r;
  r["command"] = "succ";
  r["p"] = args.p;
  r["v"] = str(v);
  r["succ"] = str(succ(args.p, v));
  return {r};
}

std::vector<Record> cmd_cutoff(const CommandArgs& args) {
  const int m = require(args.m, "-m");
  const int c = args.c.value_or(1);
  Record r;
  r["command"] = "cutoff";
  r["p"] = args.p;
  r["m"] = m;
  r["c"] = c;
  r["cutoff"] = str(invertibility_cutoff(args.p, m, c));
  return {r};
}

std::vector<Record> cmd_inject(const CommandArgs& args) {
  CircleSystem sys = circle_matrix(args.p);
  InjectivityVerdict verdict = injectivity_verdict(sys);
  bool replay_ok = true;
  for (const auto& t : elimination_transcripts(sys)) {
    auto row = replay_transcript(sys, t);
    for (std::size_t i = 0; i < row.size(); ++i) replay_ok = replay_ok && row[i] == (i == t.target ? 1 : 0);
  }
  Record r;
  r["command"] = "inject";
  r["p"] = args.p;
  r["size"] = sys.matrix.rows();
  r["det"] = str(verdict.determinant);
  r["invertible"] = verdict.invertible;
  r["kernel_dimension"] = verdict.kernel_dimension;
  r["transcripts_replay"] = replay_ok;
  return {r};
}

std::vector<Record> cmd_plan(const CommandArgs& args) {
  ExtensionPlan plan = extension_plan(args.p, parse_rational(require(args.v, "-v")));
  Record r;
  r["command"] = "plan";
  r["p"] = args.p;
  r["start_v"] = str(plan.start_v);
  r["steps"] = plan.steps;
  r["final_v"] = str(plan.final_v);
  Record orbit = Record::array();
  for (const auto& v : plan.orbit) orbit.push_back(str(v));
  r["orbit"] = orbit;
  return {r};
}

}  // namespace cansub::cli
