#include "cansub/torsion.hpp"

#include <algorithm>

#include "cansub/error.hpp"

namespace cansub {

namespace {

std::string describe(const CurveParams& params, TorsionDescriptor desc) {
  return "(p=" + std::to_string(params.p()) + ", h=" + format_rational(params.h()) +
         ", k=" + std::to_string(desc.k) + ", a=" + std::to_string(desc.a) + ")";
}

int depth_at_level(const CurveParams& params, TorsionDescriptor desc, int level) {
  if (params.reduction() == Reduction::kTooSupersingular) return 0;
  return std::min(desc.a, level);
}

}  // namespace

std::vector<int> admissible_depths(const CurveParams& params, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidDescriptor, "k must be at least 1");
  switch (params.reduction()) {
    case Reduction::kOrdinary: return {k};
    case Reduction::kTooSupersingular: return {0};
    case Reduction::kCanonical: break;
  }
  std::vector<int> depths;
  for (int a = 0; a <= std::min(k, params.n().value()); ++a) depths.push_back(a);
  return depths;
}

void validate_descriptor(const CurveParams& params, TorsionDescriptor desc) {
  if (desc.k < 1 || desc.a < 0 || desc.a > desc.k) {
    throw Error(ErrorKind::kInvalidDescriptor, "need 1 <= k and 0 <= a <= k " + describe(params, desc));
  }
  switch (params.reduction()) {
    case Reduction::kOrdinary:
      if (desc.a != desc.k) {
        throw Error(ErrorKind::kInvalidDescriptor, "ordinary curve forces a = k " + describe(params, desc));
      }
      break;
    case Reduction::kCanonical:
      if (desc.a > params.n().value()) {
        throw Error(ErrorKind::kInvalidDescriptor,
                    "a exceeds canonical tower depth n=" + params.n().to_string() + " " + describe(params, desc));
      }
      break;
    case Reduction::kTooSupersingular:
      break;
  }
}

ValExt closed_form_valuation(const CurveParams& params, TorsionDescriptor desc) {
  validate_descriptor(params, desc);
  const auto p = params.p();
  const Rational& h = params.h();
  const int k = desc.k;
  const int a = desc.a;

  switch (params.reduction()) {
    case Reduction::kOrdinary:
      return ValExt(Rational(1 / (power(p, k - 1) * (p - 1))));
    case Reduction::kTooSupersingular:
      return ValExt(Rational(1 / (power(p, 2 * k - 2) * (p * p - 1))));
    case Reduction::kCanonical:
      break;
  }

  const int n = params.n().value();
  if (a == k) {
    return ValExt(Rational((1 - power(p, k - 1) * h) / (power(p, k - 1) * (p - 1))));
  }
  if (k >= n + 1 && a == n) {
    return ValExt(Rational((1 - power(p, n - 1) * h) / (power(p, 2 * k - n - 1) * (p - 1))));
  }
  return ValExt(Rational(h / (power(p, 2 * k - 2 * a - 1) * (p - 1))));
}

std::vector<OracleStep> oracle_trace(const CurveParams& params, TorsionDescriptor desc) {
  validate_descriptor(params, desc);
  const bool height_one = params.reduction() == Reduction::kOrdinary;

  std::vector<OracleStep> steps;
  steps.reserve(static_cast<std::size_t>(desc.k));
  ValExt below = ValExt::inf();  // v(pP) for the current level; INF means pP = 0
  int depth_below = 0;

  for (int level = 1; level <= desc.k; ++level) {
    OracleStep step{level, depth_at_level(params, desc, level), lift_polygon(params, below), {}, 0};
    step.segments = root_valuations(step.polygon);
    const auto count = step.segments.size();
    const bool canonical = step.depth == level;
    auto mismatch = [&](const char* why) {
      return Error(ErrorKind::kOracleBranchMismatch,
                   std::string(why) + " at level " + std::to_string(level) + " " + describe(params, desc));
    };

    if (count == 0) throw mismatch("polygon has no finite roots");
    if (height_one) {
      if (!canonical) throw mismatch("height-one polygon has no non-canonical branch");
      if (count != 1) throw mismatch("height-one polygon is not a single segment");
      step.chosen = 0;
    } else if (canonical) {
      if (count < 2) throw mismatch("no canonical branch");
      step.chosen = 0;
    } else {
      const bool left_tower_earlier = level > 1 && depth_below < level - 1;
      if (left_tower_earlier && count != 1) throw mismatch("lift of a non-canonical point is not a single segment");
      step.chosen = count - 1;
    }

    below = ValExt(step.valuation());
    depth_below = step.depth;
    steps.push_back(std::move(step));
  }
  return steps;
}

ValExt oracle_valuation(const CurveParams& params, TorsionDescriptor desc) {
  return ValExt(oracle_trace(params, desc).back().valuation());
}

std::vector<ProfileEntry> valuation_profile(const CurveParams& params, int k) {
  std::vector<ProfileEntry> profile;
  for (int a : admissible_depths(params, k)) {
    TorsionDescriptor desc{k, a};
    profile.push_back({desc, closed_form_valuation(params, desc)});
  }
  return profile;
}

}  // namespace cansub
