#pragma once

#include <cstddef>
#include <vector>

#include "cansub/curve_params.hpp"
#include "cansub/newton_polygon.hpp"
#include "cansub/valext.hpp"

namespace cansub {

/// A formal-group point P of exact order p^k whose canonical-contact depth is a,
/// i.e. a is maximal with p^(k-a) P in the canonical subgroup of order p^a.
struct TorsionDescriptor {
  int k = 1;
  int a = 0;

  friend bool operator==(const TorsionDescriptor&, const TorsionDescriptor&) = default;
};

/// Depths a that describe an actual point at this (p, h, k):
/// {k} when h == 0, {0} when h >= p/(p+1) (no canonical data), else 0..min(k, n).
std::vector<int> admissible_depths(const CurveParams& params, int k);

/// Throws kInvalidDescriptor unless 1 <= k, 0 <= a <= k and
/// a <= n (0 < h < p/(p+1)) or a == k (h == 0). For h >= p/(p+1) any such a is accepted.
void validate_descriptor(const CurveParams& params, TorsionDescriptor desc);

/// v(P) from the closed-form case table.
ValExt closed_form_valuation(const CurveParams& params, TorsionDescriptor desc);

/// One level of the oracle's descent: the polygon whose roots are the
/// candidates for p^(k-level) P, and the branch that was taken.
struct OracleStep {
  int level = 1;
  int depth = 0;
  NewtonPolygon polygon;
  std::vector<SlopeSegment> segments;
  std::size_t chosen = 0;

  const Rational& valuation() const { return segments[chosen].valuation; }
};

/// Recomputes v(P) with no closed forms: starts from the roots of [p](T),
/// then lifts through [p](T) - T(pP) once per level, taking at each level the
/// segment matching the point's depth there (min(a, level)).
///
/// In a height-two polygon the canonical branch is the segment of largest
/// valuation and the non-canonical one is the segment ending at (p^2, 0); once
/// a point has left the canonical tower its lift polygon must be a single
/// segment. A height-one polygon (h == 0) carries only canonical roots.
/// Any violation throws kOracleBranchMismatch.
std::vector<OracleStep> oracle_trace(const CurveParams& params, TorsionDescriptor desc);

ValExt oracle_valuation(const CurveParams& params, TorsionDescriptor desc);

struct ProfileEntry {
  TorsionDescriptor desc;
  ValExt value;
};

/// closed_form_valuation at every admissible depth, ordered by a.
std::vector<ProfileEntry> valuation_profile(const CurveParams& params, int k);

}  // namespace cansub
