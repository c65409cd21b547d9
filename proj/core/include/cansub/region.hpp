#pragma once

#include <cstdint>
#include <vector>

#include "cansub/curve_params.hpp"
#include "cansub/hodge_tate.hpp"
#include "cansub/valext.hpp"

namespace cansub {

/// A point (E, C) of X0(p), or the level-p part (E, C^m[p]) of a point of
/// X0(p^m). `canonical` says whether C is the canonical subgroup; it is
/// ignored when h >= p/(p+1).
struct RegionPoint {
  CurveParams params;
  bool canonical = true;
};

/// A weight that is u-locally analytic, paired with the modulus exponent c it is used at.
struct WeightSpec {
  Rational u;
  int c = 1;

  /// Throws kInvalidInput unless u > 0, c >= 1 and c < u + 1.
  void validate() const;
};

/// Buzzard's coordinate along the supersingular tube; 0 at the canonical
/// ordinary end, 1 at the etale ordinary end.
Rational buzzard_v(const RegionPoint& pt);

/// Membership in X0(p^m)[0, v], i.e. buzzard_v of the level-p part is at most v.
/// Throws kOutOfRange unless 0 <= v <= 1 and m >= 1.
bool region_member(const RegionPoint& pt, int m, const Rational& v);

/// Radius U_p improves [0, v] to: pv below p/(p+1); otherwise 1 - 1/(p^n (p+1))
/// for the n >= 1 with 1 - 1/(p^(n-1)(p+1)) <= v < 1 - 1/(p^n (p+1)).
/// Throws kOutOfRange unless 0 < v < 1.
Rational succ(std::int64_t p, const Rational& v);

struct SuccOrbit {
  int steps = 0;
  std::vector<Rational> values;  // v, succ(v), ..., succ^steps(v)
};

/// Iterates succ, with the pv branch capped at p/(p+1), until the value
/// reaches `target`. Throws kOutOfRange unless 0 < v < 1 and 0 < target < 1.
SuccOrbit succ_orbit(std::int64_t p, const Rational& v, const Rational& target);

/// v_m for weights u-locally analytic for all u > c: 1 - 1/(p^(m-c)(p+1)).
/// Throws kOutOfRange unless 1 <= c <= m.
Rational invertibility_cutoff(std::int64_t p, int m, int c);

/// Depths a of v(HT(C^m)) a point can carry. A canonical level-p part makes
/// the dual of C^m etale, so a = 0; a non-canonical one allows 0..n, or INF on
/// an ordinary curve.
std::vector<ExtNat> region_ht_depths(const RegionPoint& pt);

struct SoundnessReport {
  int checks = 0;
  int nonvanishing_failures = 0;
  int disjointness_failures = 0;

  bool ok() const { return nonvanishing_failures == 0 && disjointness_failures == 0; }
};

/// For a point inside X0(p^m)[0, v] with v below the (m, c) cutoff, checks
/// every admissible depth: HT(C^m) nonzero mod p^m and the image balls
/// disjoint mod p^c. Points at or beyond the cutoff are reported with zero checks.
SoundnessReport cutoff_soundness(const RegionPoint& pt, int m, int c, const Rational& v);

}  // namespace cansub
