#pragma once

#include <vector>

#include "cansub/curve_params.hpp"
#include "cansub/valext.hpp"

namespace cansub {

/// A primitive Tate-module class x, recorded by the curve data and the depth a:
/// the largest a <= n with ker(x^dual)[p^a] inside the canonical subgroup of
/// order p^a. a = INF (HT(x) = 0) only happens on ordinary curves.
class HTClass {
 public:
  /// Throws kInvalidDescriptor for a = INF with h > 0, or a > n when 0 < h < p/(p+1).
  /// For h >= p/(p+1) any finite a is accepted and has no effect.
  HTClass(CurveParams params, ExtNat a);

  const CurveParams& params() const noexcept { return params_; }
  ExtNat a() const noexcept { return a_; }

 private:
  CurveParams params_;
  ExtNat a_;
};

/// Depths worth enumerating at (p, h). Ordinary curves admit every finite a
/// and INF; `ordinary_bound` caps the finite part there.
std::vector<ExtNat> admissible_ht_depths(const CurveParams& params, int ordinary_bound);

/// Smallest k the summation is taken at: n+1 for finite n (1 when h >= p/(p+1)),
/// a+1 for ordinary curves.
int fargues_min_level(const HTClass& cls);

/// v(HT(x)) = p/(p-1) * sum_{Q in <P>\0} v(Q) - 1/(p-1) * sum_{Q in <pP>\0} v(Q)
/// for P in ker(x^dual) of exact order p^k, summed exactly over the cyclic
/// group: level j holds p^j - p^(j-1) points, each at depth min(a, j). Points
/// outside the formal group (ordinary curves, depth < level) have valuation 0.
/// Throws kInsufficientLevel for k < fargues_min_level.
ValExt fargues_sum(const HTClass& cls, int k);

/// The closed-form value of v(HT(x)):
///   a + h/(p-1)                             a < n (including all finite a when h == 0)
///   n + 1/(p-1) - (p^n + p^(n-1) - 1)h/(p-1) a == n, 0 < h < p/(p+1)
///   INF                                     h == 0, a == INF
///   p/((p-1)(p+1))                          h >= p/(p+1)
ValExt ht_closed_form(const HTClass& cls);

/// The three sides of n-1 + h/(p-1) < [a == n value] <= n + h/(p-1).
struct RemarkBounds {
  Rational lower;
  Rational middle;
  Rational upper;

  bool left_strict() const { return lower < middle; }
  bool right_holds() const { return middle <= upper; }
  bool right_equality() const { return middle == upper; }
  bool holds() const { return left_strict() && right_holds(); }
};

/// Throws kOutOfRange unless 0 < h < p/(p+1).
RemarkBounds remark_bounds(const CurveParams& params);
bool remark_inequalities(const CurveParams& params);

/// Valuation of the generator of omega^+: h/(p-1) below p/(p+1), p/((p-1)(p+1)) from there on.
Rational omega_plus_valuation(const CurveParams& params);

/// prod over units l mod p^c of p^scale_val * (x_l + p^(radius_val - scale_val) O).
struct BallUnion {
  Rational scale_val;
  int modulus_exponent = 1;
  Rational radius_val;
  bool disjoint = false;  // radius_val - scale_val > modulus_exponent - 1

  Rational radius_gap() const { return radius_val - scale_val; }
};

BallUnion make_ball_union(Rational scale_val, int modulus_exponent, Rational radius_val);

/// The image of HT over a level-p^m point, grouped by residues mod p^c.
/// Throws kInvalidInput unless 1 <= c <= m; kDegenerateImage if v(HT) is INF.
BallUnion ht_image_balls(const HTClass& cls, int m, int c);

/// HT(x) is nonzero modulo p^m omega^+: v(HT) < m + v(omega^+).
bool nonvanishing_check(const HTClass& cls, int m);

/// Whether a u-locally analytic weight gives an invertible sheaf over a fiber
/// whose image is `ball`: the balls are disjoint, c < u + 1, and each ball's
/// relative radius exponent is at least u.
bool invertibility_verdict(const Rational& u, int c, const BallUnion& ball);

}  // namespace cansub
