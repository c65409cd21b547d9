#include "cansub/hodge_tate.hpp"

#include <algorithm>

#include "cansub/error.hpp"
#include "cansub/torsion.hpp"

namespace cansub {

HTClass::HTClass(CurveParams params, ExtNat a) : params_(std::move(params)), a_(a) {
  if (a_.is_inf()) {
    if (params_.reduction() != Reduction::kOrdinary) {
      throw Error(ErrorKind::kInvalidDescriptor, "a = inf requires h = 0");
    }
    return;
  }
  if (a_.value() < 0) throw Error(ErrorKind::kInvalidDescriptor, "negative depth");
  if (params_.reduction() == Reduction::kCanonical && a_ > params_.n()) {
    throw Error(ErrorKind::kInvalidDescriptor,
                "a = " + a_.to_string() + " exceeds n = " + params_.n().to_string());
  }
}

std::vector<ExtNat> admissible_ht_depths(const CurveParams& params, int ordinary_bound) {
  std::vector<ExtNat> depths;
  switch (params.reduction()) {
    case Reduction::kTooSupersingular:
      depths.emplace_back(0);
      break;
    case Reduction::kCanonical:
      for (int a = 0; a <= params.n().value(); ++a) depths.emplace_back(a);
      break;
    case Reduction::kOrdinary:
      for (int a = 0; a <= ordinary_bound; ++a) depths.emplace_back(a);
      depths.push_back(ExtNat::inf());
      break;
  }
  return depths;
}

int fargues_min_level(const HTClass& cls) {
  const auto& params = cls.params();
  switch (params.reduction()) {
    case Reduction::kTooSupersingular: return 1;
    case Reduction::kCanonical: return params.n().value() + 1;
    case Reduction::kOrdinary: return cls.a().is_inf() ? 1 : cls.a().value() + 1;
  }
  return 1;
}

ValExt fargues_sum(const HTClass& cls, int k) {
  const auto& params = cls.params();
  if (k < fargues_min_level(cls)) {
    throw Error(ErrorKind::kInsufficientLevel,
                "k = " + std::to_string(k) + " below " + std::to_string(fargues_min_level(cls)));
  }
  if (cls.a().is_inf()) return ValExt::inf();

  const auto p = params.p();
  const bool ordinary = params.reduction() == Reduction::kOrdinary;
  const int a = params.reduction() == Reduction::kTooSupersingular ? 0 : cls.a().value();

  Rational top;    // points of exact order p^k
  Rational lower;  // <pP> \ {0}
  for (int j = 1; j <= k; ++j) {
    const int depth = std::min(a, j);
    Rational v;
    if (!(ordinary && depth < j)) v = closed_form_valuation(params, {j, depth}).value();
    Rational level_sum = (power(p, j) - power(p, j - 1)) * v;
    if (j == k) {
      top = level_sum;
    } else {
      lower += level_sum;
    }
  }
  // p/(p-1) (top + lower) - 1/(p-1) lower
  return ValExt(Rational((p * top + (p - 1) * lower) / (p - 1)));
}

ValExt ht_closed_form(const HTClass& cls) {
  const auto& params = cls.params();
  const auto p = params.p();
  const Rational& h = params.h();
  switch (params.reduction()) {
    case Reduction::kTooSupersingular:
      return ValExt(make_rational(p, (p - 1) * (p + 1)));
    case Reduction::kOrdinary:
      if (cls.a().is_inf()) return ValExt::inf();
      return ValExt(cls.a().value());
    case Reduction::kCanonical:
      break;
  }
  const int n = params.n().value();
  const int a = cls.a().value();
  if (a < n) return ValExt(Rational(a + h / (p - 1)));
  return ValExt(Rational(n + make_rational(1, p - 1) - (power(p, n) + power(p, n - 1) - 1) * h / (p - 1)));
}

RemarkBounds remark_bounds(const CurveParams& params) {
  if (params.reduction() != Reduction::kCanonical) {
    throw Error(ErrorKind::kOutOfRange, "remark bounds need 0 < h < p/(p+1)");
  }
  const auto p = params.p();
  const int n = params.n().value();
  const Rational drift = params.h() / (p - 1);
  RemarkBounds bounds;
  bounds.lower = n - 1 + drift;
  bounds.middle = ht_closed_form(HTClass(params, ExtNat(n))).value();
  bounds.upper = n + drift;
  return bounds;
}

bool remark_inequalities(const CurveParams& params) { return remark_bounds(params).holds(); }

Rational omega_plus_valuation(const CurveParams& params) {
  const auto p = params.p();
  if (params.h() < params.threshold()) return params.h() / (p - 1);
  return make_rational(p, (p - 1) * (p + 1));
}

BallUnion make_ball_union(Rational scale_val, int modulus_exponent, Rational radius_val) {
  BallUnion ball{std::move(scale_val), modulus_exponent, std::move(radius_val), false};
  ball.disjoint = ball.radius_gap() > modulus_exponent - 1;
  return ball;
}

BallUnion ht_image_balls(const HTClass& cls, int m, int c) {
  if (c < 1 || c > m) throw Error(ErrorKind::kInvalidInput, "need 1 <= c <= m");
  ValExt scale = ht_closed_form(cls);
  if (scale.is_inf()) throw Error(ErrorKind::kDegenerateImage, "Hodge-Tate image is zero");
  return make_ball_union(scale.value(), c, m + omega_plus_valuation(cls.params()));
}

bool nonvanishing_check(const HTClass& cls, int m) {
  return ht_closed_form(cls) < ValExt(Rational(m + omega_plus_valuation(cls.params())));
}

bool invertibility_verdict(const Rational& u, int c, const BallUnion& ball) {
  return ball.disjoint && c < u + 1 && ball.radius_gap() >= u;
}

}  // namespace cansub
