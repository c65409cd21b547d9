#include "cansub/region.hpp"

#include "cansub/error.hpp"

namespace cansub {

void WeightSpec::validate() const {
  if (sgn(u) <= 0 || c < 1 || !(c < u + 1)) {
    throw Error(ErrorKind::kInvalidInput, "weight needs u > 0 and 1 <= c < u + 1");
  }
}

Rational buzzard_v(const RegionPoint& pt) {
  const auto& params = pt.params;
  switch (params.reduction()) {
    case Reduction::kTooSupersingular:
      return params.threshold();
    case Reduction::kOrdinary:
      return Rational(pt.canonical ? 0 : 1);
    case Reduction::kCanonical:
      break;
  }
  if (pt.canonical) return params.h();
  return 1 - params.h() / params.p();
}

bool region_member(const RegionPoint& pt, int m, const Rational& v) {
  if (m < 1) throw Error(ErrorKind::kOutOfRange, "m must be at least 1");
  if (sgn(v) < 0 || v > 1) throw Error(ErrorKind::kOutOfRange, "v outside [0, 1]");
  return buzzard_v(pt) <= v;
}

Rational succ(std::int64_t p, const Rational& v) {
  if (sgn(v) <= 0 || v >= 1) throw Error(ErrorKind::kOutOfRange, "succ needs 0 < v < 1, got " + format_rational(v));
  if (v < supersingular_threshold(p)) return p * v;
  // upper = 1 - 1/(p^n (p+1)); the first n with v < upper.
  Rational gap = make_rational(1, p * (p + 1));
  while (v >= 1 - gap) gap /= p;
  return 1 - gap;
}

SuccOrbit succ_orbit(std::int64_t p, const Rational& v, const Rational& target) {
  if (sgn(v) <= 0 || v >= 1) throw Error(ErrorKind::kOutOfRange, "orbit start outside (0, 1)");
  if (sgn(target) <= 0 || target >= 1) throw Error(ErrorKind::kOutOfRange, "orbit target outside (0, 1)");
  const Rational cap = supersingular_threshold(p);
  SuccOrbit orbit;
  orbit.values.push_back(v);
  while (orbit.values.back() < target) {
    const Rational& cur = orbit.values.back();
    Rational next = succ(p, cur);
    if (cur < cap && next > cap) next = cap;
    orbit.values.push_back(std::move(next));
    ++orbit.steps;
  }
  return orbit;
}

Rational invertibility_cutoff(std::int64_t p, int m, int c) {
  if (m < 1 || c < 1 || c > m) throw Error(ErrorKind::kOutOfRange, "need 1 <= c <= m");
  return 1 - 1 / (power(p, m - c) * (p + 1));
}

std::vector<ExtNat> region_ht_depths(const RegionPoint& pt) {
  const auto& params = pt.params;
  switch (params.reduction()) {
    case Reduction::kTooSupersingular:
      return {ExtNat(0)};
    case Reduction::kOrdinary:
      return {pt.canonical ? ExtNat(0) : ExtNat::inf()};
    case Reduction::kCanonical:
      break;
  }
  if (pt.canonical) return {ExtNat(0)};
  std::vector<ExtNat> depths;
  for (int a = 0; a <= params.n().value(); ++a) depths.emplace_back(a);
  return depths;
}

SoundnessReport cutoff_soundness(const RegionPoint& pt, int m, int c, const Rational& v) {
  SoundnessReport report;
  if (!region_member(pt, m, v) || v >= invertibility_cutoff(pt.params.p(), m, c)) return report;
  for (ExtNat a : region_ht_depths(pt)) {
    HTClass cls(pt.params, a);
    ++report.checks;
    if (!nonvanishing_check(cls, m)) ++report.nonvanishing_failures;
    if (ht_closed_form(cls).is_inf() || !ht_image_balls(cls, m, c).disjoint) ++report.disjointness_failures;
  }
  return report;
}

}  // namespace cansub
