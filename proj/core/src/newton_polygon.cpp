#include "cansub/newton_polygon.hpp"

#include <algorithm>

#include "cansub/error.hpp"

namespace cansub {

namespace {

// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
Rational cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  return (a.x - o.x) * (b.y.value() - o.y.value()) - (a.y.value() - o.y.value()) * (b.x - o.x);
}

std::vector<PolygonPoint> multiplication_points(const CurveParams& params, ValExt constant_term) {
  const Rational p(params.p());
  std::vector<PolygonPoint> pts{{Rational(0), std::move(constant_term)}, {Rational(1), ValExt(1)}};
  switch (params.reduction()) {
    case Reduction::kOrdinary:
      pts.push_back({p, ValExt(0)});
      break;
    case Reduction::kCanonical:
      pts.push_back({p, ValExt(params.h())});
      pts.push_back({Rational(p * p), ValExt(0)});
      break;
    case Reduction::kTooSupersingular:
      pts.push_back({Rational(p * p), ValExt(0)});
      break;
  }
  return pts;
}

}  // namespace

Rational NewtonPolygon::finite_extent() const {
  auto first = std::find_if(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.y.is_finite(); });
  return vertices_.back().x - first->x;
}

NewtonPolygon lower_hull(std::vector<PolygonPoint> points) {
  if (points.size() < 2) throw Error(ErrorKind::kInvalidInput, "a Newton polygon needs at least two points");
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(points[i].x) < 0) throw Error(ErrorKind::kInvalidInput, "negative x coordinate");
    if (i > 0 && points[i].x == points[i - 1].x) {
      throw Error(ErrorKind::kInvalidInput, "duplicate x coordinate " + format_rational(points[i].x));
    }
  }

  std::vector<PolygonPoint> hull;
  const bool infinite_left = points.front().y.is_inf();
  if (infinite_left) hull.push_back(points.front());
  const std::size_t base = hull.size();

  for (auto& pt : points) {
    if (pt.y.is_inf()) continue;
    while (hull.size() >= base + 2 && sgn(cross(hull[hull.size() - 2], hull.back(), pt)) <= 0) hull.pop_back();
    hull.push_back(std::move(pt));
  }
  if (hull.size() == base) throw Error(ErrorKind::kInvalidInput, "no finite point");
  return NewtonPolygon(std::move(hull));
}

std::vector<SlopeSegment> root_valuations(const NewtonPolygon& polygon) {
  const auto& v = polygon.vertices();
  std::vector<SlopeSegment> segments;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1].y.is_inf()) continue;
    Rational run = v[i].x - v[i - 1].x;
    segments.push_back({Rational((v[i - 1].y.value() - v[i].y.value()) / run), run});
  }
  return segments;
}

NewtonPolygon mult_by_p_polygon(const CurveParams& params) {
  return lower_hull(multiplication_points(params, ValExt::inf()));
}

NewtonPolygon lift_polygon(const CurveParams& params, const ValExt& v_pP) {
  if (v_pP.is_finite() && sgn(v_pP.value()) <= 0) {
    throw Error(ErrorKind::kInvalidInput, "v(pP) must be positive, got " + v_pP.to_string());
  }
  return lower_hull(multiplication_points(params, v_pP));
}

}  // namespace cansub
